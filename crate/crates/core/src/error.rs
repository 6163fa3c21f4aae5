use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A builder or construction was called outside its parameter range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("generating set is not closed under inverses: {0} has inverse {1} outside the set")]
    NotInverseClosed(usize, usize),

    #[error("invalid mock threshold script: {0}")]
    InvalidScript(String),

    #[error("color matrix support mismatch at cell ({row}, {col}): {reason}")]
    SupportMismatch {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("no 1-factorization found after {nodes} search nodes")]
    NoFactorization { nodes: u64 },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("search cancelled")]
    Cancelled,

    /// A construction produced a coloring that failed verification. This is a
    /// coverage finding, never silently accepted.
    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
