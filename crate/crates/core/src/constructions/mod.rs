//! Total colorings built from explicit constructions, each checked by
//! [`verify`](crate::coloring::verify) before it is returned.

mod cayley;
mod mock;
mod odd;
mod poc;
mod unitary;

use serde::{Deserialize, Serialize};

use crate::coloring::{verify, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cayley::cayley_extend;
pub use mock::mock_threshold_total;
pub use odd::odd_graph_total;
pub use poc::{
    block_parameters, poc_any_odd, poc_augment, poc_base, poc_block, poc_block_with, poc_even,
    poc_grow, poc_shrink, extension_scope,
};
pub use unitary::unitary_total;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub coloring: TotalColoring,
    pub colors_used: usize,
    /// Color bound the construction promises.
    pub budget: usize,
    pub method: String,
    /// Fallback paths taken, in order.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub method: String,
    pub budget: usize,
    pub colors_used: usize,
    pub notes: Vec<String>,
}

impl ConstructionResult {
    /// Verifies `coloring` on `g` and checks the color count against `budget`.
    pub fn checked(
        g: &Graph,
        coloring: TotalColoring,
        budget: usize,
        method: impl Into<String>,
        notes: Vec<String>,
    ) -> Result<Self> {
        let method = method.into();
        let report = verify(g, &coloring);
        if !report.is_valid {
            return Err(Error::ConstructionFailed(format!(
                "{method}: {} violations, first {:?}",
                report.violations.len(),
                report.violations[0]
            )));
        }
        if report.colors_used > budget {
            return Err(Error::ConstructionFailed(format!(
                "{method}: {} colors exceed the bound {budget}",
                report.colors_used
            )));
        }
        Ok(ConstructionResult {
            coloring,
            colors_used: report.colors_used,
            budget,
            method,
            notes,
        })
    }

    pub fn envelope(&self) -> Envelope {
        Envelope {
            method: self.method.clone(),
            budget: self.budget,
            colors_used: self.colors_used,
            notes: self.notes.clone(),
        }
    }

    pub fn envelope_json(&self) -> String {
        serde_json::to_string_pretty(&self.envelope()).expect("plain struct")
    }
}
