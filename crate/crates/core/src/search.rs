//! Node budgets and cooperative cancellation for the backtracking searches.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

/// Default node budget for exact searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Shared flag a caller can raise to stop a running search.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Debug)]
pub struct SearchLimits {
    pub budget: u64,
    pub cancel: Option<CancelToken>,
}

impl SearchLimits {
    pub fn with_budget(budget: u64) -> Self {
        SearchLimits {
            budget,
            cancel: None,
        }
    }

    pub fn cancelled_by(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self::with_budget(DEFAULT_BUDGET)
    }
}

/// Why a search stopped before finishing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interrupt {
    Budget,
    Cancelled,
}

/// Node counter checked once per expanded node.
#[derive(Debug)]
pub struct Meter<'a> {
    limits: &'a SearchLimits,
    pub nodes: u64,
}

impl<'a> Meter<'a> {
    pub fn new(limits: &'a SearchLimits) -> Self {
        Meter { limits, nodes: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Interrupt> {
        self.nodes += 1;
        if self.nodes > self.limits.budget {
            return Err(Interrupt::Budget);
        }
        // Checking the atomic every node is cheap but not free.
        if self.nodes & 0x3ff == 0 {
            if let Some(token) = &self.limits.cancel {
                if token.is_cancelled() {
                    return Err(Interrupt::Cancelled);
                }
            }
        }
        Ok(())
    }
}
