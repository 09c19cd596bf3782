//! Node budgets for backtracking searches.
//!
//! Every search in this crate counts one node per attempted assignment and
//! stops cleanly once the budget is spent, so "no witness exists" (a full
//! exhaustion of the tree) is always reported distinctly from "ran out of
//! budget".

use std::sync::atomic::{AtomicU64, Ordering};

/// Default node budget used when callers do not specify one.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// A shared countdown of search nodes. Cheap to clone handles are not needed:
/// searches borrow the budget, so one budget can span several search levels.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// An effectively unlimited budget, for callers that want exhaustion.
    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Registers one search node. Returns `false` once the budget is spent.
    #[inline]
    pub fn tick(&self) -> bool {
        self.used.fetch_add(1, Ordering::Relaxed) < self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Splits the remaining budget into `n` equal independent shares. Used by
    /// parallel top-level branch exploration so the outcome stays
    /// deterministic regardless of scheduling.
    pub fn split(&self, n: usize) -> Vec<Budget> {
        let remaining = self.limit.saturating_sub(self.used());
        let share = if n == 0 { remaining } else { remaining / n as u64 };
        (0..n).map(|_| Budget::new(share)).collect()
    }

    /// Absorbs the node count of a child budget created by [`Budget::split`].
    pub fn absorb(&self, child: &Budget) {
        self.used.fetch_add(child.used(), Ordering::Relaxed);
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}

/// Outcome of a budgeted backtracking search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    /// A witness was found (and verified where the search promises so).
    Found(T),
    /// The whole search tree was exhausted: no witness exists.
    Exhausted,
    /// The node budget ran out before the tree was exhausted.
    OutOfBudget,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Exhausted => SearchOutcome::Exhausted,
            SearchOutcome::OutOfBudget => SearchOutcome::OutOfBudget,
        }
    }
}
