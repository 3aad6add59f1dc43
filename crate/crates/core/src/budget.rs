use std::cell::Cell;

use thiserror::Error;

/// Default cap on expensive steps (closures or branch nodes) per solve.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("exceeded search budget of {limit} steps")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// Step counter shared by one exact search. Not `Sync`; each search owns one.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn charge(&self) -> Result<(), BudgetExceeded> {
        let used = self.used.get() + 1;
        if used > self.limit {
            return Err(BudgetExceeded { limit: self.limit });
        }
        self.used.set(used);
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
