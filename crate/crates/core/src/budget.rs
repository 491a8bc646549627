//! Work caps for enumerations whose cost grows with word arity.

use crate::error::{Error, Result};

/// Default number of evaluations allowed per enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "RELCOMM_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    /// # Panics
    /// If `limit` is zero.
    pub fn new(limit: u64) -> Self {
        assert!(limit > 0, "budget must be positive");
        Budget { limit }
    }

    /// The default, unless `RELCOMM_BUDGET` holds a positive integer.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(BUDGET_ENV) {
            Err(_) => Ok(Budget::default()),
            Ok(v) => match v.trim().parse::<u64>() {
                Ok(n) if n > 0 => Ok(Budget::new(n)),
                _ => Err(format!("{BUDGET_ENV} must be a positive integer, got `{v}`")),
            },
        }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn check(&self, context: &'static str, arity: usize, estimate: u128) -> Result<()> {
        if estimate > self.limit as u128 {
            Err(Error::BudgetExceeded {
                context,
                arity,
                estimate,
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` without overflow.
pub(crate) fn pow(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}
