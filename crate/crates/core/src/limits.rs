use crate::error::{Error, Result};

/// Hard ceiling for [`Limits::arity_cap`].
pub const HARD_ARITY_CAP: u32 = 20;
/// Hard ceiling for [`Limits::enumeration_cap`].
pub const HARD_ENUMERATION_CAP: u32 = 4;
/// Hard ceiling for [`Limits::pattern_limit`].
pub const HARD_PATTERN_LIMIT: usize = 16;
/// Hard ceiling for [`Limits::exact_arity_cap`].
pub const HARD_EXACT_ARITY_CAP: u32 = 4;

/// Resource caps shared by all operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest arity for the decrease dynamic programs (and, in synthesis,
    /// for the original variables plus all pseudo-inputs).
    pub arity_cap: u32,
    /// Largest arity for literal enumeration of every chain.
    pub enumeration_cap: u32,
    /// Largest number of distinct patterns in a pool when listing its
    /// monotone signals.
    pub pattern_limit: usize,
    /// Largest arity accepted by the exact search.
    pub exact_arity_cap: u32,
    /// Budget of generator evaluations for one exact search.
    pub candidate_limit: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            arity_cap: 12,
            enumeration_cap: 4,
            pattern_limit: 16,
            exact_arity_cap: 4,
            candidate_limit: 200_000_000,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        let check = |what, value: u64, limit: u64| {
            if value > limit {
                Err(Error::ResourceLimit { what, value, limit })
            } else {
                Ok(())
            }
        };
        check("arity cap", self.arity_cap as u64, HARD_ARITY_CAP as u64)?;
        check(
            "chain enumeration cap",
            self.enumeration_cap as u64,
            HARD_ENUMERATION_CAP as u64,
        )?;
        check(
            "pattern limit",
            self.pattern_limit as u64,
            HARD_PATTERN_LIMIT as u64,
        )?;
        check(
            "exact arity cap",
            self.exact_arity_cap as u64,
            HARD_EXACT_ARITY_CAP as u64,
        )
    }

    pub(crate) fn require_arity(&self, what: &'static str, arity: u32, cap: u32) -> Result<()> {
        if arity > cap {
            return Err(Error::ResourceLimit {
                what,
                value: arity as u64,
                limit: cap as u64,
            });
        }
        Ok(())
    }
}
