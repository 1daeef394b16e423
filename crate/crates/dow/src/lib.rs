//! Double occurrence words: exhaustive enumeration, structural
//! classification, closed-form and recurrence counting, assembly-map
//! realizability, sequence-file interchange, and SVG diagram rendering.
//!
//! A *double occurrence word* (DOW) is a word in which every letter appears
//! exactly twice; a word with `n` distinct letters has size `n` and length
//! `2n`. Words are considered up to relabeling: the canonical representative
//! labels letters 1, 2, 3, ... in order of first occurrence. The crate
//! provides:
//!
//! - [`word`]: the [`Dow`] value type, canonical form, reversal, equivalence,
//!   palindrome testing, parsing, and formatting.
//! - [`classify`]: palindromes, irreducible factorizations, strong
//!   irreducibility, circle graphs, and the recursive decomposition of
//!   strongly irreducible words into a size-reducing pair.
//! - [`enumerate`]: lexicographic streaming of all canonical words of a given
//!   size, with class filters and budget guards.
//! - [`count`]: exact `BigInt` counting of each word class by closed form or
//!   recurrence, cross-checkable against enumeration.
//! - [`genome`]: signed permutation arrangements, the chord-endpoint map from
//!   arrangements to words, and realizability search.
//! - [`seqio`]: b-file parsing/formatting, table emission, and cross-checks
//!   against bundled reference sequences.
//! - [`render`]: deterministic SVG chord diagrams and linked (arc) diagrams.
//!
//! Enumeration costs grow factorially: there are `(2n-1)!!` words of size
//! `n`. Operations that walk the full space take a [`Budget`] and refuse
//! sizes beyond it rather than hanging.

pub mod classify;
pub mod count;
pub mod enumerate;
pub mod genome;
pub mod render;
pub mod seqio;
pub mod word;

use thiserror::Error;

pub use word::{Dow, Letter, Style, WordError};

/// Size ceilings for exhaustive operations.
///
/// `enumeration` caps the word size accepted by full-space walks
/// ((2n-1)!! words at size n); `arrangements` caps the arrangement length
/// accepted by assembly-map scans (2^k k! arrangements at length k, each
/// yielding a word of size k-1). Defaults are 8 for both, the largest sizes
/// that stay interactive; [`Budget::from_env`] lets the `DOW_BUDGET`
/// environment variable raise or lower both at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub enumeration: usize,
    pub arrangements: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("size {requested} exceeds budget {limit} for {operation}")]
pub struct BudgetError {
    pub operation: &'static str,
    pub requested: usize,
    pub limit: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 8,
            arrangements: 8,
        }
    }
}

impl Budget {
    /// Default budget, overridden by `DOW_BUDGET=<n>` when set and parseable.
    pub fn from_env() -> Self {
        match std::env::var("DOW_BUDGET")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            Some(n) => Budget {
                enumeration: n,
                arrangements: n,
            },
            None => Budget::default(),
        }
    }

    /// Errors when a whole-space walk over words of size `n` is out of budget.
    pub fn check_enumeration(&self, n: usize, operation: &'static str) -> Result<(), BudgetError> {
        if n > self.enumeration {
            Err(BudgetError {
                operation,
                requested: n,
                limit: self.enumeration,
            })
        } else {
            Ok(())
        }
    }

    /// Errors when a scan over arrangements of `k` segments is out of budget.
    pub fn check_arrangements(&self, k: usize, operation: &'static str) -> Result<(), BudgetError> {
        if k > self.arrangements {
            Err(BudgetError {
                operation,
                requested: k,
                limit: self.arrangements,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_budget() {
        let b = Budget::default();
        assert_eq!(b.enumeration, 8);
        assert_eq!(b.arrangements, 8);
    }

    #[test]
    fn budget_check_boundaries() {
        let b = Budget {
            enumeration: 5,
            arrangements: 3,
        };
        assert!(b.check_enumeration(5, "op").is_ok());
        let err = b.check_enumeration(6, "op").unwrap_err();
        assert_eq!(err.requested, 6);
        assert_eq!(err.limit, 5);
        assert!(b.check_arrangements(3, "op").is_ok());
        assert!(b.check_arrangements(4, "op").is_err());
    }
}
