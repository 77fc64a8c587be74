//! Bounded searches over integer ranges with an optional widening check.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Controls the range of candidate indices scanned by cover searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Overrides the computed range bound.
    pub bound: Option<i64>,
    /// Rescans with the bound enlarged by `n` and fails if anything new shows up.
    pub widen: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            bound: None,
            widen: cfg!(debug_assertions),
        }
    }
}

impl SearchOptions {
    pub fn unchecked() -> Self {
        SearchOptions {
            bound: None,
            widen: false,
        }
    }

    pub fn with_bound(bound: i64) -> Self {
        SearchOptions {
            bound: Some(bound),
            ..Self::default()
        }
    }

    /// Runs `scan` at the resolved bound and, when widening, again at
    /// `bound + step`, demanding identical results.
    pub(crate) fn run<T: Ord>(
        &self,
        default_bound: i64,
        step: i64,
        scan: impl Fn(i64) -> BTreeSet<T>,
    ) -> Result<BTreeSet<T>> {
        let bound = self.bound.unwrap_or(default_bound);
        let found = scan(bound);
        if self.widen && scan(bound + step).len() != found.len() {
            return Err(Error::SearchRangeTooSmall(step));
        }
        Ok(found)
    }
}
