//! Searches for codes with one-dimensional Hermitian hull.
//!
//! For `k ≤ 3` the search is exhaustive over multiplicity vectors (codes
//! with no zero coordinate) with a recursion on `n − 1` covering codes that
//! have one. For larger `k` a seeded randomized search looks for witnesses.

mod geometry;
mod multiplicity;
mod random;

pub use multiplicity::{
    certify_nonexistence, clear_cache, exhaustive_dh, table1_vectors, Certification,
    NonexistenceCertificate,
};
pub use random::{random_search, random_search_with, RandomSearchConfig};

use std::fmt;

use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::construct::{simplex_length, FixtureCorpus};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("exhaustive search supports k ≤ 3, got k = {k}")]
    Unsupported { k: usize },
    #[error("invalid parameters n = {n}, k = {k}")]
    InvalidParameters { n: usize, k: usize },
    #[error("({n}, {k}, {d}) cannot be reduced by a simplex block")]
    NotReducible { n: usize, k: usize, d: usize },
    #[error("witness failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Result of a search for the largest `d` of an `[n, k, d]` code with
/// one-dimensional hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub n: usize,
    pub k: usize,
    /// Best distance among hull-1 codes seen; 0 when none was seen.
    pub best_d: usize,
    pub witness: Option<LinearCode>,
    /// Whether `best_d` is proven optimal.
    pub exhaustive: bool,
    /// Candidates examined: multiplicity vectors passing the distance
    /// constraints, or sampled generators.
    pub explored: u64,
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] hull 1: best_d = {}{}, explored = {}",
            self.n,
            self.k,
            self.best_d,
            if self.exhaustive { " (exhaustive)" } else { "" },
            self.explored
        )
    }
}

/// Where a witness for a table cell came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSource {
    Exhaustive,
    Stored,
}

/// A hull-1 `[n, k]` code of the best known distance for `n ≤ 12` (or any
/// `n` when `k ≤ 3`): from exhaustive search or the stored witness corpus.
pub fn witness_for(n: usize, k: usize) -> Option<(LinearCode, WitnessSource)> {
    if k <= 3 {
        let outcome = exhaustive_dh(n, k).ok()?;
        return outcome.witness.map(|w| (w, WitnessSource::Exhaustive));
    }
    FixtureCorpus::witnesses()
        .find(n, k)
        .map(|f| (f.code(), WitnessSource::Stored))
}

/// Strips one simplex block: `(n, k, d) ↦ (n − (4^k−1)/3, k, d − 4^{k−1})`.
///
/// Valid when every column multiplicity of an `[n, k, d]` code is at least
/// one, which holds for `k ≥ 3` whenever `4d − 3n ≥ 1`.
pub fn reduce_by_simplex(
    n: usize,
    k: usize,
    d: usize,
) -> Result<(usize, usize, usize), SearchError> {
    let not = SearchError::NotReducible { n, k, d };
    if k < 3 {
        return Err(not);
    }
    let block = simplex_length(k);
    let weight = 1usize << (2 * (k - 1));
    if n < block || d < weight || 4 * d < 3 * n + 1 {
        return Err(not);
    }
    let reduced = (n - block, k, d - weight);
    if reduced.0 < k {
        return Err(not);
    }
    Ok(reduced)
}
