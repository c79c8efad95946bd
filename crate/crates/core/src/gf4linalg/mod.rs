//! Exact arithmetic in GF(4) and dense linear algebra over it.

mod element;
mod matrix;

pub use element::Gf4;
pub use matrix::{hermitian_dot, Gf4Matrix};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("row {row}: '{token}' is not a GF(4) symbol")]
    BadSymbol { row: usize, token: String },
}
