//! Hermitian hulls `Hull_H(C) = C ∩ C^{⊥H}` and their classification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{CodeError, LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::gf4linalg::Gf4Matrix;

/// LCD (hull 0), self-orthogonal (hull = k) or a proper hull of dimension h.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HullClass {
    Lcd,
    SelfOrthogonal,
    Proper(usize),
}

impl fmt::Display for HullClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HullClass::Lcd => f.write_str("LCD"),
            HullClass::SelfOrthogonal => f.write_str("SELF_ORTHOGONAL"),
            HullClass::Proper(h) => write!(f, "PROPER({h})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullReport {
    pub hull_dim: usize,
    /// Rows span the hull; reduced row-echelon form, `hull_dim × n`.
    pub hull_basis: Gf4Matrix,
    pub class: HullClass,
}

impl HullReport {
    /// Pivot columns of the hull basis: an information set of the hull.
    pub fn information_set(&self) -> Vec<usize> {
        self.hull_basis.rref().1
    }
}

/// Hull dimension `k − rank(G·Ḡᵀ)` without building a basis.
pub fn hull_dimension(code: &LinearCode) -> usize {
    code.dimension() - code.generator().hermitian_gram().rank()
}

/// Hull dimension, basis and class. The basis is `{ū·G}` for `u` ranging
/// over a kernel basis of the Gram matrix `G·Ḡᵀ`.
pub fn hull_report(code: &LinearCode) -> HullReport {
    let g = code.generator();
    let k = code.dimension();
    // x·G is in the dual iff G·conj(x·G)ᵀ = Gram·x̄ᵀ = 0
    let kernel = g.hermitian_gram().kernel();
    let hull_dim = kernel.rows();
    let hull_basis = if hull_dim == 0 {
        Gf4Matrix::zeros(0, code.length())
    } else {
        let (r, pivots) = kernel
            .conj()
            .mul(g)
            .expect("kernel rows have length k")
            .rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    };
    // the zero code counts as self-orthogonal (it is even)
    let class = if hull_dim == k {
        HullClass::SelfOrthogonal
    } else if hull_dim == 0 {
        HullClass::Lcd
    } else {
        HullClass::Proper(hull_dim)
    };
    HullReport {
        hull_dim,
        hull_basis,
        class,
    }
}

/// Whether every codeword has even weight (over GF(4), exactly the
/// Hermitian self-orthogonal codes).
pub fn is_even(code: &LinearCode) -> Result<bool, CodeError> {
    is_even_capped(code, DEFAULT_ENUMERATION_CAP)
}

pub fn is_even_capped(code: &LinearCode, cap: usize) -> Result<bool, CodeError> {
    Ok(code.weight_distribution_capped(cap)?.is_even())
}

/// Hull dimensions of the punctured and of the shortened code on `coords`.
pub fn hull_of_shortening(
    code: &LinearCode,
    coords: &[usize],
) -> Result<(usize, usize), CodeError> {
    let punctured = code.puncture(coords)?;
    let shortened = code.shorten(coords)?;
    Ok((hull_dimension(&punctured), hull_dimension(&shortened)))
}

/// Hull computed as the plain intersection `C ∩ C^{⊥H}` of row spaces:
/// `dim(A ∩ B) = dim A + dim B − dim(A + B)`. Kept independent of the
/// Gram-kernel route in [`hull_report`].
pub fn hull_dimension_by_intersection(code: &LinearCode) -> usize {
    let dual = code.hermitian_dual();
    let sum = code
        .generator()
        .vstack(dual.generator())
        .expect("same length")
        .rank();
    code.dimension() + dual.dimension() - sum
}
