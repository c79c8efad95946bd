//! Simplex codes, multiplicity-vector codes and the simplex padding moves.

mod fixtures;

pub use fixtures::{fixture, Fixture, FixtureCorpus, FixtureError, MatrixRole};

use thiserror::Error;

use crate::code::{CodeError, LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::gf4linalg::{Gf4, Gf4Matrix};
use crate::hull::hull_dimension;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("selected columns have rank {rank} < k = {k}")]
    RankDeficient { k: usize, rank: usize },
    #[error("multiplicity vector for k = {k} needs {expected} entries, found {found}")]
    WrongLength {
        k: usize,
        expected: usize,
        found: usize,
    },
    #[error("simplex padding needs dimension at least 2, got {k}")]
    DimensionTooSmall { k: usize },
    #[error("minimum distance {d} does not exceed 4^(k-1)·s = {threshold}")]
    DistanceTooSmall { d: usize, threshold: usize },
    #[error("code of length {n} is too short to hold {s} simplex blocks")]
    TooShort { n: usize, s: usize },
    #[error("no pair of proportional columns")]
    NotFound,
    #[error("expected a one-dimensional Hermitian hull, found {hull_dim}")]
    WrongHullDimension { hull_dim: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Number of projective points of PG(k−1, 4): `(4^k − 1)/3`.
pub fn simplex_length(k: usize) -> usize {
    ((1usize << (2 * k)) - 1) / 3
}

/// The `k × (4^k − 1)/3` matrix `S_k` from the recursion
/// `S_1 = (1)`, `S_k = [S_{k−1} 0 S_{k−1} S_{k−1} S_{k−1}; 0 1 1 ω1 ω²1]`.
/// Column order is fixed: it indexes multiplicity vectors.
pub fn simplex_matrix(k: usize) -> Gf4Matrix {
    assert!(k >= 1, "simplex needs k ≥ 1");
    let mut cols: Vec<Vec<Gf4>> = vec![vec![Gf4::ONE]];
    for _ in 2..=k {
        let mut next = Vec::with_capacity(4 * cols.len() + 1);
        let height = cols[0].len();
        let lift = |c: &Vec<Gf4>, last: Gf4| {
            let mut v = c.clone();
            v.push(last);
            v
        };
        next.extend(cols.iter().map(|c| lift(c, Gf4::ZERO)));
        let mut unit = vec![Gf4::ZERO; height];
        unit.push(Gf4::ONE);
        next.push(unit);
        for last in Gf4::NONZERO {
            next.extend(cols.iter().map(|c| lift(c, last)));
        }
        cols = next;
    }
    Gf4Matrix::from_columns(k, &cols).expect("columns have height k")
}

/// The `[(4^k−1)/3, k, 4^{k−1}]` simplex code generated by `S_k`.
pub fn simplex(k: usize) -> LinearCode {
    LinearCode::from_generator(&simplex_matrix(k)).expect("S_k is nonzero")
}

/// Column multiplicities `m_i` of the simplex columns `h_{k,i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    k: usize,
    m: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(k: usize, m: Vec<usize>) -> Result<Self, ConstructError> {
        let expected = simplex_length(k);
        if m.len() != expected {
            return Err(ConstructError::WrongLength {
                k,
                expected,
                found: m.len(),
            });
        }
        Ok(MultiplicityVector { k, m })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[usize] {
        &self.m
    }

    /// Length `Σ m_i` of the represented code.
    pub fn length(&self) -> usize {
        self.m.iter().sum()
    }

    /// `G_k(m)`: `m_1` copies of `h_{k,1}`, then `m_2` copies of `h_{k,2}`, ...
    pub fn generator(&self) -> Gf4Matrix {
        let s = simplex_matrix(self.k);
        let mut order = Vec::with_capacity(self.length());
        for (i, &mi) in self.m.iter().enumerate() {
            order.extend(std::iter::repeat_n(i, mi));
        }
        s.select_columns(&order)
    }
}

/// The code `C_k(m)`.
pub fn code_from_multiplicity(mv: &MultiplicityVector) -> Result<LinearCode, ConstructError> {
    let g = mv.generator();
    let rank = g.rank();
    if rank < mv.k {
        return Err(ConstructError::RankDeficient { k: mv.k, rank });
    }
    Ok(LinearCode::from_generator(&g)?)
}

/// `[S_k | ⋯ | S_k | G]` with `s` simplex blocks prepended to the canonical
/// generator `G` of `code`. The Gram matrix is unchanged and the minimum
/// distance grows by exactly `4^{k−1}·s`.
pub fn extend_simplex(code: &LinearCode, s: usize) -> Result<LinearCode, ConstructError> {
    let k = code.dimension();
    if k < 2 {
        return Err(ConstructError::DimensionTooSmall { k });
    }
    if s == 0 {
        return Ok(code.clone());
    }
    let block = simplex_matrix(k);
    let mut g = block.clone();
    for _ in 1..s {
        g = g.hstack(&block).expect("same height");
    }
    let g = g.hstack(code.generator()).expect("same height");
    Ok(LinearCode::from_generator(&g)?)
}

/// Inverse of [`extend_simplex`]: drops the first `s·(4^k−1)/3` coordinates.
/// Requires `d > 4^{k−1}·s`, which guarantees the residual keeps dimension k.
pub fn strip_simplex(code: &LinearCode, s: usize) -> Result<LinearCode, ConstructError> {
    let k = code.dimension();
    if k < 2 {
        return Err(ConstructError::DimensionTooSmall { k });
    }
    let prefix = s * simplex_length(k);
    if prefix >= code.length() {
        return Err(ConstructError::TooShort {
            n: code.length(),
            s,
        });
    }
    let d = code.min_distance_capped(DEFAULT_ENUMERATION_CAP)?;
    let threshold = (1usize << (2 * (k - 1))) * s;
    if d <= threshold {
        return Err(ConstructError::DistanceTooSmall { d, threshold });
    }
    let prefix_coords: Vec<usize> = (0..prefix).collect();
    Ok(code.puncture(&prefix_coords)?)
}

/// Column indices `(i, j)`, `i < j`, of the first pair of proportional
/// columns (`col_j = α·col_i`, α ≠ 0) in left-to-right scan order.
pub fn find_scalar_pair(g: &Gf4Matrix) -> Option<(usize, usize)> {
    let cols: Vec<Vec<Gf4>> = (0..g.cols()).map(|c| g.column(c)).collect();
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            let proportional = Gf4::NONZERO
                .iter()
                .any(|&a| cols[i].iter().zip(&cols[j]).all(|(&x, &y)| y == a * x));
            if proportional {
                return Some((i, j));
            }
        }
    }
    None
}

/// Deletes the first pair of proportional columns of a code with
/// one-dimensional hull; the hull stays one-dimensional.
pub fn remove_scalar_pair(code: &LinearCode) -> Result<LinearCode, ConstructError> {
    let hull_dim = hull_dimension(code);
    if hull_dim != 1 {
        return Err(ConstructError::WrongHullDimension { hull_dim });
    }
    let (i, j) = find_scalar_pair(code.generator()).ok_or(ConstructError::NotFound)?;
    Ok(code.puncture(&[i, j])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::{hull_report, HullClass};

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_generator(&Gf4Matrix::from_symbol_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn simplex_examples() {
        let s1 = simplex_matrix(1);
        assert_eq!(s1, Gf4Matrix::identity(1));
        let s2 = simplex_matrix(2);
        assert_eq!(
            s2,
            Gf4Matrix::from_symbol_rows(&["1 0 1 1 1", "0 1 1 w W"]).unwrap()
        );
        let s3 = simplex(3);
        assert_eq!((s3.length(), s3.dimension()), (21, 3));
        assert_eq!(s3.min_distance().unwrap(), 16);
        assert_eq!(hull_report(&s3).class, HullClass::SelfOrthogonal);
    }

    #[test]
    fn simplex_is_one_weight() {
        for k in 2..=5 {
            let wd = simplex(k).weight_distribution().unwrap();
            let w = 1usize << (2 * (k - 1));
            assert_eq!(wd.get(w), (1u64 << (2 * k)) - 1);
            assert_eq!(wd.total(), 1u64 << (2 * k));
            assert_eq!(hull_dimension(&simplex(k)), k);
        }
        assert_eq!(hull_dimension(&simplex(1)), 0);
    }

    #[test]
    fn simplex_columns_are_distinct_points() {
        let s = simplex_matrix(3);
        assert_eq!(find_scalar_pair(&s), None);
        assert!((0..s.cols()).all(|c| s.column(c).iter().any(|x| !x.is_zero())));
    }

    #[test]
    fn multiplicity_examples() {
        let all_ones = MultiplicityVector::new(2, vec![1; 5]).unwrap();
        assert_eq!(all_ones.generator(), simplex_matrix(2));
        assert_eq!(code_from_multiplicity(&all_ones).unwrap(), simplex(2));

        let s = 1;
        let lcd = MultiplicityVector::new(2, vec![s, s, s + 1, s + 1, s + 1]).unwrap();
        let c = code_from_multiplicity(&lcd).unwrap();
        assert_eq!((c.length(), c.dimension()), (5 * s + 3, 2));
        assert_eq!(lcd.generator().hermitian_gram(), Gf4Matrix::identity(2));
        assert_eq!(hull_report(&c).class, HullClass::Lcd);

        let mut m = vec![1; 21];
        m[0] = 2;
        let c = code_from_multiplicity(&MultiplicityVector::new(3, m).unwrap()).unwrap();
        assert_eq!((c.length(), c.dimension()), (22, 3));

        let deficient = MultiplicityVector::new(2, vec![3, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            code_from_multiplicity(&deficient),
            Err(ConstructError::RankDeficient { k: 2, rank: 1 })
        );
        assert!(MultiplicityVector::new(3, vec![1; 5]).is_err());
    }

    fn hull_one_321() -> LinearCode {
        code(&["1 0 0", "0 1 1"])
    }

    #[test]
    fn extend_examples() {
        let seed = hull_one_321();
        assert_eq!(hull_dimension(&seed), 1);
        assert_eq!(seed.min_distance().unwrap(), 1);
        let padded = extend_simplex(&seed, 1).unwrap();
        assert_eq!((padded.length(), padded.dimension()), (8, 2));
        assert_eq!(padded.min_distance().unwrap(), 5);
        assert_eq!(hull_dimension(&padded), 1);

        let g633 = fixture("G_[6,3,3]").unwrap().code();
        let padded = extend_simplex(&g633, 1).unwrap();
        assert_eq!((padded.length(), padded.dimension()), (27, 3));
        assert_eq!(padded.min_distance().unwrap(), 19);
        assert_eq!(hull_dimension(&padded), 1);

        assert_eq!(extend_simplex(&seed, 0).unwrap(), seed);
        assert_eq!(
            extend_simplex(&code(&["1 1"]), 1),
            Err(ConstructError::DimensionTooSmall { k: 1 })
        );
    }

    #[test]
    fn strip_examples() {
        let seed = hull_one_321();
        let padded = extend_simplex(&seed, 2).unwrap();
        assert_eq!(strip_simplex(&padded, 2).unwrap(), seed);

        let seed = code(&["1 0 0 0 0", "0 1 0 0 0", "0 0 1 1 0"]);
        assert_eq!(seed.min_distance().unwrap(), 1);
        let padded = extend_simplex(&seed, 1).unwrap();
        assert_eq!((padded.length(), padded.min_distance().unwrap()), (26, 17));
        let residual = strip_simplex(&padded, 1).unwrap();
        assert_eq!((residual.length(), residual.dimension()), (5, 3));
        assert_eq!(residual, seed);

        // D = 16·s exactly: the trailing columns do not span
        let flat =
            LinearCode::from_generator(&simplex_matrix(3).hstack(&Gf4Matrix::zeros(3, 5)).unwrap())
                .unwrap();
        assert_eq!(
            strip_simplex(&flat, 1),
            Err(ConstructError::DistanceTooSmall {
                d: 16,
                threshold: 16
            })
        );
    }

    #[test]
    fn scalar_pair_examples() {
        let g532 = fixture("G_[5,3,2]").unwrap().code();
        assert_eq!(hull_dimension(&g532), 1);
        assert_eq!(remove_scalar_pair(&g532), Err(ConstructError::NotFound));

        let v = Gf4Matrix::from_symbol_rows(&["1 w", "1 w", "1 w"]).unwrap();
        let with_pair = LinearCode::from_generator(&g532.generator().hstack(&v).unwrap()).unwrap();
        assert_eq!(hull_dimension(&with_pair), 1);
        assert_eq!(remove_scalar_pair(&with_pair).unwrap(), g532);

        let padded = extend_simplex(&hull_one_321(), 1).unwrap();
        assert!(padded.length() > simplex_length(2) + 1);
        let r = remove_scalar_pair(&padded).unwrap();
        assert_eq!(r.length(), 6);
        assert_eq!(hull_dimension(&r), 1);
        assert!(r.min_distance().unwrap() + 2 >= padded.min_distance().unwrap());
    }
}
