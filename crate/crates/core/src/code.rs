//! Quaternary linear `[n, k, d]` codes.

use std::fmt;

use thiserror::Error;

use crate::gf4linalg::{Gf4, Gf4Matrix};
use crate::packed;

/// Default cap on the dimension of codes whose codewords are enumerated.
/// `4^14 ≈ 2.7·10⁸` codewords.
pub const DEFAULT_ENUMERATION_CAP: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator matrix is zero")]
    ZeroMatrix,
    #[error("dimension {k} exceeds the enumeration cap {cap}")]
    BudgetExceeded { k: usize, cap: usize },
    #[error("cannot delete every coordinate of a length-{n} code")]
    AllCoordinates { n: usize },
    #[error("coordinate {index} out of range for length {n}")]
    CoordinateOutOfRange { index: usize, n: usize },
    #[error("length {n} exceeds the packed enumeration limit")]
    LengthTooLarge { n: usize },
}

/// A linear code over GF(4) held by its generator matrix in reduced
/// row-echelon form. Two codes are equal iff they have the same codewords.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    generator: Gf4Matrix,
    pivots: Vec<usize>,
}

/// Counts `A_w` of codewords of each weight `w = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        WeightDistribution { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest positive weight present, `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
    }

    pub fn is_even(&self) -> bool {
        self.counts.iter().skip(1).step_by(2).all(|&c| c == 0)
    }
}

impl LinearCode {
    /// The code spanned by the rows of `generator`. Dependent rows are dropped.
    pub fn from_generator(generator: &Gf4Matrix) -> Result<Self, CodeError> {
        if generator.rows() == 0 || generator.is_zero() {
            return Err(CodeError::ZeroMatrix);
        }
        if generator.cols() > packed::MAX_PACKED_LENGTH {
            return Err(CodeError::LengthTooLarge {
                n: generator.cols(),
            });
        }
        Ok(Self::from_spanning_rows(generator))
    }

    /// The zero code `{0}` of length `n` (dimension 0).
    pub fn zero(n: usize) -> Self {
        LinearCode {
            generator: Gf4Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    /// The whole space `F_4^n`.
    pub fn full_space(n: usize) -> Self {
        LinearCode {
            generator: Gf4Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    // accepts zero matrices, which give the zero code
    pub(crate) fn from_spanning_rows(generator: &Gf4Matrix) -> Self {
        let (r, pivots) = generator.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        LinearCode {
            generator: basis,
            pivots,
        }
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Canonical generator: reduced row-echelon form without zero rows.
    pub fn generator(&self) -> &Gf4Matrix {
        &self.generator
    }

    /// Pivot columns of the canonical generator (an information set).
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Encodes a message of length `k`.
    pub fn encode(&self, message: &[Gf4]) -> Vec<Gf4> {
        self.generator.left_mul_vec(message)
    }

    pub fn contains(&self, v: &[Gf4]) -> bool {
        if v.len() != self.length() {
            return false;
        }
        // reduce by the RREF rows using their pivot entries
        let message: Vec<Gf4> = self.pivots.iter().map(|&p| v[p]).collect();
        self.encode(&message) == v
    }

    /// True when every row of `other`'s generator lies in `self`.
    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.generator.row_iter().all(|row| self.contains(row))
    }

    /// Brute-force list of all `4^k` codewords, in message order.
    /// Intended for small codes and cross-checks.
    pub fn codewords(&self) -> Vec<Vec<Gf4>> {
        let k = self.dimension();
        assert!(k <= 10, "codewords() is meant for k ≤ 10");
        (0..1usize << (2 * k))
            .map(|idx| {
                let msg: Vec<Gf4> = (0..k)
                    .map(|i| Gf4::from_bits((idx >> (2 * i)) as u8))
                    .collect();
                self.encode(&msg)
            })
            .collect()
    }

    fn check_cap(&self, cap: usize) -> Result<(), CodeError> {
        let k = self.dimension();
        let r = self.length() - k;
        if k <= cap || (r <= cap && k < 32) {
            Ok(())
        } else {
            Err(CodeError::BudgetExceeded { k, cap })
        }
    }

    /// Exact weight distribution.
    pub fn weight_distribution(&self) -> Result<WeightDistribution, CodeError> {
        self.weight_distribution_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Exact weight distribution, enumerating whichever of the code and its
    /// Hermitian dual is smaller (the larger side follows by the MacWilliams
    /// identity). Fails when both dimensions exceed `cap`.
    pub fn weight_distribution_capped(&self, cap: usize) -> Result<WeightDistribution, CodeError> {
        self.check_cap(cap)?;
        let k = self.dimension();
        if k <= cap && k <= self.length() - k {
            return Ok(self.enumerated_distribution());
        }
        if k >= 32 || self.length() - k > cap {
            return Ok(self.enumerated_distribution());
        }
        let dual = self.hermitian_dual().enumerated_distribution();
        Ok(macwilliams(&dual, self.length() - k, k))
    }

    /// Weight distribution by enumerating all `4^k` codewords.
    pub fn enumerated_distribution(&self) -> WeightDistribution {
        let mut counts = packed::projective_weight_histogram(&self.generator);
        for c in counts.iter_mut() {
            *c *= 3;
        }
        counts[0] = 1;
        WeightDistribution { counts }
    }

    /// Minimum nonzero weight, or 0 for the zero code.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.min_distance_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_distance_capped(&self, cap: usize) -> Result<usize, CodeError> {
        Ok(self
            .weight_distribution_capped(cap)?
            .min_distance()
            .unwrap_or(0))
    }

    /// Whether every nonzero codeword has weight at least `d`; stops at the
    /// first lighter codeword.
    pub fn min_distance_at_least(&self, d: usize, cap: usize) -> Result<bool, CodeError> {
        self.check_cap(cap)?;
        if self.dimension() > cap {
            let wd = self.weight_distribution_capped(cap)?;
            return Ok(wd.min_distance().is_none_or(|m| m >= d));
        }
        Ok(!packed::has_codeword_below(&self.generator, d as u32))
    }

    /// The Hermitian dual `{v : ⟨u, v⟩_H = 0 ∀u ∈ C}`, an `[n, n − k]` code.
    /// The dual of the full space is the zero code.
    pub fn hermitian_dual(&self) -> LinearCode {
        if self.dimension() == 0 {
            return LinearCode::full_space(self.length());
        }
        // Σ g_i·conj(v_i) = 0  ⇔  conj(G)·vᵀ = 0
        let kernel = self.generator.conj().kernel();
        if kernel.rows() == 0 {
            return LinearCode::zero(self.length());
        }
        LinearCode::from_spanning_rows(&kernel)
    }

    fn check_coordinates(&self, coords: &[usize]) -> Result<(), CodeError> {
        let n = self.length();
        if let Some(&index) = coords.iter().find(|&&c| c >= n) {
            return Err(CodeError::CoordinateOutOfRange { index, n });
        }
        let mut distinct = coords.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == n {
            return Err(CodeError::AllCoordinates { n });
        }
        Ok(())
    }

    /// Deletes the coordinates in `coords` (0-based) from every codeword.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode, CodeError> {
        self.check_coordinates(coords)?;
        Ok(LinearCode::from_spanning_rows(
            &self.generator.delete_columns(coords),
        ))
    }

    /// The subcode vanishing on `coords`, punctured on `coords`.
    pub fn shorten(&self, coords: &[usize]) -> Result<LinearCode, CodeError> {
        self.check_coordinates(coords)?;
        let k = self.dimension();
        if k == 0 {
            return Ok(LinearCode::zero(self.length() - distinct_len(coords)));
        }
        // messages x with x·G_S = 0, i.e. the kernel of G_Sᵀ
        let restricted = self.generator.select_columns(coords).transpose();
        let messages = if coords.is_empty() {
            Gf4Matrix::identity(k)
        } else {
            restricted.kernel()
        };
        let sub = messages
            .mul(&self.generator)
            .expect("kernel rows have length k");
        Ok(LinearCode::from_spanning_rows(&sub.delete_columns(coords)))
    }

    /// Appends `count` zero coordinates.
    pub fn extend_with_zeros(&self, count: usize) -> LinearCode {
        let pad = Gf4Matrix::zeros(self.dimension(), count);
        LinearCode {
            generator: self.generator.hstack(&pad).expect("same row count"),
            pivots: self.pivots.clone(),
        }
    }
}

/// Weight distribution of an `[n, k]` code from that of its `[n, n − k]`
/// dual: `A_j = 4^{−(n−k)} Σ_i B_i K_j(i)` with the quaternary Krawtchouk
/// polynomials `K_j(i) = Σ_s (−1)^s 3^{j−s} C(i, s) C(n−i, j−s)`.
fn macwilliams(dual: &WeightDistribution, dual_k: usize, k: usize) -> WeightDistribution {
    use num_bigint::BigInt;
    let n = dual.counts.len() - 1;
    let binom = |a: usize, b: usize| -> BigInt {
        if b > a {
            return BigInt::from(0);
        }
        (0..b).fold(BigInt::from(1), |acc, t| acc * (a - t) / (t + 1))
    };
    let pow3: Vec<BigInt> = (0..=n).map(|e| BigInt::from(3).pow(e as u32)).collect();
    let scale = BigInt::from(1) << (2 * dual_k);
    let counts = (0..=n)
        .map(|j| {
            let mut total = BigInt::from(0);
            for (i, &b) in dual.counts.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut kj = BigInt::from(0);
                for s in 0..=j.min(i) {
                    let term = &pow3[j - s] * binom(i, s) * binom(n - i, j - s);
                    if s % 2 == 0 {
                        kj += term;
                    } else {
                        kj -= term;
                    }
                }
                total += kj * b;
            }
            let a = total / &scale;
            u64::try_from(a).expect("count fits: k < 32")
        })
        .collect();
    let wd = WeightDistribution { counts };
    debug_assert_eq!(wd.total(), 1u64 << (2 * k));
    wd
}

fn distinct_len(coords: &[usize]) -> usize {
    let mut v = coords.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode[{}, {}] {:?}",
            self.length(),
            self.dimension(),
            self.generator
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf4linalg::hermitian_dot;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_generator(&Gf4Matrix::from_symbol_rows(rows).unwrap()).unwrap()
    }

    fn repetition(n: usize) -> LinearCode {
        let row = vec!["1"; n].join(" ");
        code(&[&row])
    }

    fn s2() -> LinearCode {
        code(&["1 0 1 1 1", "0 1 1 w W"])
    }

    fn g432() -> LinearCode {
        code(&["1 0 0 1", "0 1 0 1", "0 0 1 1"])
    }

    /// Weight distribution straight from the list of codewords.
    fn brute_distribution(c: &LinearCode) -> Vec<u64> {
        let mut h = vec![0u64; c.length() + 1];
        for w in c.codewords() {
            h[w.iter().filter(|x| !x.is_zero()).count()] += 1;
        }
        h
    }

    #[test]
    fn from_generator_examples() {
        let c = g432();
        assert_eq!((c.length(), c.dimension()), (4, 3));
        let padded = code(&["1 0 0", "0 1 0"]);
        assert_eq!((padded.length(), padded.dimension()), (3, 2));
        let dup = code(&["1 w 0", "1 w 0", "0 0 1"]);
        assert_eq!(dup.dimension(), 2);
        assert_eq!(
            LinearCode::from_generator(&Gf4Matrix::zeros(2, 3)),
            Err(CodeError::ZeroMatrix)
        );
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(s2().min_distance().unwrap(), 4);
        for n in 1..8 {
            assert_eq!(repetition(n).min_distance().unwrap(), n);
        }
        let g936 = code(&[
            "1 0 0 1 1 w W 1 1",
            "0 1 0 1 W W w 0 w",
            "0 0 1 w w 0 W W 1",
        ]);
        assert_eq!(g936.min_distance().unwrap(), 6);
    }

    #[test]
    fn weight_distribution_examples() {
        let wd = s2().weight_distribution().unwrap();
        assert_eq!(wd.counts(), &[1, 0, 0, 0, 15, 0]);
        let wd = repetition(2).weight_distribution().unwrap();
        assert_eq!(wd.counts(), &[1, 0, 3]);
        // oracle: direct enumeration of the 64 codewords of G_[4,3,2]
        let c = g432();
        let wd = c.weight_distribution().unwrap();
        assert_eq!(wd.counts(), brute_distribution(&c).as_slice());
        assert_eq!(wd.counts(), &[1, 0, 18, 24, 21]);
        assert_eq!(wd.total(), 64);
        assert_eq!(wd.min_distance(), Some(2));
    }

    #[test]
    fn budget_cap() {
        let doubled = Gf4Matrix::identity(15)
            .hstack(&Gf4Matrix::identity(15))
            .unwrap();
        let c = LinearCode::from_generator(&doubled).unwrap();
        assert_eq!(
            c.min_distance(),
            Err(CodeError::BudgetExceeded { k: 15, cap: 14 })
        );
        assert_eq!(c.min_distance_capped(15).unwrap(), 2);
        // the dual side is small: distribution by MacWilliams
        assert_eq!(LinearCode::full_space(15).min_distance().unwrap(), 1);
    }

    #[test]
    fn hermitian_dual_examples() {
        let ones = repetition(6);
        let dual = ones.hermitian_dual();
        assert_eq!(dual.dimension(), 5);
        assert!(dual.contains(&[Gf4::ONE; 6]));
        assert_eq!(s2().hermitian_dual().dimension(), 3);

        // oracle: the 4 dual codewords of G_[4,3,2] are the multiples of 1111
        let dual = g432().hermitian_dual();
        assert_eq!(dual.dimension(), 1);
        let words = dual.codewords();
        assert_eq!(words.len(), 4);
        for w in &words {
            assert!(g432()
                .generator()
                .row_iter()
                .all(|g| hermitian_dot(g, w).is_zero()));
        }
        assert_eq!(dual.min_distance().unwrap(), 4);

        let full = LinearCode::full_space(3);
        assert_eq!(full.hermitian_dual().dimension(), 0);
        assert_eq!(LinearCode::zero(3).hermitian_dual(), full);
    }

    #[test]
    fn puncture_examples() {
        let s = repetition(2).puncture(&[1]).unwrap();
        assert_eq!((s.length(), s.dimension()), (1, 1));
        assert_eq!(s.min_distance().unwrap(), 1);

        let padded = code(&["1 0 1 0", "0 1 1 0"]);
        let p = padded.puncture(&[3]).unwrap();
        assert_eq!(p.length(), 3);
        assert_eq!(p.min_distance().unwrap(), padded.min_distance().unwrap());

        assert_eq!(
            padded.puncture(&[0, 1, 2, 3]),
            Err(CodeError::AllCoordinates { n: 4 })
        );
        assert_eq!(
            padded.puncture(&[4]),
            Err(CodeError::CoordinateOutOfRange { index: 4, n: 4 })
        );
    }

    #[test]
    fn shorten_examples() {
        let s = repetition(5).shorten(&[0]).unwrap();
        assert_eq!((s.length(), s.dimension()), (4, 0));
        assert_eq!(g432().shorten(&[]).unwrap(), g432());

        // oracle: keep codewords that vanish on coordinate 3, then drop it
        let c = g432();
        let short = c.shorten(&[3]).unwrap();
        assert_eq!((short.length(), short.dimension()), (3, 2));
        let mut brute: Vec<Vec<Gf4>> = c
            .codewords()
            .into_iter()
            .filter(|w| w[3].is_zero())
            .map(|w| w[..3].to_vec())
            .collect();
        brute.sort();
        let mut ours = short.codewords();
        ours.sort();
        assert_eq!(ours, brute);
    }

    #[test]
    fn extend_with_zeros_keeps_distance() {
        let c = s2().extend_with_zeros(2);
        assert_eq!(c.length(), 7);
        assert_eq!(c.min_distance().unwrap(), 4);
    }

    proptest::proptest! {
        #[test]
        fn macwilliams_matches_enumeration(
            rows in 1usize..6,
            extra in 0usize..5,
            bits in proptest::collection::vec(0u8..4, 60),
        ) {
            let n = rows + extra;
            let data: Vec<Vec<Gf4>> = (0..rows)
                .map(|r| (0..n).map(|c| Gf4::from_bits(bits[(r * n + c) % bits.len()])).collect())
                .collect();
            let g = Gf4Matrix::from_rows(n, data).unwrap();
            if let Ok(c) = LinearCode::from_generator(&g) {
                let dual = c.hermitian_dual();
                let via_dual = macwilliams(&dual.enumerated_distribution(), dual.dimension(), c.dimension());
                proptest::prop_assert_eq!(via_dual, c.enumerated_distribution());
                proptest::prop_assert_eq!(c.weight_distribution().unwrap(), c.enumerated_distribution());
            }
        }
    }
}
