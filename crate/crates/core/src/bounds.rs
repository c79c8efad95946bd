//! Classical upper bounds on minimum distance and the known values of
//! `D₄ᴴ(n, k, 1)`, the largest minimum distance of a quaternary `[n, k]`
//! code with one-dimensional Hermitian hull.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("(n, k) = ({n}, {k}) is outside the tabulated range")]
    OutOfRange { n: usize, k: usize },
}

/// A value of `D₄ᴴ(n, k, 1)`: exact, or only a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DhValue {
    Exact(usize),
    LowerBound(usize),
}

impl DhValue {
    pub fn d(self) -> usize {
        match self {
            DhValue::Exact(d) | DhValue::LowerBound(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, DhValue::Exact(_))
    }
}

impl fmt::Display for DhValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DhValue::Exact(d) => write!(f, "{d}"),
            DhValue::LowerBound(d) => write!(f, ">={d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub griesmer_max_d: usize,
    pub sphere_packing_max_d: usize,
}

impl BoundsReport {
    pub fn new(n: usize, k: usize) -> Self {
        BoundsReport {
            griesmer_max_d: griesmer_max_d(n, k),
            sphere_packing_max_d: sphere_packing_max_d(n, k),
        }
    }

    /// The tighter of the two bounds.
    pub fn best(&self) -> usize {
        self.griesmer_max_d.min(self.sphere_packing_max_d)
    }
}

/// Length lower bound `Σ_{i<k} ⌈d / 4^i⌉` of a quaternary `[n, k, d]` code.
pub fn griesmer_length(k: usize, d: usize) -> usize {
    let mut q = 1usize;
    (0..k)
        .map(|_| {
            let term = d.div_ceil(q);
            q = q.saturating_mul(4);
            term
        })
        .sum()
}

/// Largest `d` with `griesmer_length(k, d) ≤ n`; 0 when `k > n` or `k = 0`.
pub fn griesmer_max_d(n: usize, k: usize) -> usize {
    if k == 0 || k > n {
        return 0;
    }
    let mut d = 0;
    while d < n && griesmer_length(k, d + 1) <= n {
        d += 1;
    }
    d
}

/// Hamming-ball volume `Σ_{i≤r} 3^i·C(n, i)` over GF(4).
fn ball_volume(n: usize, r: usize) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut term = BigUint::from(1u32);
    for i in 0..=r.min(n) {
        if i > 0 {
            term = term * 3u32 * (n - i + 1) / i;
        }
        total += &term;
    }
    total
}

/// Whether `4^k · V(n, ⌊(d−1)/2⌋) ≤ 4^n`, with an even `d` tested on the
/// punctured `[n−1, k, d−1]` code.
fn sphere_packing_allows(n: usize, k: usize, d: usize) -> bool {
    let (n, d) = if d.is_multiple_of(2) {
        (n - 1, d - 1)
    } else {
        (n, d)
    };
    if k > n {
        return false;
    }
    ball_volume(n, (d - 1) / 2) <= BigUint::from(1u32) << (2 * (n - k))
}

/// Largest `d ≤ n` allowed by the sphere-packing bound; 0 when `k > n` or
/// `k = 0`.
pub fn sphere_packing_max_d(n: usize, k: usize) -> usize {
    if k == 0 || k > n {
        return 0;
    }
    let mut d = 1;
    while d < n && sphere_packing_allows(n, k, d + 1) {
        d += 1;
    }
    d
}

/// `D₄ᴴ(n, 3, 1)` for `n = 21s + t`: `16s + OFFSET[t]`. The `t = 5` entry
/// is a lower bound except where settled separately.
/// `D₄(21s + t, 3) = 16s + GRIESMER_K3_OFFSET[t]` for optimal `[n, 3]` codes.
pub const GRIESMER_K3_OFFSET: [usize; 21] = [
    0, 0, 0, 1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 9, 10, 11, 12, 12, 13, 14, 15,
];

/// `(n, D₄(n, 3))` for `n = 21s + t`, `s ≤ max_s`, `0 ≤ t ≤ 20`.
pub fn table2_cells(max_s: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max_s).flat_map(|s| {
        GRIESMER_K3_OFFSET
            .iter()
            .enumerate()
            .map(move |(t, g)| (21 * s + t, 16 * s + g))
    })
}

const K3_OFFSET: [isize; 21] = [
    -1, 0, 0, 1, 2, 2, 3, 4, 5, 6, 6, 7, 8, 9, 10, 10, 11, 12, 13, 14, 14,
];

/// Closed-form value of `D₄ᴴ(n, k, 1)` for `k ∈ {1, 2, 3, n−1, n−2, n−3}`;
/// `None` for every other `(n, k)`.
pub fn dh_closed_form(n: usize, k: usize) -> Option<DhValue> {
    use DhValue::*;
    if n < 2 || k == 0 || k >= n {
        return None;
    }
    if k == 1 {
        return Some(Exact(if n.is_multiple_of(2) { n } else { n - 1 }));
    }
    if k == n - 1 {
        return Some(Exact(if n.is_multiple_of(2) { 2 } else { 1 }));
    }
    if k == n - 2 {
        return Some(Exact(if n == 4 { 3 } else { 2 }));
    }
    if k == n - 3 {
        return Some(Exact(match n {
            4 => 4,
            5..=19 => 3,
            _ => 2,
        }));
    }
    if k == 2 {
        let base = 4 * n / 5;
        return Some(Exact(if n.is_multiple_of(5) || n % 5 == 3 {
            base - 1
        } else {
            base
        }));
    }
    if k == 3 {
        let (s, t) = (n / 21, n % 21);
        let d = (16 * s as isize + K3_OFFSET[t]) as usize;
        if t == 5 && n != 26 {
            return Some(LowerBound(d));
        }
        return Some(Exact(d));
    }
    None
}

/// `D₄ᴴ(n, k, 1)` for `2 ≤ n ≤ 12`, `1 ≤ k ≤ n−1`; row `n−2`, column `k−1`.
const TABLE5: [&[usize]; 11] = [
    &[2],
    &[2, 1],
    &[4, 3, 2],
    &[4, 3, 2, 1],
    &[6, 4, 3, 2, 2],
    &[6, 5, 4, 3, 2, 1],
    &[8, 5, 5, 4, 3, 2, 2],
    &[8, 7, 6, 5, 4, 3, 2, 1],
    &[10, 7, 6, 5, 5, 4, 3, 2, 2],
    &[10, 8, 7, 6, 5, 4, 4, 3, 2, 1],
    &[12, 9, 8, 7, 6, 6, 4, 4, 3, 2, 2],
];

pub fn table5_lookup(n: usize, k: usize) -> Result<usize, BoundsError> {
    if !(2..=12).contains(&n) || k == 0 || k >= n {
        return Err(BoundsError::OutOfRange { n, k });
    }
    Ok(TABLE5[n - 2][k - 1])
}

/// All `(n, k, D₄ᴴ(n, k, 1))` cells of the `n ≤ 12` table in row order.
pub fn table5_cells() -> impl Iterator<Item = (usize, usize, usize)> {
    TABLE5
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &d)| (r + 2, c + 1, d)))
}

/// A row of the `[n, 3]` comparison table: the hull-1 optimum next to the
/// unrestricted optimum `D₄(n, 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K3Row {
    pub n: usize,
    pub dh: usize,
    pub d4: usize,
}

pub const TABLE3: &[K3Row] = &[
    K3Row { n: 4, dh: 2, d4: 2 },
    K3Row { n: 5, dh: 2, d4: 3 },
    K3Row { n: 6, dh: 3, d4: 4 },
    K3Row { n: 7, dh: 4, d4: 4 },
    K3Row { n: 8, dh: 5, d4: 5 },
    K3Row { n: 9, dh: 6, d4: 6 },
    K3Row {
        n: 10,
        dh: 6,
        d4: 6,
    },
    K3Row {
        n: 11,
        dh: 7,
        d4: 7,
    },
    K3Row {
        n: 12,
        dh: 8,
        d4: 8,
    },
    K3Row {
        n: 13,
        dh: 9,
        d4: 9,
    },
    K3Row {
        n: 14,
        dh: 10,
        d4: 10,
    },
    K3Row {
        n: 15,
        dh: 10,
        d4: 11,
    },
    K3Row {
        n: 16,
        dh: 11,
        d4: 12,
    },
    K3Row {
        n: 17,
        dh: 12,
        d4: 12,
    },
    K3Row {
        n: 18,
        dh: 13,
        d4: 13,
    },
    K3Row {
        n: 19,
        dh: 14,
        d4: 14,
    },
    K3Row {
        n: 20,
        dh: 14,
        d4: 15,
    },
    K3Row {
        n: 21,
        dh: 15,
        d4: 16,
    },
    K3Row {
        n: 22,
        dh: 16,
        d4: 16,
    },
    K3Row {
        n: 23,
        dh: 16,
        d4: 16,
    },
    K3Row {
        n: 24,
        dh: 17,
        d4: 17,
    },
    K3Row {
        n: 25,
        dh: 18,
        d4: 18,
    },
    K3Row {
        n: 26,
        dh: 18,
        d4: 19,
    },
    K3Row {
        n: 27,
        dh: 19,
        d4: 20,
    },
    K3Row {
        n: 28,
        dh: 20,
        d4: 20,
    },
    K3Row {
        n: 29,
        dh: 21,
        d4: 21,
    },
    K3Row {
        n: 30,
        dh: 22,
        d4: 22,
    },
    K3Row {
        n: 31,
        dh: 22,
        d4: 23,
    },
    K3Row {
        n: 32,
        dh: 23,
        d4: 24,
    },
    K3Row {
        n: 33,
        dh: 24,
        d4: 24,
    },
    K3Row {
        n: 34,
        dh: 25,
        d4: 25,
    },
    K3Row {
        n: 35,
        dh: 26,
        d4: 26,
    },
    K3Row {
        n: 36,
        dh: 26,
        d4: 27,
    },
    K3Row {
        n: 48,
        dh: 35,
        d4: 36,
    },
    K3Row {
        n: 52,
        dh: 38,
        d4: 39,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn griesmer_examples() {
        for s in 0..=5 {
            assert_eq!(griesmer_max_d(21 * s + 3, 3), 16 * s + 1);
            assert_eq!(griesmer_max_d(21 * s + 12, 3), 16 * s + 8);
        }
        for n in 1..30 {
            assert_eq!(griesmer_max_d(n, 1), n);
        }
        assert_eq!(griesmer_max_d(3, 4), 0);
        assert_eq!(griesmer_length(3, 16), 21);
        assert_eq!(griesmer_length(2, 4), 5);
        assert_eq!(griesmer_length(4, 1), 4);
    }

    #[test]
    fn griesmer_table_reproduced() {
        let cells: Vec<_> = table2_cells(5).collect();
        assert_eq!(cells.len(), 126);
        for (n, d) in cells {
            assert_eq!(griesmer_max_d(n, 3), d, "n = {n}");
        }
    }

    #[test]
    fn sphere_packing_examples() {
        assert_eq!(sphere_packing_max_d(6, 4), 2);
        assert_eq!(sphere_packing_max_d(22, 19), 2);
        assert_eq!(sphere_packing_max_d(20, 17), 3);
        for n in 1..10 {
            assert_eq!(sphere_packing_max_d(n, n), 1);
        }
        assert_eq!(sphere_packing_max_d(5, 1), 5);
        // perfect Hamming [5,3,3] and [21,18,3] codes
        assert_eq!(sphere_packing_max_d(5, 3), 3);
        assert_eq!(sphere_packing_max_d(21, 18), 3);
    }

    #[test]
    fn sphere_packing_large_lengths() {
        assert_eq!(sphere_packing_max_d(200, 197), 2);
        assert!(sphere_packing_max_d(300, 3) >= griesmer_max_d(300, 3));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(dh_closed_form(12, 3), Some(DhValue::Exact(8)));
        assert_eq!(dh_closed_form(10, 2), Some(DhValue::Exact(7)));
        assert_eq!(dh_closed_form(26, 3), Some(DhValue::Exact(18)));
        assert_eq!(dh_closed_form(47, 3), Some(DhValue::LowerBound(34)));
        assert_eq!(dh_closed_form(5, 3), Some(DhValue::Exact(2)));
        assert_eq!(dh_closed_form(12, 6), None);
        assert_eq!(dh_closed_form(4, 4), None);
    }

    #[test]
    fn k3_offsets_match_residue_rule() {
        let floor_residues = [1, 9, 13, 14, 17, 18, 19];
        for n in 27..200 {
            if n % 21 == 5 {
                continue;
            }
            let f = 16 * n / 21;
            let expected = if floor_residues.contains(&(n % 21)) {
                f
            } else {
                f - 1
            };
            assert_eq!(
                dh_closed_form(n, 3),
                Some(DhValue::Exact(expected)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn closed_form_below_bounds() {
        for n in 2..80 {
            for k in 1..n {
                if let Some(v) = dh_closed_form(n, k) {
                    let b = BoundsReport::new(n, k);
                    assert!(v.d() <= b.best(), "({n},{k})");
                }
            }
        }
    }

    #[test]
    fn small_table_examples() {
        assert_eq!(table5_lookup(12, 6), Ok(6));
        assert_eq!(table5_lookup(8, 4), Ok(4));
        assert_eq!(table5_lookup(11, 7), Ok(4));
        assert_eq!(
            table5_lookup(13, 2),
            Err(BoundsError::OutOfRange { n: 13, k: 2 })
        );
        assert_eq!(
            table5_lookup(5, 5),
            Err(BoundsError::OutOfRange { n: 5, k: 5 })
        );
        assert_eq!(table5_cells().count(), 66);
    }

    #[test]
    fn small_table_agrees_with_closed_forms() {
        for (n, k, d) in table5_cells() {
            if let Some(v) = dh_closed_form(n, k) {
                assert_eq!(v, DhValue::Exact(d), "({n},{k})");
            }
        }
    }

    #[test]
    fn k3_rows_agree_with_closed_form() {
        for row in TABLE3 {
            assert_eq!(
                dh_closed_form(row.n, 3).map(DhValue::d),
                Some(row.dh),
                "n = {}",
                row.n
            );
            assert!(row.dh <= row.d4);
            assert!(row.d4 <= griesmer_max_d(row.n, 3));
        }
    }
}
