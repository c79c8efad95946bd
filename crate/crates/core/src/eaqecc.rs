//! Binary entanglement-assisted quantum codes from quaternary codes whose
//! Hermitian hull is one-dimensional.
//!
//! A hull-1 `[n, k, d]` code `C` with Hermitian dual distance `d⊥` gives an
//! `[[n, k−1, d; n−k−1]]` code and an `[[n, n−k−1, d⊥; k−1]]` code.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::dh_closed_form;
use crate::code::{CodeError, LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::construct::fixture;
use crate::hull::hull_dimension;
use crate::search::witness_for;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EaqeccError {
    #[error("hull dimension is {hull_dim}, expected 1")]
    WrongHullDimension { hull_dim: usize },
    #[error("no table entry at n = {n}, k = {k}")]
    OutOfRange { n: usize, k: usize },
    #[error("no hull-1 witness available for [{n}, {k}]")]
    MissingWitness { n: usize, k: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Parameters `[[n, k, d; c]]` of a binary EAQECC: `k` logical qubits in
/// `n` physical ones with `c` pre-shared entangled pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EaqeccParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub c: usize,
}

impl EaqeccParams {
    pub fn new(n: usize, k: usize, d: usize, c: usize) -> Self {
        debug_assert!(k + c <= n);
        EaqeccParams { n, k, d, c }
    }

    /// The `[d; c]` pair shown in tables indexed by `(n, k)`.
    pub fn d_c(&self) -> (usize, usize) {
        (self.d, self.c)
    }
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{};{}]]_2", self.n, self.k, self.d, self.c)
    }
}

/// Both EAQECCs obtained from a hull-1 code, with distances computed by
/// enumeration under the default dimension cap.
pub fn derive_pair(code: &LinearCode) -> Result<(EaqeccParams, EaqeccParams), EaqeccError> {
    derive_pair_capped(code, DEFAULT_ENUMERATION_CAP)
}

pub fn derive_pair_capped(
    code: &LinearCode,
    cap: usize,
) -> Result<(EaqeccParams, EaqeccParams), EaqeccError> {
    let hull_dim = hull_dimension(code);
    if hull_dim != 1 {
        return Err(EaqeccError::WrongHullDimension { hull_dim });
    }
    let (n, k) = (code.length(), code.dimension());
    let d = code.min_distance_capped(cap)?;
    let dual_d = code.hermitian_dual().min_distance_capped(cap)?;
    Ok((
        EaqeccParams::new(n, k - 1, d, n - k - 1),
        EaqeccParams::new(n, n - k - 1, dual_d, k - 1),
    ))
}

/// An `[[n, 2, d; n−4]]` code for `n = 21s + t` from the optimal hull-1
/// `[n, 3]` codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    pub params: EaqeccParams,
    /// Set for `t = 5`, where the distance is the lower bound `16s + 2`.
    pub bound_derived: bool,
}

pub fn corollary_family(s: usize, t: usize) -> Result<FamilyEntry, EaqeccError> {
    let n = 21 * s + t;
    if t > 20 || n < 4 {
        return Err(EaqeccError::OutOfRange { n, k: 2 });
    }
    let d = dh_closed_form(n, 3)
        .ok_or(EaqeccError::OutOfRange { n, k: 2 })?
        .d();
    Ok(FamilyEntry {
        params: EaqeccParams::new(n, 2, d, n - 4),
        bound_derived: t == 5,
    })
}

/// Printed `[d; c]` cells for `2 ≤ n ≤ 12`, row `n − 2`, column `k`.
const TABLE6: [&[(usize, usize)]; 11] = [
    &[(2, 0)],
    &[(2, 1), (1, 0)],
    &[(4, 2), (3, 1), (2, 0)],
    &[(4, 3), (3, 2), (2, 1), (1, 0)],
    &[(6, 4), (4, 3), (3, 2), (2, 1), (2, 0)],
    &[(6, 5), (5, 4), (4, 3), (3, 2), (2, 1), (1, 0)],
    &[(8, 6), (5, 5), (5, 4), (4, 3), (3, 2), (2, 1), (2, 0)],
    &[
        (8, 7),
        (7, 6),
        (6, 5),
        (5, 4),
        (4, 3),
        (3, 2),
        (2, 1),
        (1, 0),
    ],
    &[
        (10, 8),
        (7, 7),
        (6, 6),
        (5, 5),
        (5, 4),
        (4, 3),
        (3, 3),
        (2, 1),
        (2, 0),
    ],
    &[
        (10, 9),
        (8, 8),
        (7, 7),
        (6, 6),
        (5, 5),
        (4, 4),
        (4, 3),
        (3, 2),
        (2, 1),
        (1, 0),
    ],
    &[
        (12, 10),
        (9, 9),
        (8, 8),
        (7, 7),
        (6, 6),
        (6, 5),
        (4, 4),
        (4, 3),
        (3, 2),
        (2, 1),
        (2, 0),
    ],
];

/// Cells printed in bold, marking parameters new at publication.
pub const TABLE6_BOLD: [(usize, usize); 9] = [
    (8, 3),
    (9, 0),
    (9, 3),
    (10, 5),
    (11, 0),
    (11, 2),
    (12, 2),
    (12, 3),
    (12, 7),
];

/// The printed cell at `(10, 6)` reads `[3; 3]`, but the hull-1 bookkeeping
/// `c = n − k − 1` forces `c = 2`.
pub const TABLE6_ERRATA: [((usize, usize), (usize, usize)); 1] = [((10, 6), (3, 2))];

/// The printed `[d; c]` cell of the `n ≤ 12` table at logical dimension `k`.
pub fn table6_literal(n: usize, k: usize) -> Result<(usize, usize), EaqeccError> {
    if !(2..=12).contains(&n) || k + 2 > n {
        return Err(EaqeccError::OutOfRange { n, k });
    }
    Ok(TABLE6[n - 2][k])
}

/// All `(n, k, printed [d; c])` cells in row order.
pub fn table6_cells() -> impl Iterator<Item = (usize, usize, (usize, usize))> {
    TABLE6
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(k, &dc)| (r + 2, k, dc)))
}

/// The `[d; c]` pair at `(n, k)` computed from a hull-1 `[n, k+1]` witness.
pub fn table6_entry(n: usize, k: usize) -> Result<(usize, usize), EaqeccError> {
    table6_literal(n, k)?;
    let (code, _) = witness_for(n, k + 1).ok_or(EaqeccError::MissingWitness { n, k: k + 1 })?;
    Ok(derive_pair(&code)?.0.d_c())
}

/// One row of the `k = 2` comparison against previously known codes.
#[derive(Clone, Copy, Debug)]
pub struct KnownRow {
    pub n: usize,
    /// Distance of the hull-1 `[n, 3]` code behind our entry.
    pub code_d: usize,
    /// Known `(d, c)` pairs for `[[n, 2, d; c]]` codes.
    pub known: &'static [(usize, usize)],
}

/// Source of the known parameters in [`KNOWN_K2`].
pub const KNOWN_CITATION: &str =
    "M. Grassl, Bounds on the minimum distance of linear codes and quantum codes, codetables.de";

pub const KNOWN_K2: [KnownRow; 8] = [
    KnownRow {
        n: 13,
        code_d: 9,
        known: &[(4, 0), (5, 1), (6, 2), (8, 9)],
    },
    KnownRow {
        n: 14,
        code_d: 10,
        known: &[(5, 0), (7, 2), (9, 9)],
    },
    KnownRow {
        n: 16,
        code_d: 11,
        known: &[(6, 0), (8, 2), (10, 9)],
    },
    KnownRow {
        n: 17,
        code_d: 12,
        known: &[(6, 0), (8, 2), (10, 9)],
    },
    KnownRow {
        n: 18,
        code_d: 13,
        known: &[(6, 0), (8, 2), (10, 9)],
    },
    KnownRow {
        n: 19,
        code_d: 14,
        known: &[(6, 0), (9, 2), (10, 9)],
    },
    KnownRow {
        n: 20,
        code_d: 14,
        known: &[(6, 0), (10, 2)],
    },
    KnownRow {
        n: 22,
        code_d: 16,
        known: &[(6, 0), (7, 1), (11, 2)],
    },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownComparison {
    pub known: EaqeccParams,
    pub better_d: bool,
    pub smaller_c: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub ours: EaqeccParams,
    pub against: Vec<KnownComparison>,
}

impl ComparisonReport {
    /// Our distance exceeds every known distance at this length.
    pub fn exceeds_known_d(&self) -> bool {
        self.against.iter().all(|k| k.better_d)
    }

    /// No known code has at least our distance with at most our entanglement.
    pub fn undominated(&self) -> bool {
        !self
            .against
            .iter()
            .any(|k| k.known.d >= self.ours.d && k.known.c <= self.ours.c)
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ours)?;
        for k in &self.against {
            write!(
                f,
                "  vs {}{}{}",
                k.known,
                if k.better_d { " better-d" } else { "" },
                if k.smaller_c { " smaller-c" } else { "" }
            )?;
        }
        Ok(())
    }
}

pub fn compare_with_known(ours: EaqeccParams, known: &[(usize, usize)]) -> ComparisonReport {
    let against = known
        .iter()
        .map(|&(d, c)| KnownComparison {
            known: EaqeccParams::new(ours.n, ours.k, d, c),
            better_d: ours.d > d,
            smaller_c: ours.c < c,
        })
        .collect();
    ComparisonReport { ours, against }
}

/// Derives each `k = 2` entry from the stored `[n, 3]` generator and compares
/// it with the known parameters.
pub fn known_k2_report() -> Result<Vec<ComparisonReport>, EaqeccError> {
    KNOWN_K2
        .iter()
        .map(|row| {
            let name = format!("G_[{},3,{}]", row.n, row.code_d);
            let f = fixture(&name).map_err(|_| EaqeccError::MissingWitness { n: row.n, k: 3 })?;
            let (ours, _) = derive_pair(&f.code())?;
            Ok(compare_with_known(ours, row.known))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixture;

    fn first(name: &str) -> EaqeccParams {
        derive_pair(&fixture(name).unwrap().code()).unwrap().0
    }

    #[test]
    fn derive_pair_examples() {
        assert_eq!(first("G_[12,3,8]"), EaqeccParams::new(12, 2, 8, 8));
        assert_eq!(first("G_[9,4,5]"), EaqeccParams::new(9, 3, 5, 4));
        assert_eq!(first("G_[4,3,2]"), EaqeccParams::new(4, 2, 2, 0));
        assert_eq!(first("G_[23,3,16]").to_string(), "[[23,2,16;19]]_2");
    }

    #[test]
    fn derive_pair_rejects_other_hulls() {
        let lcd = LinearCode::full_space(3);
        assert_eq!(
            derive_pair(&lcd),
            Err(EaqeccError::WrongHullDimension { hull_dim: 0 })
        );
    }

    #[test]
    fn dual_swaps_the_pair() {
        for name in ["G_[9,4,5]", "G_[12,3,8]", "G_[7,3,4]"] {
            let c = fixture(name).unwrap().code();
            let (a, b) = derive_pair(&c).unwrap();
            let (da, db) = derive_pair(&c.hermitian_dual()).unwrap();
            assert_eq!((a, b), (db, da));
            assert_eq!(a.k + a.c, a.n - 2);
        }
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(
            corollary_family(1, 0).unwrap().params,
            EaqeccParams::new(21, 2, 15, 17)
        );
        assert_eq!(
            corollary_family(0, 12).unwrap().params,
            EaqeccParams::new(12, 2, 8, 8)
        );
        let e = corollary_family(1, 5).unwrap();
        assert_eq!(e.params, EaqeccParams::new(26, 2, 18, 22));
        assert!(e.bound_derived);
        assert!(corollary_family(0, 3).is_err());
        assert!(corollary_family(2, 21).is_err());
    }

    #[test]
    fn small_eaqecc_examples() {
        assert_eq!(table6_entry(12, 3).unwrap(), (7, 7));
        assert_eq!(table6_entry(8, 3).unwrap(), (4, 3));
        assert_eq!(table6_entry(10, 4).unwrap(), (5, 4));
        assert!(table6_entry(12, 11).is_err());
        assert_eq!(table6_cells().count(), 66);
    }

    #[test]
    fn printed_cells_follow_bookkeeping_except_errata() {
        for (n, k, (_, c)) in table6_cells() {
            let erratum = TABLE6_ERRATA.iter().find(|(cell, _)| *cell == (n, k));
            match erratum {
                Some((_, (_, fixed))) => assert_ne!(c, *fixed),
                None => assert_eq!(c + k, n - 2, "({n},{k})"),
            }
        }
    }

    #[test]
    fn known_k2_rows() {
        let reports = known_k2_report().unwrap();
        let ours: Vec<String> = reports.iter().map(|r| r.ours.to_string()).collect();
        assert_eq!(ours[0], "[[13,2,9;9]]_2");
        assert_eq!(ours[7], "[[22,2,16;18]]_2");
        assert!(reports
            .iter()
            .all(|r| r.exceeds_known_d() && r.undominated()));
    }
}
