//! Corpus of transcribed generator matrices.
//!
//! Printed matrices live in `fixtures/<name>.g4m` and are embedded at build
//! time; a corpus can also be loaded from any directory of `.g4m` files.
//! Two parameterized families are generated on demand:
//!
//! * `H_n-2(n=N)`: the `2 × N` parity-check matrix
//!   `[1 0 1 1 1 … 1; 0 1 ω ω² 0 … 0]` of an `[N, N−2, 2]` code
//!   (`[4, 2, 3]` when `N = 4`) with one-dimensional hull, `N` even.
//! * `G_n-k(n=N,k=K)`: the `(N−K) × N` generator `[I | 1 1 e_1 | 0]` of an
//!   `[N, N−K, 2]` code with one-dimensional hull, `K ≥ 3`, `N − K ≥ 2`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::code::LinearCode;
use crate::gf4linalg::{Gf4, Gf4Matrix};
use crate::matrix_file::{parse_matrix, Alphabet, ParseError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error("fixture '{name}': {source}")]
    Parse { name: String, source: ParseError },
    #[error("fixture '{name}': matrix is {rows}x{cols}, name claims {claim}")]
    ShapeMismatch {
        name: String,
        rows: usize,
        cols: usize,
        claim: String,
    },
    #[error("reading fixtures: {0}")]
    Io(#[from] std::io::Error),
}

/// Whether the stored matrix generates the claimed code or its Hermitian dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixRole {
    Generator,
    ParityCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub claimed_n: usize,
    pub claimed_k: usize,
    pub claimed_d: usize,
    pub claimed_hull_dim: usize,
    pub role: MatrixRole,
    pub matrix: Gf4Matrix,
}

impl Fixture {
    /// The claimed code: spanned by the matrix, or its dual for a parity check.
    pub fn code(&self) -> LinearCode {
        let spanned = LinearCode::from_generator(&self.matrix).expect("fixture matrix is nonzero");
        match self.role {
            MatrixRole::Generator => spanned,
            MatrixRole::ParityCheck => spanned.hermitian_dual(),
        }
    }

    /// Parity-check matrix of the `[n, n−2]` family; `n` even, `n ≥ 4`.
    pub fn parity_check_n_minus_2(n: usize) -> Option<Fixture> {
        if n < 4 || n % 2 == 1 {
            return None;
        }
        let mut h = Gf4Matrix::zeros(2, n);
        h.set(0, 0, Gf4::ONE);
        h.set(1, 1, Gf4::ONE);
        for c in 2..n {
            h.set(0, c, Gf4::ONE);
        }
        h.set(1, 2, Gf4::OMEGA);
        h.set(1, 3, Gf4::OMEGA2);
        Some(Fixture {
            name: format!("H_n-2(n={n})"),
            claimed_n: n,
            claimed_k: n - 2,
            claimed_d: if n == 4 { 3 } else { 2 },
            claimed_hull_dim: 1,
            role: MatrixRole::ParityCheck,
            matrix: h,
        })
    }

    /// Generator `[I_{n−k} | 1 | 1 | e_1 | 0_{k−3}]` of an `[n, n−k, 2]` code.
    pub fn distance_two_generator(n: usize, k: usize) -> Option<Fixture> {
        if k < 3 || n < k + 2 {
            return None;
        }
        let rows = n - k;
        let mut g = Gf4Matrix::zeros(rows, n);
        for r in 0..rows {
            g.set(r, r, Gf4::ONE);
            g.set(r, rows, Gf4::ONE);
            g.set(r, rows + 1, Gf4::ONE);
        }
        g.set(0, rows + 2, Gf4::ONE);
        Some(Fixture {
            name: format!("G_n-k(n={n},k={k})"),
            claimed_n: n,
            claimed_k: rows,
            claimed_d: 2,
            claimed_hull_dim: 1,
            role: MatrixRole::Generator,
            matrix: g,
        })
    }

    /// Fixture for a printed matrix named `G_[n,k,d]`, all of which claim a
    /// one-dimensional hull.
    pub fn from_text(name: &str, text: &str) -> Result<Fixture, FixtureError> {
        let (n, k, d) = parse_bracket_name(name)
            .ok_or_else(|| FixtureError::UnknownFixture(name.to_string()))?;
        let matrix =
            parse_matrix(text, Alphabet::Letters).map_err(|source| FixtureError::Parse {
                name: name.to_string(),
                source,
            })?;
        if matrix.rows() != k || matrix.cols() != n {
            return Err(FixtureError::ShapeMismatch {
                name: name.to_string(),
                rows: matrix.rows(),
                cols: matrix.cols(),
                claim: format!("[{n},{k},{d}]"),
            });
        }
        Ok(Fixture {
            name: name.to_string(),
            claimed_n: n,
            claimed_k: k,
            claimed_d: d,
            claimed_hull_dim: 1,
            role: MatrixRole::Generator,
            matrix,
        })
    }
}

/// Parses `G_[n,k,d]` (any single-letter prefix).
fn parse_bracket_name(name: &str) -> Option<(usize, usize, usize)> {
    let inner = name.split_once("_[")?.1.strip_suffix(']')?;
    let nums: Vec<usize> = inner
        .split(',')
        .map(|t| t.trim().parse().ok())
        .collect::<Option<_>>()?;
    match nums.as_slice() {
        &[n, k, d] => Some((n, k, d)),
        _ => None,
    }
}

/// Parses `key=value` pairs inside the parentheses of a family name.
fn parse_params(name: &str, prefix: &str) -> Option<BTreeMap<String, usize>> {
    let inner = name
        .strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?;
    inner
        .split(',')
        .map(|kv| {
            let (k, v) = kv.split_once('=')?;
            Some((k.trim().to_string(), v.trim().parse().ok()?))
        })
        .collect()
}

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../fixtures/", $name, ".g4m")))),*]
    };
}

/// Printed generator matrices (13 + 8 for k = 3, plus the `[9,4,5]` code).
const BUILTIN: &[(&str, &str)] = builtin![
    "G_[4,3,2]",
    "G_[7,3,4]",
    "G_[8,3,5]",
    "G_[9,3,6]",
    "G_[12,3,8]",
    "G_[13,3,9]",
    "G_[14,3,10]",
    "G_[17,3,12]",
    "G_[18,3,13]",
    "G_[19,3,14]",
    "G_[22,3,16]",
    "G_[23,3,16]",
    "G_[24,3,17]",
    "G_[5,3,2]",
    "G_[6,3,3]",
    "G_[10,3,6]",
    "G_[11,3,7]",
    "G_[15,3,10]",
    "G_[16,3,11]",
    "G_[20,3,14]",
    "G_[21,3,15]",
    "G_[9,4,5]",
];

macro_rules! witnesses {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../fixtures/witnesses/", $name, ".g4m")))),*]
    };
}

/// Hull-1 witnesses for the `n ≤ 12`, `k ≥ 4` table cells, found by
/// seeded random search and re-verified by the tests.
const WITNESSES: &[(&str, &str)] = witnesses![
    "W_[5,4,1]",
    "W_[6,4,2]",
    "W_[6,5,2]",
    "W_[7,4,3]",
    "W_[7,5,2]",
    "W_[7,6,1]",
    "W_[8,4,4]",
    "W_[8,5,3]",
    "W_[8,6,2]",
    "W_[8,7,2]",
    "W_[9,4,5]",
    "W_[9,5,4]",
    "W_[9,6,3]",
    "W_[9,7,2]",
    "W_[9,8,1]",
    "W_[10,4,5]",
    "W_[10,5,5]",
    "W_[10,6,4]",
    "W_[10,7,3]",
    "W_[10,8,2]",
    "W_[10,9,2]",
    "W_[11,4,6]",
    "W_[11,5,5]",
    "W_[11,6,4]",
    "W_[11,7,4]",
    "W_[11,8,3]",
    "W_[11,9,2]",
    "W_[11,10,1]",
    "W_[12,4,7]",
    "W_[12,5,6]",
    "W_[12,6,6]",
    "W_[12,7,4]",
    "W_[12,8,4]",
    "W_[12,9,3]",
    "W_[12,10,2]",
    "W_[12,11,2]",
];

/// A named set of printed fixtures.
#[derive(Clone, Debug, Default)]
pub struct FixtureCorpus {
    fixtures: Vec<Fixture>,
}

impl FixtureCorpus {
    /// The embedded corpus, parsed once.
    pub fn builtin() -> &'static FixtureCorpus {
        static CORPUS: OnceLock<FixtureCorpus> = OnceLock::new();
        CORPUS.get_or_init(|| FixtureCorpus {
            fixtures: BUILTIN
                .iter()
                .map(|(name, text)| {
                    Fixture::from_text(name, text).expect("embedded fixture parses")
                })
                .collect(),
        })
    }

    /// Loads every `*.g4m` file directly inside `dir`, sorted by name.
    pub fn load_dir(dir: &Path) -> Result<FixtureCorpus, FixtureError> {
        let mut entries: Vec<_> = std::fs::read_dir(dir)?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "g4m"))
            .collect();
        entries.sort();
        let mut fixtures = Vec::with_capacity(entries.len());
        for path in entries {
            let name = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or_default()
                .to_string();
            let text = std::fs::read_to_string(&path)?;
            fixtures.push(Fixture::from_text(&name, &text)?);
        }
        Ok(FixtureCorpus { fixtures })
    }

    /// The embedded witness corpus for the `n ≤ 12` table.
    pub fn witnesses() -> &'static FixtureCorpus {
        static CORPUS: OnceLock<FixtureCorpus> = OnceLock::new();
        CORPUS.get_or_init(|| FixtureCorpus {
            fixtures: WITNESSES
                .iter()
                .map(|(name, text)| {
                    Fixture::from_text(name, text).expect("embedded witness parses")
                })
                .collect(),
        })
    }

    /// First fixture with the given length and dimension.
    pub fn find(&self, n: usize, k: usize) -> Option<&Fixture> {
        self.fixtures
            .iter()
            .find(|f| f.claimed_n == n && f.claimed_k == k)
    }

    pub fn fixtures(&self) -> &[Fixture] {
        &self.fixtures
    }

    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }
}

/// Looks up a printed fixture by name, or builds a parameterized one
/// (`H_n-2(n=8)`, `G_n-k(n=22,k=3)`).
pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    if let Some(f) = FixtureCorpus::builtin().get(name) {
        return Ok(f.clone());
    }
    let unknown = || FixtureError::UnknownFixture(name.to_string());
    if let Some(p) = parse_params(name, "H_n-2") {
        let n = *p.get("n").ok_or_else(unknown)?;
        return Fixture::parity_check_n_minus_2(n).ok_or_else(unknown);
    }
    if let Some(p) = parse_params(name, "G_n-k") {
        let n = *p.get("n").ok_or_else(unknown)?;
        let k = *p.get("k").ok_or_else(unknown)?;
        return Fixture::distance_two_generator(n, k).ok_or_else(unknown);
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::hull_dimension;

    #[test]
    fn lookup_examples() {
        let f = fixture("G_[12,3,8]").unwrap();
        assert_eq!((f.matrix.rows(), f.matrix.cols()), (3, 12));
        assert_eq!(
            (f.claimed_n, f.claimed_k, f.claimed_d, f.claimed_hull_dim),
            (12, 3, 8, 1)
        );
        let f = fixture("G_[21,3,15]").unwrap();
        assert_eq!((f.matrix.rows(), f.matrix.cols()), (3, 21));
        let f = fixture("G_[9,4,5]").unwrap();
        assert_eq!((f.claimed_n, f.claimed_k, f.claimed_d), (9, 4, 5));
        assert!(matches!(
            fixture("G_[99,3,1]"),
            Err(FixtureError::UnknownFixture(_))
        ));
        assert_eq!(FixtureCorpus::builtin().fixtures().len(), 22);
    }

    #[test]
    fn every_builtin_fixture_matches_its_claim() {
        for f in FixtureCorpus::builtin().fixtures() {
            let c = f.code();
            let got = (
                c.length(),
                c.dimension(),
                c.min_distance().unwrap(),
                hull_dimension(&c),
            );
            let claimed = (f.claimed_n, f.claimed_k, f.claimed_d, f.claimed_hull_dim);
            assert_eq!(got, claimed, "{}", f.name);
        }
    }

    #[test]
    fn every_stored_witness_matches_its_claim() {
        let corpus = FixtureCorpus::witnesses();
        assert_eq!(corpus.fixtures().len(), 36);
        for f in corpus.fixtures() {
            let c = f.code();
            let got = (
                c.length(),
                c.dimension(),
                c.min_distance().unwrap(),
                hull_dimension(&c),
            );
            let claimed = (f.claimed_n, f.claimed_k, f.claimed_d, f.claimed_hull_dim);
            assert_eq!(got, claimed, "{}", f.name);
        }
    }

    #[test]
    fn n_minus_2_family() {
        for n in [4usize, 6, 8, 10, 12] {
            let f = fixture(&format!("H_n-2(n={n})")).unwrap();
            let c = f.code();
            assert_eq!((c.length(), c.dimension()), (n, n - 2));
            assert_eq!(c.min_distance().unwrap(), f.claimed_d);
            assert_eq!(hull_dimension(&c), 1);
        }
        assert!(fixture("H_n-2(n=7)").is_err());
    }

    #[test]
    fn distance_two_family() {
        for (n, k) in [(8usize, 3usize), (10, 3), (9, 4), (12, 5)] {
            let f = fixture(&format!("G_n-k(n={n},k={k})")).unwrap();
            let c = f.code();
            assert_eq!((c.length(), c.dimension()), (n, n - k));
            assert_eq!(hull_dimension(&c), 1);
            // dual distance side: d = 2 via e_2 + e_3
            assert_eq!(c.min_distance().unwrap(), 2);
        }
        assert!(fixture("G_n-k(n=5,k=2)").is_err());
    }

    #[test]
    fn bad_text_is_reported() {
        assert!(matches!(
            Fixture::from_text("G_[3,1,3]", "3 1\n1 1 x\n"),
            Err(FixtureError::Parse { .. })
        ));
        assert!(matches!(
            Fixture::from_text("G_[3,2,2]", "3 1\n1 1 1\n"),
            Err(FixtureError::ShapeMismatch { .. })
        ));
    }
}
