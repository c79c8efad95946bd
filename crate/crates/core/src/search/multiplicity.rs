//! Exhaustive search over multiplicity vectors for `k ≤ 3`.
//!
//! A code `C_k(m)` has minimum distance at least `d` exactly when every
//! hyperplane `u^⊥` carries total multiplicity at most `n − d`, because
//! the codeword `u·G` vanishes precisely on the columns lying in `u^⊥`.
//! Its Gram matrix is `Σ (m_i mod 2)·h_i·h̄_iᵀ`, so the hull test only
//! needs parities. Vectors are enumerated in lexicographic order; the
//! first hull-1 vector in that order is the witness.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::geometry::Geometry;
use super::{SearchError, SearchOutcome};
use crate::bounds::BoundsReport;
use crate::code::LinearCode;
use crate::construct::{code_from_multiplicity, MultiplicityVector};
use crate::hull::hull_dimension;

/// Proof that no `[n, k, ≥ d]` code with one-dimensional hull exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Interval for every `m_i` at length `n`; `None` when it is empty.
    pub pruning_bounds: Option<(usize, usize)>,
    /// Lengths whose multiplicity space was exhausted (`n`, `n − 1`, ...).
    pub lengths_checked: Vec<usize>,
    /// First length at which the distance bounds alone exclude `d`.
    pub closed_by_bound_at: Option<usize>,
    pub vectors_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Certificate(NonexistenceCertificate),
    CounterexampleFound(LinearCode),
}

fn geometry(k: usize) -> &'static Geometry {
    static GEOMETRIES: [OnceLock<Geometry>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    GEOMETRIES[k - 1].get_or_init(|| Geometry::new(k))
}

/// Interval `[lo, hi]` containing every `m_i` of an `[n, k, ≥ d]` code
/// `C_k(m)`. For `k = 3` this is `4d − 3n ≤ m_i ≤ n − 5d/4`.
pub(crate) fn multiplicity_bounds(n: usize, k: usize, d: usize) -> Option<(usize, usize)> {
    if d > n {
        return None;
    }
    match k {
        1 => Some((n, n)),
        2 => Some((0, n - d)),
        _ => {
            let q = 1usize << (2 * (k - 2));
            let lo = (4 * d).saturating_sub(3 * n);
            let num = (3 * q * n).checked_sub(((4 * q) - 1) * d)?;
            let hi = (num / (3 * q)).min(n);
            (lo <= hi).then_some((lo, hi))
        }
    }
}

enum Step {
    Found,
    Exhausted,
    Cancelled,
}

#[derive(Clone)]
struct Dfs<'a> {
    geo: &'a Geometry,
    slack: usize,
    lo: usize,
    hi: usize,
    sums: Vec<usize>,
    m: Vec<usize>,
    leaves: u64,
    nodes: u64,
}

impl<'a> Dfs<'a> {
    fn new(geo: &'a Geometry, n: usize, d: usize, (lo, hi): (usize, usize)) -> Self {
        Dfs {
            geo,
            slack: n - d,
            lo,
            hi,
            sums: vec![0; geo.points],
            m: vec![0; geo.points],
            leaves: 0,
            nodes: 0,
        }
    }

    fn value_range(&self, pos: usize, remaining: usize) -> Option<(usize, usize)> {
        let after = self.geo.points - pos - 1;
        let mut vmax = self.hi.min(remaining.checked_sub(after * self.lo)?);
        for &h in &self.geo.through[pos] {
            vmax = vmax.min(self.slack - self.sums[h]);
        }
        let vmin = self.lo.max(remaining.saturating_sub(after * self.hi));
        (vmin <= vmax).then_some((vmin, vmax))
    }

    fn apply(&mut self, pos: usize, v: usize, gram: u32) -> u32 {
        for &h in &self.geo.through[pos] {
            self.sums[h] += v;
        }
        self.m[pos] = v;
        if v % 2 == 1 {
            gram ^ self.geo.gram_bits[pos]
        } else {
            gram
        }
    }

    fn undo(&mut self, pos: usize, v: usize) {
        for &h in &self.geo.through[pos] {
            self.sums[h] -= v;
        }
    }

    /// Collects every feasible prefix of length `depth` in lexicographic order.
    fn prefixes(&mut self, pos: usize, depth: usize, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if pos == depth {
            out.push(self.m[..depth].to_vec());
            return;
        }
        let Some((vmin, vmax)) = self.value_range(pos, remaining) else {
            return;
        };
        for v in vmin..=vmax {
            self.apply(pos, v, 0);
            self.prefixes(pos + 1, depth, remaining - v, out);
            self.undo(pos, v);
        }
    }

    fn go(&mut self, pos: usize, remaining: usize, gram: u32, cancel: &dyn Fn() -> bool) -> Step {
        if pos == self.geo.points {
            self.leaves += 1;
            return if self.geo.gram_rank(gram) + 1 == self.geo.k {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        self.nodes += 1;
        if self.nodes & 0x3fff == 0 && cancel() {
            return Step::Cancelled;
        }
        let Some((vmin, vmax)) = self.value_range(pos, remaining) else {
            return Step::Exhausted;
        };
        for v in vmin..=vmax {
            let g = self.apply(pos, v, gram);
            let step = self.go(pos + 1, remaining - v, g, cancel);
            self.undo(pos, v);
            if !matches!(step, Step::Exhausted) {
                return step;
            }
        }
        Step::Exhausted
    }
}

/// Lexicographically first hull-1 multiplicity vector of an `[n, k, ≥ d]`
/// code with no zero column, and the number of vectors examined up to it.
fn first_hull_one(n: usize, k: usize, d: usize) -> (Option<Vec<usize>>, u64) {
    let Some(bounds) = multiplicity_bounds(n, k, d) else {
        return (None, 0);
    };
    let geo = geometry(k);
    let mut root = Dfs::new(geo, n, d, bounds);
    let depth = match k {
        1 => 0,
        2 => 2,
        _ => 4,
    };
    let mut prefixes = Vec::new();
    root.prefixes(0, depth, n, &mut prefixes);

    let found = AtomicUsize::new(usize::MAX);
    let results: Vec<(u64, Option<Vec<usize>>)> = prefixes
        .par_iter()
        .enumerate()
        .map(|(idx, prefix)| {
            if idx > found.load(Ordering::Relaxed) {
                return (0, None);
            }
            let mut dfs = root.clone();
            let mut gram = 0;
            for (pos, &v) in prefix.iter().enumerate() {
                gram = dfs.apply(pos, v, gram);
            }
            let remaining = n - prefix.iter().sum::<usize>();
            let cancel = || found.load(Ordering::Relaxed) < idx;
            match dfs.go(depth, remaining, gram, &cancel) {
                Step::Found => {
                    found.fetch_min(idx, Ordering::Relaxed);
                    (dfs.leaves, Some(dfs.m))
                }
                _ => (dfs.leaves, None),
            }
        })
        .collect();

    let mut explored = 0;
    for (leaves, witness) in results {
        explored += leaves;
        if witness.is_some() {
            return (witness, explored);
        }
    }
    (None, explored)
}

#[derive(Clone, Debug)]
struct Level {
    best_d: usize,
    /// Multiplicity vector and number of zero columns appended.
    witness: Option<(Vec<usize>, usize)>,
    explored: u64,
}

fn cache() -> &'static Mutex<HashMap<(usize, usize), Level>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Level>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Forgets memoized exhaustive results (used for timing runs).
pub fn clear_cache() {
    cache().lock().expect("cache lock").clear();
}

fn level(n: usize, k: usize) -> Level {
    if let Some(l) = cache().lock().expect("cache lock").get(&(n, k)) {
        return l.clone();
    }
    let prev = if n > k {
        level(n - 1, k)
    } else {
        Level {
            best_d: 0,
            witness: None,
            explored: 0,
        }
    };
    let mut explored = 0;
    let mut result = None;
    let upper = BoundsReport::new(n, k).best();
    for d in (prev.best_d + 1..=upper).rev() {
        let (witness, count) = first_hull_one(n, k, d);
        explored += count;
        if let Some(m) = witness {
            result = Some(Level {
                best_d: d,
                witness: Some((m, 0)),
                explored,
            });
            break;
        }
    }
    let result = result.unwrap_or(Level {
        best_d: prev.best_d,
        witness: prev.witness.map(|(m, zeros)| (m, zeros + 1)),
        explored,
    });
    cache()
        .lock()
        .expect("cache lock")
        .insert((n, k), result.clone());
    result
}

fn build(k: usize, m: Vec<usize>, zeros: usize) -> LinearCode {
    let mv = MultiplicityVector::new(k, m).expect("geometry length");
    code_from_multiplicity(&mv)
        .expect("distance constraints force full rank")
        .extend_with_zeros(zeros)
}

fn check_k(n: usize, k: usize) -> Result<(), SearchError> {
    if k > 3 {
        return Err(SearchError::Unsupported { k });
    }
    if k == 0 || n < k {
        return Err(SearchError::InvalidParameters { n, k });
    }
    Ok(())
}

/// Exact `D₄ᴴ(n, k, 1)` for `k ≤ 3`, with a verified witness.
pub fn exhaustive_dh(n: usize, k: usize) -> Result<SearchOutcome, SearchError> {
    check_k(n, k)?;
    let top = level(n, k);
    let explored = (k..=n).map(|len| level(len, k).explored).sum();
    let witness = top.witness.map(|(m, zeros)| build(k, m, zeros));
    if let Some(c) = &witness {
        let hull = hull_dimension(c);
        let d = c.min_distance()?;
        if hull != 1 || d != top.best_d {
            return Err(SearchError::Verification(format!(
                "[{n},{k}] witness has hull {hull} and d = {d}, expected hull 1 and d = {}",
                top.best_d
            )));
        }
    }
    Ok(SearchOutcome {
        n,
        k,
        best_d: top.best_d,
        witness,
        exhaustive: true,
        explored,
    })
}

/// Decides whether an `[n, k, ≥ d]` code with one-dimensional hull exists,
/// returning either a witness or a certificate covering codes with and
/// without zero coordinates.
pub fn certify_nonexistence(n: usize, k: usize, d: usize) -> Result<Certification, SearchError> {
    check_k(n, k)?;
    let mut lengths_checked = Vec::new();
    let mut closed_by_bound_at = None;
    let mut examined = 0;
    for len in (k..=n).rev() {
        if BoundsReport::new(len, k).best() < d {
            closed_by_bound_at = Some(len);
            break;
        }
        let (witness, count) = first_hull_one(len, k, d);
        examined += count;
        if let Some(m) = witness {
            let code = build(k, m, n - len);
            if hull_dimension(&code) != 1
                || !code.min_distance_at_least(d, crate::code::DEFAULT_ENUMERATION_CAP)?
            {
                return Err(SearchError::Verification(format!(
                    "[{n},{k}] counterexample rejected"
                )));
            }
            return Ok(Certification::CounterexampleFound(code));
        }
        lengths_checked.push(len);
    }
    Ok(Certification::Certificate(NonexistenceCertificate {
        n,
        k,
        d,
        pruning_bounds: multiplicity_bounds(n, k, d),
        lengths_checked,
        closed_by_bound_at,
        vectors_examined: examined,
    }))
}

/// The eleven multiplicity vectors of length `5s + 3` left after the
/// column bounds in the `k = 2` analysis (with `m_1 ≤ m_2`); `s ≥ 1`.
pub fn table1_vectors(s: usize) -> Vec<MultiplicityVector> {
    const OFFSETS: [[isize; 5]; 11] = [
        [-1, 1, 1, 1, 1],
        [1, 1, -1, 1, 1],
        [1, 1, 1, -1, 1],
        [1, 1, 1, 1, -1],
        [0, 0, 1, 1, 1],
        [1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1],
        [1, 0, 1, 1, 0],
        [1, 1, 0, 0, 1],
        [1, 1, 0, 1, 0],
        [1, 1, 1, 0, 0],
    ];
    assert!(s >= 1, "table needs s ≥ 1");
    OFFSETS
        .iter()
        .map(|row| {
            let m = row.iter().map(|&o| (s as isize + o) as usize).collect();
            MultiplicityVector::new(2, m).expect("five entries")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::dh_closed_form;

    #[test]
    fn bounds_examples() {
        assert_eq!(multiplicity_bounds(16, 3, 12), Some((0, 1)));
        assert_eq!(multiplicity_bounds(21, 3, 16), Some((1, 1)));
        assert_eq!(multiplicity_bounds(37, 3, 28), Some((1, 2)));
        assert_eq!(multiplicity_bounds(10, 2, 7), Some((0, 3)));
        assert_eq!(multiplicity_bounds(4, 3, 5), None);
    }

    #[test]
    fn small_k_matches_closed_forms() {
        for n in 2..=12 {
            let o = exhaustive_dh(n, 1).unwrap();
            assert_eq!(
                Some(o.best_d),
                dh_closed_form(n, 1).map(|v| v.d()),
                "n = {n}"
            );
        }
        for n in 3..=10 {
            let o = exhaustive_dh(n, 2).unwrap();
            assert_eq!(
                Some(o.best_d),
                dh_closed_form(n, 2).map(|v| v.d()),
                "n = {n}"
            );
        }
    }

    #[test]
    fn exhaustive_examples() {
        let o = exhaustive_dh(10, 2).unwrap();
        assert_eq!((o.best_d, o.exhaustive), (7, true));
        assert_eq!(exhaustive_dh(5, 2).unwrap().best_d, 3);
        assert_eq!(exhaustive_dh(12, 3).unwrap().best_d, 8);
        assert_eq!(exhaustive_dh(2, 2).unwrap().best_d, 0);
        assert!(matches!(
            exhaustive_dh(9, 4),
            Err(SearchError::Unsupported { k: 4 })
        ));
    }

    #[test]
    fn certificate_examples() {
        let Certification::Certificate(c) = certify_nonexistence(16, 3, 12).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(c.pruning_bounds, Some((0, 1)));
        assert!(matches!(
            certify_nonexistence(12, 3, 8).unwrap(),
            Certification::CounterexampleFound(_)
        ));
    }

    #[test]
    fn leftover_vectors_never_have_hull_one() {
        for s in 1..=3 {
            for mv in table1_vectors(s) {
                assert_eq!(mv.length(), 5 * s + 3);
                let c = code_from_multiplicity(&mv).unwrap();
                assert!([0, 2].contains(&hull_dimension(&c)));
            }
        }
    }
}
