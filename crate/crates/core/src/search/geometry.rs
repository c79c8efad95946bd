//! Point–hyperplane incidences of PG(k−1, 4) in simplex column order, and
//! the Gram contributions `h·h̄ᵀ` of each point packed into bits.

use std::collections::HashMap;

use crate::construct::simplex_matrix;
use crate::gf4linalg::{Gf4, Gf4Matrix};

pub(crate) struct Geometry {
    pub k: usize,
    pub points: usize,
    /// Hyperplanes through each point. Hyperplane `u` is the set of points
    /// `h_i` with `u·h_i = 0`, messages `u` indexed like the points.
    pub through: Vec<Vec<usize>>,
    /// `h_i·h̄_iᵀ` as `k·k` two-bit entries; addition of Gram matrices is XOR.
    pub gram_bits: Vec<u32>,
    /// Rank of every Hermitian `k × k` matrix, keyed by its packed bits.
    ranks: HashMap<u32, usize>,
}

impl Geometry {
    pub fn new(k: usize) -> Self {
        assert!((1..=3).contains(&k));
        let s = simplex_matrix(k);
        let cols: Vec<Vec<Gf4>> = (0..s.cols()).map(|c| s.column(c)).collect();
        let points = cols.len();
        let dot =
            |u: &[Gf4], h: &[Gf4]| u.iter().zip(h).fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b);
        let hyperplanes: Vec<Vec<usize>> = cols
            .iter()
            .map(|u| {
                (0..points)
                    .filter(|&i| dot(u, &cols[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut through = vec![Vec::new(); points];
        for (u, plane) in hyperplanes.iter().enumerate() {
            for &i in plane {
                through[i].push(u);
            }
        }
        let gram_bits = cols
            .iter()
            .map(|h| {
                let mut bits = 0u32;
                for r in 0..k {
                    for c in 0..k {
                        bits |= ((h[r] * h[c].conj()).bits() as u32) << (2 * (r * k + c));
                    }
                }
                bits
            })
            .collect();
        Geometry {
            k,
            points,
            through,
            gram_bits,
            ranks: hermitian_ranks(k),
        }
    }

    pub fn gram_rank(&self, bits: u32) -> usize {
        self.ranks[&bits]
    }
}

fn unpack(k: usize, bits: u32) -> Gf4Matrix {
    let mut m = Gf4Matrix::zeros(k, k);
    for r in 0..k {
        for c in 0..k {
            m.set(
                r,
                c,
                Gf4::from_bits(((bits >> (2 * (r * k + c))) & 3) as u8),
            );
        }
    }
    m
}

/// Ranks of all Hermitian matrices: binary diagonal, `a_ji = conj(a_ij)`.
fn hermitian_ranks(k: usize) -> HashMap<u32, usize> {
    let upper: Vec<(usize, usize)> = (0..k)
        .flat_map(|r| (r + 1..k).map(move |c| (r, c)))
        .collect();
    let mut ranks = HashMap::new();
    for diag in 0u32..(1 << k) {
        for off in 0u32..(1 << (2 * upper.len())) {
            let mut bits = 0u32;
            for r in 0..k {
                bits |= ((diag >> r) & 1) << (2 * (r * k + r));
            }
            for (j, &(r, c)) in upper.iter().enumerate() {
                let x = Gf4::from_bits(((off >> (2 * j)) & 3) as u8);
                bits |= (x.bits() as u32) << (2 * (r * k + c));
                bits |= (x.conj().bits() as u32) << (2 * (c * k + r));
            }
            ranks.insert(bits, unpack(k, bits).rank());
        }
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_counts() {
        let sizes = |g: &Geometry| {
            let mut sizes = vec![0; g.points];
            for t in &g.through {
                for &u in t {
                    sizes[u] += 1;
                }
            }
            sizes
        };
        let g = Geometry::new(3);
        assert_eq!(g.points, 21);
        assert!(sizes(&g).iter().all(|&s| s == 5));
        assert!(g.through.iter().all(|t| t.len() == 5));
        let g = Geometry::new(2);
        assert!(sizes(&g).iter().all(|&s| s == 1));
    }

    #[test]
    fn packed_gram_matches_matrix_gram() {
        let g = Geometry::new(3);
        let s = simplex_matrix(3);
        let m = [
            2usize, 1, 0, 3, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0,
        ];
        let mut order = Vec::new();
        let mut bits = 0;
        for (i, &mi) in m.iter().enumerate() {
            order.extend(std::iter::repeat_n(i, mi));
            if mi % 2 == 1 {
                bits ^= g.gram_bits[i];
            }
        }
        let gram = s.select_columns(&order).hermitian_gram();
        assert_eq!(g.gram_rank(bits), gram.rank());
        for r in 0..3 {
            for c in 0..3 {
                let e = ((bits >> (2 * (r * 3 + c))) & 3) as u8;
                assert_eq!(Gf4::from_bits(e), gram.get(r, c));
            }
        }
    }
}
