//! Bit-plane packed GF(4) vectors and projective codeword enumeration.
//!
//! A vector of length `n ≤ 64·W` is stored as two bit planes: `lo` holds the
//! `1` component of each coordinate and `hi` the `ω` component. Addition is
//! XOR on both planes and the Hamming weight is `popcount(lo | hi)`.

use rayon::prelude::*;

use crate::gf4linalg::Gf4Matrix;

/// Largest number of inner Gray-code steps handled by one work item.
const CHUNK_BITS: usize = 14;
/// Below this many codewords the scan stays on the calling thread.
const PARALLEL_THRESHOLD: u64 = 1 << 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Packed<const W: usize> {
    lo: [u64; W],
    hi: [u64; W],
}

impl<const W: usize> Packed<W> {
    const ZERO: Self = Packed {
        lo: [0; W],
        hi: [0; W],
    };

    fn from_row(row: &[crate::Gf4]) -> Self {
        let mut p = Self::ZERO;
        for (c, x) in row.iter().enumerate() {
            let bits = x.bits() as u64;
            p.lo[c / 64] |= (bits & 1) << (c % 64);
            p.hi[c / 64] |= (bits >> 1) << (c % 64);
        }
        p
    }

    #[inline(always)]
    fn xor_assign(&mut self, other: &Self) {
        for i in 0..W {
            self.lo[i] ^= other.lo[i];
            self.hi[i] ^= other.hi[i];
        }
    }

    /// Multiplication by ω: `a + bω ↦ b + (a + b)ω`.
    fn times_omega(&self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..W {
            out.lo[i] = self.hi[i];
            out.hi[i] = self.lo[i] ^ self.hi[i];
        }
        out
    }

    #[inline(always)]
    fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += (self.lo[i] | self.hi[i]).count_ones();
        }
        w
    }
}

/// One contiguous slice of the projective codeword space: a starting vector
/// plus a binary Gray-code basis walked from it.
struct Chunk<const W: usize> {
    start: Packed<W>,
    basis: Vec<Packed<W>>,
}

impl<const W: usize> Chunk<W> {
    fn len(&self) -> u64 {
        1u64 << self.basis.len()
    }

    /// Visits every codeword of the chunk; stops early when `visit` returns false.
    #[inline]
    fn walk(&self, mut visit: impl FnMut(u32) -> bool) -> bool {
        let mut cur = self.start;
        if !visit(cur.weight()) {
            return false;
        }
        let steps = self.len();
        for t in 1..steps {
            cur.xor_assign(&self.basis[t.trailing_zeros() as usize]);
            if !visit(cur.weight()) {
                return false;
            }
        }
        true
    }
}

/// Splits the projective codewords of a full-rank generator (one per
/// 1-dimensional subspace: leading message coefficient equal to 1) into chunks.
fn chunks<const W: usize>(generator: &Gf4Matrix) -> Vec<Chunk<W>> {
    let rows: Vec<Packed<W>> = generator.row_iter().map(Packed::from_row).collect();
    let k = rows.len();
    let mut out = Vec::new();
    for lead in 0..k {
        let mut tail = Vec::with_capacity(2 * (k - lead - 1));
        for row in &rows[lead + 1..] {
            tail.push(*row);
            tail.push(row.times_omega());
        }
        let split = tail.len().saturating_sub(CHUNK_BITS);
        let inner = tail.len() - split;
        let (low, high) = tail.split_at(inner);
        for mask in 0u64..(1u64 << split) {
            let mut start = rows[lead];
            for (b, v) in high.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    start.xor_assign(v);
                }
            }
            out.push(Chunk {
                start,
                basis: low.to_vec(),
            });
        }
    }
    out
}

fn projective_count(k: usize) -> u64 {
    ((1u64 << (2 * k)) - 1) / 3
}

fn histogram_w<const W: usize>(generator: &Gf4Matrix) -> Vec<u64> {
    let n = generator.cols();
    let chunks = chunks::<W>(generator);
    let count = |c: &Chunk<W>| {
        let mut h = vec![0u64; n + 1];
        c.walk(|w| {
            h[w as usize] += 1;
            true
        });
        h
    };
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    if projective_count(generator.rows()) < PARALLEL_THRESHOLD {
        chunks.iter().map(count).fold(vec![0; n + 1], merge)
    } else {
        chunks
            .par_iter()
            .map(count)
            .reduce(|| vec![0; n + 1], merge)
    }
}

fn any_below_w<const W: usize>(generator: &Gf4Matrix, bound: u32) -> bool {
    let chunks = chunks::<W>(generator);
    let hit = |c: &Chunk<W>| !c.walk(|w| w >= bound);
    if projective_count(generator.rows()) < PARALLEL_THRESHOLD {
        chunks.iter().any(hit)
    } else {
        chunks.par_iter().any(hit)
    }
}

macro_rules! dispatch_width {
    ($n:expr, $f:ident, $($arg:expr),*) => {{
        let n = $n;
        if n <= 64 {
            $f::<1>($($arg),*)
        } else if n <= 128 {
            $f::<2>($($arg),*)
        } else if n <= 256 {
            $f::<4>($($arg),*)
        } else if n <= 512 {
            $f::<8>($($arg),*)
        } else {
            assert!(n <= MAX_PACKED_LENGTH, "code length {} exceeds packed limit", n);
            $f::<16>($($arg),*)
        }
    }};
}

/// Longest code length the packed enumerator supports.
pub(crate) const MAX_PACKED_LENGTH: usize = 1024;

/// Histogram of weights over projective codewords (each nonzero codeword is
/// one of 3 scalar multiples of exactly one projective representative).
/// The generator must have full row rank.
pub(crate) fn projective_weight_histogram(generator: &Gf4Matrix) -> Vec<u64> {
    if generator.rows() == 0 {
        return vec![0; generator.cols() + 1];
    }
    dispatch_width!(generator.cols(), histogram_w, generator)
}

/// True when some nonzero codeword has weight strictly below `bound`.
pub(crate) fn has_codeword_below(generator: &Gf4Matrix, bound: u32) -> bool {
    if generator.rows() == 0 {
        return false;
    }
    dispatch_width!(generator.cols(), any_below_w, generator, bound)
}
