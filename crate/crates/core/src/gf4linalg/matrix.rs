use std::fmt;

use super::{Gf4, LinalgError};

/// Dense row-major matrix over GF(4).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf4Matrix {
            rows,
            cols,
            data: vec![Gf4::ZERO; rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Gf4::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length. An empty row list yields a
    /// `0 × cols` matrix, so the column count is passed explicitly.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Gf4>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Gf4Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Parses rows of whitespace-separated symbols `0 1 w W`.
    pub fn from_symbol_rows(rows: &[&str]) -> Result<Self, LinalgError> {
        let mut parsed = Vec::with_capacity(rows.len());
        for (r, line) in rows.iter().enumerate() {
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let mut chars = tok.chars();
                let x = match (chars.next(), chars.next()) {
                    (Some(c), None) => Gf4::from_symbol(c, false),
                    _ => None,
                }
                .ok_or_else(|| LinalgError::BadSymbol {
                    row: r,
                    token: tok.to_string(),
                })?;
                row.push(x);
            }
            parsed.push(row);
        }
        let cols = parsed.first().map_or(0, Vec::len);
        Self::from_rows(cols, parsed)
    }

    /// Builds a matrix from a list of columns of height `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Gf4>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::RaggedRow {
                    row: j,
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Gf4) {
        self.data[r * self.cols + c] = x;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Gf4] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Gf4]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Gf4> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Entry-wise conjugate `Ā`.
    pub fn conj(&self) -> Self {
        Gf4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn conj_transpose(&self) -> Self {
        self.conj().transpose()
    }

    pub fn mul(&self, rhs: &Gf4Matrix) -> Result<Gf4Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Hermitian Gram matrix `G·Ḡᵀ`; entry (i, j) is `Σ_l g_il · conj(g_jl)`.
    pub fn hermitian_gram(&self) -> Gf4Matrix {
        let mut out = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                out.set(i, j, hermitian_dot(self.row(i), self.row(j)));
            }
        }
        out
    }

    /// Reduced row-echelon form and its pivot columns. Columns are scanned
    /// left to right and the first row at or below the current pivot row
    /// holding a nonzero entry becomes the pivot. Zero rows are kept at the
    /// bottom, so the result has the same shape as the input.
    pub fn rref(&self) -> (Gf4Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.get(pivot_row, c).inv().expect("pivot is nonzero");
            m.scale_row(pivot_row, inv);
            for other in 0..m.rows {
                if other != pivot_row {
                    let factor = m.get(other, c);
                    if !factor.is_zero() {
                        m.add_scaled_row(other, pivot_row, factor);
                    }
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{x : M·xᵀ = 0}`; `cols − rank` rows.
    pub fn kernel(&self) -> Gf4Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            basis.set(b, f, Gf4::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                // x_pc + r[pr][f]·x_f = 0 and -1 = 1
                basis.set(b, pc, r.get(pr, f));
            }
        }
        basis
    }

    /// Rows that are not identically zero, in order.
    pub fn nonzero_rows(&self) -> Gf4Matrix {
        let rows: Vec<Vec<Gf4>> = self
            .row_iter()
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .map(|row| row.to_vec())
            .collect();
        Gf4Matrix::from_rows(self.cols, rows).expect("rows share the column count")
    }

    /// Keeps the listed columns in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Gf4Matrix {
        let mut out = Self::zeros(self.rows, columns.len());
        for r in 0..self.rows {
            for (j, &c) in columns.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Drops the listed columns (duplicates and order are irrelevant).
    pub fn delete_columns(&self, columns: &[usize]) -> Gf4Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|c| !columns.contains(c)).collect();
        self.select_columns(&keep)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Gf4Matrix {
        let picked = rows.iter().map(|&r| self.row(r).to_vec()).collect();
        Gf4Matrix::from_rows(self.cols, picked).expect("rows share the column count")
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Gf4Matrix) -> Result<Gf4Matrix, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c));
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, rhs: &Gf4Matrix) -> Result<Gf4Matrix, LinalgError> {
        if self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Gf4Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// Row vector times matrix: `x·M`.
    pub fn left_mul_vec(&self, x: &[Gf4]) -> Vec<Gf4> {
        assert_eq!(x.len(), self.rows, "vector length must match row count");
        let mut out = vec![Gf4::ZERO; self.cols];
        for (r, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o += a * g;
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, r: usize, factor: Gf4) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// `row[dst] += factor · row[src]`
    pub fn add_scaled_row(&mut self, dst: usize, src: usize, factor: Gf4) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + factor * self.get(src, c);
            self.set(dst, c, v);
        }
    }
}

/// Hermitian inner product `⟨u, v⟩_H = Σ u_i · conj(v_i)`.
pub fn hermitian_dot(u: &[Gf4], v: &[Gf4]) -> Gf4 {
    u.iter()
        .zip(v)
        .fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b.conj())
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf4Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|x| x.symbol().to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        write!(f, "]")
    }
}
