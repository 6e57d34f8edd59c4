//! Dense matrices over a prime field, with the exact linear algebra the
//! planners rely on: rank, inversion, and deterministic system solving.
//!
//! Matrices are immutable values; every operation returns a new matrix.
//! Elimination uses first-nonzero pivoting in fixed column order, so all
//! results are deterministic.

use super::field::{FieldElement, FieldSpec};
use super::AlgebraError;

/// A rows x cols matrix over GF(p), entries stored row-major and reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<u64>,
}

impl Matrix {
    /// Builds a matrix from rows of integers, reducing each entry modulo p.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u64>]) -> Result<Self, AlgebraError> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 {
            return Err(AlgebraError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(height * width);
        for row in rows {
            if row.len() != width {
                return Err(AlgebraError::RaggedRows);
            }
            entries.extend(row.iter().map(|&v| v % field.prime()));
        }
        Ok(Matrix {
            rows: height,
            cols: width,
            field,
            entries,
        })
    }

    /// Builds a matrix from columns of integers.
    pub fn from_columns(field: FieldSpec, columns: &[Vec<u64>]) -> Result<Self, AlgebraError> {
        let width = columns.len();
        let height = columns.first().map_or(0, Vec::len);
        if height == 0 || width == 0 {
            return Err(AlgebraError::EmptyMatrix);
        }
        let mut out = Matrix::zero(field, height, width);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != height {
                return Err(AlgebraError::RaggedRows);
            }
            for (i, &v) in col.iter().enumerate() {
                out.set(i, j, v % field.prime());
            }
        }
        Ok(out)
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Raw entry value at (row, col).
    pub fn at(&self, row: usize, col: usize) -> u64 {
        debug_assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col]
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        self.field.element(self.at(row, col))
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: u64) {
        debug_assert!(value < self.field.prime());
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.at(r, col)).collect()
    }

    /// The submatrix formed by the given columns, in the given order.
    /// Indices must be in range.
    pub fn select_columns(&self, indices: &[usize]) -> Matrix {
        assert!(!indices.is_empty(), "column selection must be nonempty");
        let mut out = Matrix::zero(self.field, self.rows, indices.len());
        for (j, &c) in indices.iter().enumerate() {
            assert!(c < self.cols, "column index {c} out of range");
            for r in 0..self.rows {
                out.set(r, j, self.at(r, c));
            }
        }
        out
    }

    /// Columns start, start+1, ..., start+width-1 taken modulo cols, in that
    /// order. `start` itself is reduced modulo cols.
    pub fn cyclic_window(&self, start: usize, width: usize) -> Result<Matrix, AlgebraError> {
        if width == 0 || width > self.cols {
            return Err(AlgebraError::WidthTooLarge {
                width,
                cols: self.cols,
            });
        }
        let indices: Vec<usize> = (0..width).map(|i| (start + i) % self.cols).collect();
        Ok(self.select_columns(&indices))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    /// Horizontal concatenation [self | right].
    pub fn hstack(&self, right: &Matrix) -> Result<Matrix, AlgebraError> {
        self.same_field(right)?;
        if self.rows != right.rows {
            return Err(AlgebraError::DimensionMismatch {
                context: "hstack",
                left: (self.rows, self.cols),
                right: (right.rows, right.cols),
            });
        }
        let mut out = Matrix::zero(self.field, self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c));
            }
            for c in 0..right.cols {
                out.set(r, self.cols + c, right.at(r, c));
            }
        }
        Ok(out)
    }

    /// Standard matrix product over GF(p).
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, AlgebraError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch {
                context: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.at(r, c);
                    out.set(r, c, f.add(cur, f.mul(a, other.at(k, c))));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: x * self, where x has length `rows`.
    pub fn row_vec_mul(&self, x: &[u64]) -> Result<Vec<u64>, AlgebraError> {
        if x.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch {
                context: "row_vec_mul",
                left: (1, x.len()),
                right: (self.rows, self.cols),
            });
        }
        let f = self.field;
        let mut out = vec![0u64; self.cols];
        for (r, &xv) in x.iter().enumerate() {
            let xv = xv % f.prime();
            if xv == 0 {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(xv, self.at(r, c)));
            }
        }
        Ok(out)
    }

    /// Matrix times column vector: self * v, where v has length `cols`.
    pub fn col_vec_mul(&self, v: &[u64]) -> Result<Vec<u64>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                context: "col_vec_mul",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(0u64, |acc, c| {
                    f.add(acc, f.mul(self.at(r, c), v[c] % f.prime()))
                })
            })
            .collect())
    }

    /// Rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.reduce().len()
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Result<Matrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                context: "inverse",
                left: (self.rows, self.cols),
                right: (self.cols, self.rows),
            });
        }
        let mut work = self.hstack(&Matrix::identity(self.field, self.rows))?;
        let pivots = work.reduce();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &(_, c))| c != i) {
            return Err(AlgebraError::Singular);
        }
        let indices: Vec<usize> = (self.cols..2 * self.cols).collect();
        Ok(work.select_columns(&indices))
    }

    /// Solves self * x = rhs for a column vector x. Returns `None` when the
    /// system is inconsistent; free variables are set to zero, so the
    /// solution is deterministic.
    pub fn solve_column(&self, rhs: &[u64]) -> Result<Option<Vec<u64>>, AlgebraError> {
        if rhs.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch {
                context: "solve_column",
                left: (rhs.len(), 1),
                right: (self.rows, self.cols),
            });
        }
        let rhs_matrix = Matrix::from_columns(self.field, &[rhs.to_vec()])?;
        let mut work = self.hstack(&rhs_matrix)?;
        let pivots = work.reduce();
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![0u64; self.cols];
        for &(r, c) in &pivots {
            x[c] = work.at(r, self.cols);
        }
        Ok(Some(x))
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// positions (row, col) in column order.
    fn reduce(&mut self) -> Vec<(usize, usize)> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = f
                .inv(self.at(pivot_row, col))
                .expect("pivot entry is nonzero");
            self.scale_row(pivot_row, inv);
            for r in 0..self.rows {
                if r != pivot_row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    self.add_scaled_row(r, pivot_row, f.neg(factor));
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (va, vb) = (self.at(a, c), self.at(b, c));
            self.set(a, c, vb);
            self.set(b, c, va);
        }
    }

    fn scale_row(&mut self, row: usize, factor: u64) {
        for c in 0..self.cols {
            let v = self.at(row, c);
            self.set(row, c, self.field.mul(v, factor));
        }
    }

    /// row[target] += factor * row[source]
    fn add_scaled_row(&mut self, target: usize, source: usize, factor: u64) {
        for c in 0..self.cols {
            let v = self.field.mul(factor, self.at(source, c));
            let cur = self.at(target, c);
            self.set(target, c, self.field.add(cur, v));
        }
    }

    fn same_field(&self, other: &Matrix) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field.prime(),
                right: other.field.prime(),
            });
        }
        Ok(())
    }
}

/// Solves X * g_sub = y for the row vector X, with g_sub square and
/// invertible: X = y * g_sub^-1.
pub fn row_vec_solve(g_sub: &Matrix, y: &[u64]) -> Result<Vec<u64>, AlgebraError> {
    if g_sub.rows() != g_sub.cols() || y.len() != g_sub.cols() {
        return Err(AlgebraError::DimensionMismatch {
            context: "row_vec_solve",
            left: (1, y.len()),
            right: (g_sub.rows(), g_sub.cols()),
        });
    }
    let inv = g_sub.inverse()?;
    inv.row_vec_mul(y)
}
