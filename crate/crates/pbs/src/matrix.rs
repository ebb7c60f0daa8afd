//! Dense matrices over the exact rationals, with deterministic reduced row
//! echelon form and nullspace computation.
//!
//! The eigenstructure routines in [`crate::spectral`] reduce everything to
//! exact nullspace computations of `M − λI`, so the two requirements on this
//! module are exactness and *determinism*: the same matrix must always produce
//! the identical echelon form and the identical nullspace basis, bit for bit.
//! Pivots are therefore chosen positionally (first row with a nonzero entry in
//! the current column), never by magnitude — there is no numerical stability
//! to buy with exact arithmetic, and positional choice makes the output
//! reproducible.
//!
//! The nullspace basis is *echelon-normalized*: one basis vector per free
//! column of the echelon form, carrying a `1` in that free column, the forced
//! values in the pivot columns, and `0` in every other free column. Bases are
//! ordered by free column index, so independent runs (and independent
//! implementations following the same convention) agree exactly.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// A vector with exact rational coordinates.
pub type RationalVector = Vec<Rational>;

/// A dense `rows × cols` matrix with exact rational entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    /// The zero matrix of the given shape. Either dimension may be zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from its rows.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] if the rows do not all have the
    /// same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::dims("rows of a matrix must all have the same length"));
        }
        Ok(RationalMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix with integer entries from machine-integer rows.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] if the rows do not all have the
    /// same length.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The entry at row `i`, column `j` (zero-based).
    ///
    /// # Panics
    ///
    /// Panics if the indices are out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }

    /// Replaces the entry at row `i`, column `j` (zero-based).
    ///
    /// # Panics
    ///
    /// Panics if the indices are out of range.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.data[i * self.cols + j] = value;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Rational] {
        assert!(i < self.rows, "row index {i} out of range");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn column(&self, j: usize) -> RationalVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Sum of the entries in column `j`.
    pub fn column_sum(&self, j: usize) -> Rational {
        self.column(j).into_iter().sum()
    }

    /// Sum of all entries.
    pub fn total_sum(&self) -> Rational {
        self.data.iter().cloned().sum()
    }

    /// Matrix product `self · other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] unless `self.cols() == other.rows()`.
    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product `self · v`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] unless `v.len() == self.cols()`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<RationalVector> {
        if v.len() != self.cols {
            return Err(Error::dims(format!(
                "cannot apply a {}×{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Entrywise difference `self − other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] unless the shapes agree.
    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(format!(
                "cannot subtract a {}×{} matrix from a {}×{} matrix",
                other.rows, other.cols, self.rows, self.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self − λ·I`, defined for square matrices.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] if the matrix is not square.
    pub fn minus_scalar_identity(&self, lambda: &Rational) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::dims("self − λI requires a square matrix"));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i) - lambda;
            out.set(i, i, v);
        }
        Ok(out)
    }

    /// The transpose.
    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// The pivot in each column is the *first* row (top to bottom) with a
    /// nonzero entry among the rows not yet used; this positional rule makes
    /// the result deterministic. Pivot columns are returned in increasing
    /// order.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // First nonzero entry in this column at or below `pivot_row`.
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(pivot_row, j).clone();
                    let b = m.get(src, j).clone();
                    m.set(pivot_row, j, b);
                    m.set(src, j, a);
                }
            }
            let inv = {
                let p = m.get(pivot_row, col).clone();
                Rational::one() / p
            };
            for j in 0..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &factor * m.get(pivot_row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// The rank (number of pivots in the echelon form).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// An echelon-normalized basis of the right nullspace `{v : Mv = 0}`.
    ///
    /// One basis vector per free column, ordered by free column index; the
    /// vector for free column `f` has a `1` in coordinate `f`, `0` in every
    /// other free coordinate, and the forced values in the pivot coordinates.
    /// A matrix with no columns (in particular the `0×0` matrix) has an empty
    /// basis. The basis is fully determined by the input matrix, so repeated
    /// runs agree exactly.
    pub fn nullspace(&self) -> Vec<RationalVector> {
        let (r, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
