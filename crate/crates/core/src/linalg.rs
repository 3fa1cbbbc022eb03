//! Dense matrices over an arbitrary [`Field`] with Gaussian elimination.

use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::field::{Field, SampleNonzero};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self
    where
        F: SampleNonzero,
    {
        Matrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| F::sample_nonzero(rng)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: F) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero_column(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.get(r, c).is_zero())
    }

    /// The submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).clone() + a.clone() * rhs.get(l, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rank by row reduction on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut scratch = self.clone();
        scratch.row_reduce()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return F::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = det * p.clone();
            for r in col + 1..n {
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                let factor = f / p.clone();
                for c in col..n {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(col, c).clone();
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    /// True iff the listed columns are linearly independent.
    pub fn columns_independent(&self, cols: &[usize]) -> bool {
        if cols.len() > self.rows {
            return false;
        }
        self.select_columns(cols).rank() == cols.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place forward elimination; returns the rank.
    fn row_reduce(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot, rank);
            let p = self.get(rank, col).clone();
            for r in rank + 1..self.rows {
                let f = self.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                let factor = f / p.clone();
                for c in col..self.cols {
                    let v = self.get(r, c).clone() - factor.clone() * self.get(rank, c).clone();
                    self.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// A growing set of linearly independent vectors kept in echelon form.
///
/// Each stored vector has a pivot coordinate at which every other stored
/// vector inserted after it is zero, so sequential reduction is exact.
#[derive(Clone, Debug)]
pub struct IncrementalBasis<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> IncrementalBasis<F> {
    pub fn new(dim: usize) -> Self {
        IncrementalBasis { dim, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &mut [F]) {
        for (pivot, row) in &self.rows {
            let f = v[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
    }

    pub fn in_span(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` if it lies outside the current span; returns whether it did.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim);
        if self.is_full() {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / w[pivot].clone();
        for x in w.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push((pivot, w));
        true
    }
}
