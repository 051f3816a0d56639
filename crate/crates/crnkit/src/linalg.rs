//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream (stoichiometric matrices, homology, Schur
//! complements) reduces to the operations here: reduced row echelon form,
//! rank, null spaces on either side, exact solving and subspace containment.
//! Matrices are immutable row-major grids of [`Rational`]; `0×n` and `n×0`
//! shapes are legal everywhere.
//!
//! Dimension mismatches between operands are programmer errors and panic;
//! data-dependent failures (a singular input to [`Matrix::inverse`]) are
//! reported through `Result`.

use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows × cols` matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of row reduction: the reduced form, its pivot columns (strictly
/// increasing) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Error for data-dependent linear-algebra failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// `inverse` was called on a matrix of deficient rank.
    Singular { size: usize, rank: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Singular { size, rank } => {
                write!(f, "matrix of size {size} is singular (rank {rank})")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

impl Matrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        Matrix { rows: n_rows, cols: n_cols, data: rows.into_iter().flatten().collect() }
    }

    /// Convenience constructor from integer literals, mostly for tests and
    /// fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&n| rational::int(n)).collect()).collect(),
        )
    }

    /// A single column vector.
    pub fn column_vector(entries: Vec<Rational>) -> Self {
        let rows = entries.len();
        Matrix { rows, cols: 1, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "hstack: row counts differ");
        Matrix::from_fn(self.rows, self.cols + right.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { right.get(i, j - self.cols).clone() }
        })
    }

    /// Vertical concatenation of `self` on top of `below`.
    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "vstack: column counts differ");
        Matrix::from_fn(self.rows + below.rows, self.cols, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { below.get(i - self.rows, j).clone() }
        })
    }

    /// Assembles `[[a, b], [c, d]]` from conformable blocks.
    pub fn from_blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        a.hstack(b).vstack(&c.hstack(d))
    }

    /// The submatrix picked out by the given row and column indices, in the
    /// given order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix {
        Matrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Reduced row echelon form with pivot bookkeeping. Pivoting picks the
    /// first nonzero entry per column; exact arithmetic needs no numerical
    /// strategy.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..m.cols {
                    m.data.swap(src * m.cols + j, pivot_row * m.cols + j);
                }
            }
            let inv = Rational::one() / m.get(pivot_row, col).clone();
            for j in col..m.cols {
                let v = m.get(pivot_row, j).clone() * &inv;
                m.set(pivot_row, j, v);
            }
            for i in 0..m.rows {
                if i == pivot_row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = m.get(i, j).clone() - &factor * m.get(pivot_row, j);
                    m.set(i, j, v);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        Rref { matrix: m, pivot_cols, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of `ker(self)` as matrix columns; `cols − rank` of them.
    pub fn null_space_basis(&self) -> Matrix {
        let Rref { matrix: r, pivot_cols, rank } = self.rref();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, self.cols - rank);
        for (k, &free) in free_cols.iter().enumerate() {
            basis.set(free, k, Rational::one());
            for (row, &piv) in pivot_cols.iter().enumerate() {
                basis.set(piv, k, -r.get(row, free).clone());
            }
        }
        basis
    }

    /// A basis of the left null space (row vectors `c` with `c·self = 0`) as
    /// matrix rows; `rows − rank` of them.
    pub fn left_null_space_basis(&self) -> Matrix {
        self.transpose().null_space_basis().transpose()
    }

    /// A particular solution of `self · x = b`, or `None` when `b ∉ im(self)`.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.cols, 1, "solve: right-hand side must be a column vector");
        self.solve_columns(b)
    }

    /// Columnwise solving: a matrix `X` with `self · X = rhs`, or `None` if
    /// any column of `rhs` is outside `im(self)`.
    pub fn solve_columns(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row counts differ");
        let n = self.cols;
        let Rref { matrix: r, pivot_cols, .. } = self.hstack(rhs).rref();
        if pivot_cols.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for (row, &piv) in pivot_cols.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(piv, j, r.get(row, n + j).clone());
            }
        }
        Some(x)
    }

    /// Whether `im(other) ⊆ im(self)`, i.e. every column of `other` is
    /// solvable against `self`. Decided by `rank([self | other]) = rank(self)`.
    pub fn column_space_contains(&self, other: &Matrix) -> bool {
        assert_eq!(self.rows, other.rows, "column_space_contains: row counts differ");
        self.hstack(other).rank() == self.rank()
    }

    /// Whether `ker(self) ⊆ ker(other)`, decided by `other · B = 0` for a
    /// kernel basis `B` of `self`.
    pub fn kernel_contains(&self, other: &Matrix) -> bool {
        assert_eq!(self.cols, other.cols, "kernel_contains: column counts differ");
        (other * &self.null_space_basis()).is_zero()
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        assert!(self.is_square(), "inverse: matrix is not square");
        let n = self.rows;
        let Rref { matrix: r, pivot_cols, .. } = self.hstack(&Matrix::identity(n)).rref();
        // A pivot escaping into the identity block means the left block has
        // deficient rank.
        if pivot_cols.iter().any(|&c| c >= n) {
            return Err(LinalgError::Singular { size: n, rank: self.rank() });
        }
        Ok(r.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
    }

    /// Determinant by elimination with row swaps.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "det: matrix is not square");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return Rational::zero();
            };
            if src != col {
                for j in 0..n {
                    m.data.swap(src * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for i in col + 1..n {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone() / &pivot;
                for j in col..n {
                    let v = m.get(i, j).clone() - &factor * m.get(col, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Rows rendered with aligned columns, coefficients in canonical form.
    pub fn render_rows(&self) -> Vec<String> {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| rational::display(self.get(i, j))).collect()).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        cells
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(j, c)| format!("{c:>width$}", width = widths[j]))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for line in self.render_rows() {
            writeln!(f, "  {line}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.render_rows();
        write!(f, "{}", lines.join("\n"))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul: inner dimensions differ");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shapes differ");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shapes differ");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j).clone())
    }
}
