//! Dense big-integer matrices with fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    /// The n x n identity I_n.
    pub fn identity(n: usize) -> Self {
        IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    /// The n x n all-ones matrix J_n.
    pub fn all_ones(n: usize) -> Self {
        IntMatrix::from_fn(n, n, |_, _| BigInt::one())
    }

    /// The all-ones column vector 1_n (n x 1).
    pub fn ones_vector(n: usize) -> Self {
        IntMatrix::from_fn(n, 1, |_, _| BigInt::one())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Self {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scalar_mul(&self, s: &BigInt) -> Self {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "conformality");
        IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    /// Kronecker product in the standard block layout.
    pub fn kron(&self, other: &Self) -> Self {
        IntMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
        })
    }

    /// Copy with row i and column j deleted.
    pub fn delete_row_col(&self, row: usize, col: usize) -> Self {
        assert!(row < self.rows && col < self.cols);
        IntMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    /// Exact determinant by fraction-free Bareiss elimination with row
    /// pivoting. The empty matrix has determinant 1.
    pub fn det(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            let pivot = match (k..n).find(|&r| !m[idx(r, k)].is_zero()) {
                Some(r) => r,
                None => return Ok(BigInt::zero()),
            };
            if pivot != k {
                for j in 0..n {
                    m.swap(idx(k, j), idx(pivot, j));
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[idx(i, j)] * &m[idx(k, k)] - &m[idx(i, k)] * &m[idx(k, j)];
                    m[idx(i, j)] = exact_div(num, &prev);
                }
                m[idx(i, k)] = BigInt::zero();
            }
            prev = m[idx(k, k)].clone();
        }
        let det = m[idx(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Rank over the rationals by fraction-free row echelon with row and
    /// column pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * cols + j;
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for col in 0..cols {
            let pivot = match (rank..rows).find(|&r| !m[idx(r, col)].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot != rank {
                for j in 0..cols {
                    m.swap(idx(rank, j), idx(pivot, j));
                }
            }
            for i in rank + 1..rows {
                for j in col + 1..cols {
                    let num = &m[idx(i, j)] * &m[idx(rank, col)] - &m[idx(i, col)] * &m[idx(rank, j)];
                    m[idx(i, j)] = exact_div(num, &prev);
                }
                m[idx(i, col)] = BigInt::zero();
            }
            prev = m[idx(rank, col)].clone();
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Monic characteristic polynomial det(xI - M), computed exactly by
    /// evaluating det(tI - M) at the integer nodes t = 0..=n and
    /// interpolating with finite differences.
    pub fn charpoly(&self) -> Result<IntPolynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut values = Vec::with_capacity(n + 1);
        for t in 0..=n {
            let t = BigInt::from(t);
            let shifted = IntMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    &t - self.get(i, j)
                } else {
                    -self.get(i, j)
                }
            });
            values.push(shifted.det().expect("square by construction"));
        }
        let poly = interpolate_integer_nodes(&values);
        debug_assert_eq!(poly.degree(), n);
        debug_assert!(poly.is_monic() || n == 0);
        Ok(poly)
    }
}

/// Interpolates the unique degree-<=n polynomial through (t, values[t]) for
/// t = 0..=n, via Newton forward differences in the falling-factorial basis.
/// Panics if the interpolant is not integer-coefficiented.
fn interpolate_integer_nodes(values: &[BigInt]) -> IntPolynomial {
    let n = values.len();
    let mut diff = values.to_vec();
    let mut result = IntPolynomial::zero();
    let mut basis = IntPolynomial::one();
    let mut factorial = BigInt::one();
    for k in 0..n {
        if k > 0 {
            for i in (k..n).rev() {
                let prev = diff[i - 1].clone();
                diff[i] -= prev;
            }
            factorial *= BigInt::from(k);
            basis = basis.mul(&IntPolynomial::x_minus(&BigInt::from(k as i64 - 1)));
        }
        let c = exact_div(diff[k].clone(), &factorial);
        result = result.add(&basis.mul_scalar(&c));
    }
    result
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
