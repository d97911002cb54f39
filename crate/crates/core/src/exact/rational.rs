//! Exact rational matrices: Gaussian elimination, inverses, block (Schur)
//! determinants, and the closed det/inverse of aI + bJ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::matrix::IntMatrix;
use super::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Unsolvable,
}

/// Dense row-major matrix of exact rationals. `num_rational` keeps entries
/// reduced with positive denominators.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            BigRational::from_integer(m.get(i, j).clone())
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_int(&IntMatrix::from_i64_rows(rows))
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

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "conformality");
        RatMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Determinant by rational Gaussian elimination.
    pub fn det(&self) -> Result<Rat, RationalError> {
        if !self.is_square() {
            return Err(RationalError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut det = Rat::one();
        for k in 0..n {
            let pivot = match (k..n).find(|&r| !m[idx(r, k)].is_zero()) {
                Some(r) => r,
                None => return Ok(Rat::zero()),
            };
            if pivot != k {
                for j in 0..n {
                    m.swap(idx(k, j), idx(pivot, j));
                }
                det = -det;
            }
            let pv = m[idx(k, k)].clone();
            det *= &pv;
            for i in k + 1..n {
                if m[idx(i, k)].is_zero() {
                    continue;
                }
                let factor = &m[idx(i, k)] / &pv;
                for j in k..n {
                    let sub = &factor * &m[idx(k, j)];
                    m[idx(i, j)] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix, RationalError> {
        if !self.is_square() {
            return Err(RationalError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let pivot = (k..n)
                .find(|&r| !m.get(r, k).is_zero())
                .ok_or(RationalError::Singular)?;
            if pivot != k {
                for j in 0..n {
                    let a = m.get(k, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(k, j, b);
                    m.set(pivot, j, a);
                    let a = inv.get(k, j).clone();
                    let b = inv.get(pivot, j).clone();
                    inv.set(k, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let pv = m.get(k, k).clone();
            for j in 0..n {
                m.set(k, j, m.get(k, j) / &pv);
                inv.set(k, j, inv.get(k, j) / &pv);
            }
            for i in 0..n {
                if i == k || m.get(i, k).is_zero() {
                    continue;
                }
                let factor = m.get(i, k).clone();
                for j in 0..n {
                    let mv = m.get(i, j) - &factor * m.get(k, j);
                    m.set(i, j, mv);
                    let iv = inv.get(i, j) - &factor * inv.get(k, j);
                    inv.set(i, j, iv);
                }
            }
        }
        Ok(inv)
    }

    /// Solves self * x = b. Consistent singular systems return the particular
    /// solution with free variables set to zero; inconsistent systems error.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>, RationalError> {
        if b.len() != self.rows {
            return Err(RationalError::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}-vector", b.len()),
            });
        }
        let (rows, cols) = (self.rows, self.cols);
        let width = cols + 1;
        let mut m: Vec<Rat> = Vec::with_capacity(rows * width);
        for i in 0..rows {
            for j in 0..cols {
                m.push(self.get(i, j).clone());
            }
            m.push(b[i].clone());
        }
        let idx = |i: usize, j: usize| i * width + j;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let pivot = match (rank..rows).find(|&r| !m[idx(r, col)].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot != rank {
                for j in 0..width {
                    m.swap(idx(rank, j), idx(pivot, j));
                }
            }
            let pv = m[idx(rank, col)].clone();
            for j in col..width {
                let v = &m[idx(rank, j)] / &pv;
                m[idx(rank, j)] = v;
            }
            for i in 0..rows {
                if i == rank || m[idx(i, col)].is_zero() {
                    continue;
                }
                let factor = m[idx(i, col)].clone();
                for j in col..width {
                    let sub = &factor * &m[idx(rank, j)];
                    m[idx(i, j)] -= sub;
                }
            }
            pivots.push((rank, col));
            rank += 1;
            if rank == rows {
                break;
            }
        }
        for i in rank..rows {
            if !m[idx(i, cols)].is_zero() {
                return Err(RationalError::Unsolvable);
            }
        }
        let mut x = vec![Rat::zero(); cols];
        for (row, col) in pivots {
            x[col] = m[idx(row, cols)].clone();
        }
        Ok(x)
    }
}

/// Determinant of the block matrix [[A11, A12], [A21, A22]] via the Schur
/// complement: det(A22) * det(A11 - A12 A22^{-1} A21). A22 must be invertible.
pub fn schur_det(
    a11: &RatMatrix,
    a12: &RatMatrix,
    a21: &RatMatrix,
    a22: &RatMatrix,
) -> Result<Rat, RationalError> {
    let m = a11.rows();
    let s = a22.rows();
    if !a11.is_square() || !a22.is_square() {
        return Err(RationalError::NotSquare {
            rows: a11.rows(),
            cols: a11.cols(),
        });
    }
    if a12.rows() != m || a12.cols() != s || a21.rows() != s || a21.cols() != m {
        return Err(RationalError::DimensionMismatch {
            left: format!("A12 {}x{}", a12.rows(), a12.cols()),
            right: format!("A21 {}x{}", a21.rows(), a21.cols()),
        });
    }
    let a22_inv = a22.inverse()?;
    let complement = a11.sub(&a12.mul(&a22_inv).mul(a21));
    Ok(a22.det()? * complement.det()?)
}

/// Assembles [[A11, A12], [A21, A22]] into one matrix (test oracle and
/// display use).
pub fn assemble_block(
    a11: &RatMatrix,
    a12: &RatMatrix,
    a21: &RatMatrix,
    a22: &RatMatrix,
) -> RatMatrix {
    assert_eq!(a11.rows(), a12.rows());
    assert_eq!(a21.rows(), a22.rows());
    assert_eq!(a11.cols(), a21.cols());
    assert_eq!(a12.cols(), a22.cols());
    let top = a11.rows();
    let left = a11.cols();
    RatMatrix::from_fn(top + a21.rows(), left + a12.cols(), |i, j| {
        match (i < top, j < left) {
            (true, true) => a11.get(i, j).clone(),
            (true, false) => a12.get(i, j - left).clone(),
            (false, true) => a21.get(i - top, j).clone(),
            (false, false) => a22.get(i - top, j - left).clone(),
        }
    })
}

/// det(aI_n + bJ_n) = a^{n-1} (a + nb).
pub fn aibj_det(a: &Rat, b: &Rat, n: usize) -> Rat {
    assert!(n >= 1);
    let nb = Rat::from_integer(BigInt::from(n)) * b;
    pow_rat(a, n - 1) * (a + nb)
}

/// (aI_n + bJ_n)^{-1} = ((a+nb) I_n - b J_n) / (a (a+nb)). Errors when a = 0
/// or a + nb = 0 (the singular cases).
pub fn aibj_inv(a: &Rat, b: &Rat, n: usize) -> Result<RatMatrix, RationalError> {
    assert!(n >= 1);
    let a_nb = a + Rat::from_integer(BigInt::from(n)) * b;
    if a.is_zero() || a_nb.is_zero() {
        return Err(RationalError::Singular);
    }
    let scale = (a * &a_nb).recip();
    Ok(RatMatrix::from_fn(n, n, |i, j| {
        let entry = if i == j { &a_nb - b } else { -b.clone() };
        &scale * entry
    }))
}

fn pow_rat(a: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= a;
    }
    acc
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv.get(0, 0), &ratio(2, 3));
        assert_eq!(inv.get(0, 1), &ratio(-1, 3));
    }

    #[test]
    fn singular_inverse_errors() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse().unwrap_err(), RationalError::Singular);
    }

    #[test]
    fn solve_consistent_singular_system() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let x = m.solve(&[rat(3), rat(6)]).unwrap();
        // particular solution with the free variable zeroed
        assert_eq!(x, vec![rat(3), rat(0)]);
        assert_eq!(
            m.solve(&[rat(3), rat(7)]).unwrap_err(),
            RationalError::Unsolvable
        );
    }

    #[test]
    fn schur_matches_direct_det() {
        let a11 = RatMatrix::from_i64_rows(&[&[4]]);
        let a12 = RatMatrix::from_i64_rows(&[&[1, 1]]);
        let a21 = RatMatrix::from_i64_rows(&[&[1], &[1]]);
        let a22 = RatMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]);
        let d = schur_det(&a11, &a12, &a21, &a22).unwrap();
        assert_eq!(d, rat(12));
        let assembled = assemble_block(&a11, &a12, &a21, &a22);
        assert_eq!(assembled.det().unwrap(), rat(12));
    }

    #[test]
    fn schur_zero_offdiagonal_blocks() {
        let a11 = RatMatrix::from_i64_rows(&[&[3, 1], &[0, 2]]);
        let a12 = RatMatrix::zero(2, 2);
        let a21 = RatMatrix::zero(2, 2);
        let a22 = RatMatrix::from_i64_rows(&[&[5, 0], &[1, 1]]);
        let d = schur_det(&a11, &a12, &a21, &a22).unwrap();
        assert_eq!(d, a11.det().unwrap() * a22.det().unwrap());
    }

    #[test]
    fn schur_detects_repeated_rows() {
        let a11 = RatMatrix::from_i64_rows(&[&[1]]);
        let a12 = RatMatrix::from_i64_rows(&[&[1, 0]]);
        let a21 = RatMatrix::from_i64_rows(&[&[1], &[0]]);
        let a22 = RatMatrix::identity(2);
        assert_eq!(schur_det(&a11, &a12, &a21, &a22).unwrap(), rat(0));
    }

    #[test]
    fn schur_singular_a22_errors() {
        let a11 = RatMatrix::from_i64_rows(&[&[1]]);
        let a12 = RatMatrix::from_i64_rows(&[&[0, 0]]);
        let a21 = RatMatrix::from_i64_rows(&[&[0], &[0]]);
        let a22 = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            schur_det(&a11, &a12, &a21, &a22).unwrap_err(),
            RationalError::Singular
        );
    }

    #[test]
    fn aibj_examples() {
        assert_eq!(aibj_det(&rat(1), &rat(1), 2), rat(3));
        let inv = aibj_inv(&rat(1), &rat(1), 2).unwrap();
        assert_eq!(inv.get(0, 0), &ratio(2, 3));
        assert_eq!(inv.get(1, 0), &ratio(-1, 3));
        // b = 0: det a^n, inverse I/a
        assert_eq!(aibj_det(&rat(5), &rat(0), 3), rat(125));
        let inv = aibj_inv(&rat(5), &rat(0), 3).unwrap();
        assert_eq!(inv.get(0, 0), &ratio(1, 5));
        assert_eq!(inv.get(0, 1), &rat(0));
    }

    #[test]
    fn aibj_singular_case() {
        // a + nb = 0: determinant 0 and inverse errors
        assert_eq!(aibj_det(&rat(1), &ratio(-1, 3), 3), rat(0));
        assert_eq!(
            aibj_inv(&rat(1), &ratio(-1, 3), 3).unwrap_err(),
            RationalError::Singular
        );
        assert_eq!(
            aibj_inv(&rat(0), &rat(1), 2).unwrap_err(),
            RationalError::Singular
        );
    }

    #[test]
    fn aibj_inverse_back_multiplies() {
        for (a, b, n) in [(2i64, 1i64, 3usize), (3, -1, 4), (1, 7, 5), (-2, 3, 2)] {
            let a = rat(a);
            let b = rat(b);
            let m = RatMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    &a + &b
                } else {
                    b.clone()
                }
            });
            let inv = aibj_inv(&a, &b, n).unwrap();
            assert!(m.mul(&inv).is_identity(), "a={a} b={b} n={n}");
            assert_eq!(m.det().unwrap(), aibj_det(&a, &b, n));
        }
    }
}
