//! Toeplitz matrix inversion from two linear solves.
//!
//! Given T = (a_{i-j}) with Tx = f and Ty = e_1 solvable, the inverse is
//! T^{-1} = T_1 U_1 + T_2 U_2 built from x and y. The published statement of
//! the formula lists f's entries in an order that fails back-multiplication
//! on nonsymmetric matrices; the order implemented here,
//! f = (0, a_{-(n-1)} - a_1, ..., a_{-1} - a_{n-1}), was fixed empirically
//! against exact T * T^{-1} = I checks (the two orders agree when T is
//! symmetric, where f = 0). The result is always back-verified before it is
//! returned, so a failure of the formula is reported, never propagated.

use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::{RatMatrix, RationalError};
use super::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToeplitzError {
    #[error("diagonal vector has length {got}, expected 2n-1 = {expected}")]
    BadDiagonals { got: usize, expected: usize },
    #[error("linear system {system} is unsolvable")]
    Unsolvable { system: &'static str },
    #[error("inversion formula produced a non-inverse (T * candidate != I)")]
    FormulaVerificationFailed,
}

/// An n x n Toeplitz matrix stored by diagonals: entry (i, j) = a_{i-j},
/// with a_{-(n-1)}..a_{n-1} kept as exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ToeplitzSpec {
    n: usize,
    diagonals: Vec<Rat>,
}

impl ToeplitzSpec {
    /// `diagonals` lists a_{-(n-1)}, ..., a_0, ..., a_{n-1} in that order.
    pub fn new(n: usize, diagonals: Vec<Rat>) -> Result<Self, ToeplitzError> {
        assert!(n >= 1);
        if diagonals.len() != 2 * n - 1 {
            return Err(ToeplitzError::BadDiagonals {
                got: diagonals.len(),
                expected: 2 * n - 1,
            });
        }
        Ok(ToeplitzSpec { n, diagonals })
    }

    /// The Toeplitz form of aI_n + bJ_n (a + b on the main diagonal, b off).
    pub fn from_aibj(a: &Rat, b: &Rat, n: usize) -> Self {
        let diagonals = (0..2 * n - 1)
            .map(|i| {
                if i == n - 1 {
                    a + b
                } else {
                    b.clone()
                }
            })
            .collect();
        ToeplitzSpec { n, diagonals }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Diagonal value a_d for d in -(n-1)..=(n-1).
    pub fn diagonal(&self, d: isize) -> &Rat {
        let n = self.n as isize;
        assert!(d.abs() < n);
        &self.diagonals[(d + n - 1) as usize]
    }

    pub fn to_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, self.n, |i, j| {
            self.diagonal(i as isize - j as isize).clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n as isize).all(|d| self.diagonal(d) == self.diagonal(-d))
    }
}

/// Inverts a Toeplitz matrix via the two-solve formula, then verifies
/// T * candidate = I exactly before returning.
pub fn toeplitz_inverse(spec: &ToeplitzSpec) -> Result<RatMatrix, ToeplitzError> {
    let n = spec.size();
    let t = spec.to_matrix();

    let mut f = vec![Rat::zero(); n];
    for i in 1..n {
        let d = (n - i) as isize;
        f[i] = spec.diagonal(-d) - spec.diagonal(i as isize);
    }
    let mut e1 = vec![Rat::zero(); n];
    e1[0] = Rat::one();

    let x = map_unsolvable(t.solve(&f), "Tx = f")?;
    let y = map_unsolvable(t.solve(&e1), "Ty = e1")?;

    // T1, T2 wrap y resp. x cyclically; U1 = I minus the strictly upper part
    // of the x wrap; U2 is the strictly upper part of the y wrap.
    let wrap = |v: &[Rat], i: usize, j: usize| v[(n + i - j) % n].clone();
    let t1 = RatMatrix::from_fn(n, n, |i, j| wrap(&y, i, j));
    let t2 = RatMatrix::from_fn(n, n, |i, j| wrap(&x, i, j));
    let u1 = RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Rat::one()
        } else if j > i {
            -wrap(&x, i, j)
        } else {
            Rat::zero()
        }
    });
    let u2 = RatMatrix::from_fn(n, n, |i, j| {
        if j > i {
            wrap(&y, i, j)
        } else {
            Rat::zero()
        }
    });

    let candidate = t1.mul(&u1).add(&t2.mul(&u2));
    if !t.mul(&candidate).is_identity() {
        return Err(ToeplitzError::FormulaVerificationFailed);
    }
    Ok(candidate)
}

fn map_unsolvable(
    r: Result<Vec<Rat>, RationalError>,
    system: &'static str,
) -> Result<Vec<Rat>, ToeplitzError> {
    r.map_err(|_| ToeplitzError::Unsolvable { system })
}
