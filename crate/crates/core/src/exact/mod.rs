//! Exact linear algebra and polynomial arithmetic over the integers and
//! rationals. Everything here is deterministic and allocation-heavy rather
//! than clever: desk-scale matrices, correctness first.

mod matrix;
mod poly;
mod rational;
mod toeplitz;

pub use matrix::{IntMatrix, MatrixError};
pub use poly::{count_roots_in_halfopen, IntPolynomial, PolyError};
pub use rational::{aibj_det, aibj_inv, assemble_block, schur_det, RatMatrix, RationalError};
pub use toeplitz::{toeplitz_inverse, ToeplitzError, ToeplitzSpec};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an exact rational scalar.
pub type Rat = BigRational;

/// Rational from an integer numerator.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d in lowest terms.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
