//! Laplacian matrices and exact spectra.
//!
//! Spectra are represented symbolically: the integer eigenvalues with
//! multiplicities plus a monic residual polynomial with no integer roots.
//! Nothing on a decision path is floating point; the residual's roots are
//! only approximated for display.

mod partition;

pub use partition::{divisor_contained, verify_equitable, DivisorMatrix, EquitablePartition};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{count_roots_in_halfopen, IntMatrix, IntPolynomial};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("blocks do not partition the vertex set: {reason}")]
    NotAPartition { reason: String },
    #[error("partition is not equitable: vertex {vertex} has {got} neighbors in block {block}, expected {expected}")]
    NotEquitable {
        vertex: usize,
        block: usize,
        got: usize,
        expected: usize,
    },
    #[error("spectrum has a non-split residual factor; operation needs a fully integral spectrum")]
    NonIntegralSpectrum,
}

/// L(G) = D(G) - A(G): symmetric, zero row sums, degrees on the diagonal.
pub fn laplacian(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), g.order(), |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else if g.has_edge(i, j) {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Monic degree-n characteristic polynomial of L(G); x always divides it.
pub fn laplacian_charpoly(g: &Graph) -> IntPolynomial {
    laplacian(g).charpoly().expect("laplacian is square")
}

/// Multiplicity of lambda as a Laplacian eigenvalue: n - rank(L - lambda I).
pub fn multiplicity(g: &Graph, lambda: &BigInt) -> usize {
    let n = g.order();
    let l = laplacian(g);
    let shifted = IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            l.get(i, j) - lambda
        } else {
            l.get(i, j).clone()
        }
    });
    n - shifted.rank()
}

/// Exact Laplacian spectrum: integer eigenvalues with multiplicities plus the
/// residual non-split factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    order: usize,
    integer_eigenvalues: Vec<(BigInt, usize)>,
    residual: IntPolynomial,
}

#[derive(Serialize)]
struct SpectrumJson {
    n: usize,
    integer: Vec<(u64, usize)>,
    residual: Vec<String>,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.order
    }

    /// (eigenvalue, multiplicity) pairs, ascending by eigenvalue.
    pub fn integer_eigenvalues(&self) -> &[(BigInt, usize)] {
        &self.integer_eigenvalues
    }

    pub fn residual(&self) -> &IntPolynomial {
        &self.residual
    }

    pub fn is_integral(&self) -> bool {
        self.residual.is_one()
    }

    pub fn multiplicity_of(&self, lambda: &BigInt) -> usize {
        self.integer_eigenvalues
            .iter()
            .find(|(v, _)| v == lambda)
            .map_or(0, |(_, m)| *m)
    }

    /// The full multiset of eigenvalues, ascending. Errors unless integral.
    pub fn multiset(&self) -> Result<Vec<BigInt>, SpectraError> {
        if !self.is_integral() {
            return Err(SpectraError::NonIntegralSpectrum);
        }
        let mut out = Vec::with_capacity(self.order);
        for (v, m) in &self.integer_eigenvalues {
            out.extend(std::iter::repeat_with(|| v.clone()).take(*m));
        }
        Ok(out)
    }

    /// Rebuilds the full characteristic polynomial.
    pub fn charpoly(&self) -> IntPolynomial {
        let mut p = self.residual.clone();
        for (v, m) in &self.integer_eigenvalues {
            p = p.mul(&IntPolynomial::x_minus(v).pow(*m));
        }
        p
    }

    /// Display form like `0^1 1^2 4^1` with `* residual` appended when the
    /// spectrum does not split.
    pub fn eigenvalue_summary(&self) -> String {
        let mut parts: Vec<String> = self
            .integer_eigenvalues
            .iter()
            .map(|(v, m)| format!("{v}^{m}"))
            .collect();
        if !self.is_integral() {
            parts.push(format!("* roots of {}", self.residual));
        }
        parts.join(" ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let integer = self
            .integer_eigenvalues
            .iter()
            .map(|(v, m)| (v.to_u64().expect("eigenvalues lie in [0, n]"), *m))
            .collect();
        serde_json::to_value(SpectrumJson {
            n: self.order,
            integer,
            residual: self.residual.to_coeff_strings(),
        })
        .expect("plain data serializes")
    }

    /// Float approximations of the residual roots for display only, by
    /// bisection with exact sign evaluations (tolerance 1e-9).
    pub fn approximate_residual_roots(&self) -> Vec<f64> {
        let mut roots = Vec::new();
        if self.is_integral() {
            return roots;
        }
        let squarefree = self.residual.squarefree_part();
        let n = self.order as i64;
        for t in 0..n {
            let count = count_roots_in_halfopen(&squarefree, t, t + 1);
            if count == 0 {
                continue;
            }
            // residual roots are non-integer, so (t, t+1) is safe to split
            isolate_and_bisect(&squarefree, rational(t), rational(t + 1), count, &mut roots);
        }
        roots
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Recursively splits (lo, hi) until each piece holds one root, then bisects.
fn isolate_and_bisect(
    p: &IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    count: usize,
    out: &mut Vec<f64>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(bisect_single_root(p, lo, hi));
        return;
    }
    let mid = (&lo + &hi) / rational(2);
    let left = count_roots_between(p, &lo, &mid);
    isolate_and_bisect(p, lo, mid.clone(), left, out);
    isolate_and_bisect(p, mid, hi, count - left, out);
}

/// Distinct roots of squarefree p in (lo, hi], rational endpoints.
fn count_roots_between(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> usize {
    // scale to integers: count on the scaled polynomial q(y) = p(y/s) cleared
    // of denominators, which maps roots r to s*r.
    let s = lo.denom() * hi.denom();
    let scaled = scale_argument(p, &s);
    let lo_i = (lo * BigRational::from_integer(s.clone())).to_integer();
    let hi_i = (hi * BigRational::from_integer(s.clone())).to_integer();
    count_roots_in_halfopen(
        &scaled,
        lo_i.to_i64().expect("display-scale bounds"),
        hi_i.to_i64().expect("display-scale bounds"),
    )
}

/// p(x) with x = y/s, cleared: sum a_i s^(d-i) y^i.
fn scale_argument(p: &IntPolynomial, s: &BigInt) -> IntPolynomial {
    let d = p.degree();
    let coeffs = (0..=d)
        .map(|i| p.coeff(i) * s.pow((d - i) as u32))
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

fn bisect_single_root(p: &IntPolynomial, mut lo: BigRational, mut hi: BigRational) -> f64 {
    // signs differ at the ends of an isolating interval of a squarefree poly
    let mut flo = p.eval_rational(&lo);
    if flo.is_zero() {
        return lo.to_f64().unwrap_or(f64::NAN);
    }
    let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / rational(2);
        let fmid = p.eval_rational(&mid);
        if fmid.is_zero() {
            return mid.to_f64().unwrap_or(f64::NAN);
        }
        if fmid.is_negative() == flo.is_negative() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    ((&lo + &hi) / rational(2)).to_f64().unwrap_or(f64::NAN)
}

/// Factors the Laplacian characteristic polynomial into integer roots and a
/// residual. 0 always appears with multiplicity = component count.
pub fn spectrum(g: &Graph) -> Spectrum {
    let p = laplacian_charpoly(g);
    let (integer_eigenvalues, residual) = p.integer_roots();
    let s = Spectrum {
        order: g.order(),
        integer_eigenvalues,
        residual,
    };
    debug_assert_eq!(
        s.multiplicity_of(&BigInt::zero()),
        g.component_count(),
        "zero multiplicity equals component count"
    );
    s
}

pub fn is_laplacian_integral(g: &Graph) -> bool {
    spectrum(g).is_integral()
}

/// Spectrum of the complement from an integral spectrum: keep one 0, replace
/// the other n-1 eigenvalues lambda by n - lambda.
pub fn complement_spectrum(s: &Spectrum) -> Result<Spectrum, SpectraError> {
    let values = s.multiset()?;
    let n = BigInt::from(s.order());
    let mut out: Vec<BigInt> = values
        .iter()
        .skip(1) // drop one zero (values are ascending, 0 is always present)
        .map(|v| &n - v)
        .collect();
    out.push(BigInt::zero());
    out.sort();
    let mut grouped: Vec<(BigInt, usize)> = Vec::new();
    for v in out {
        match grouped.last_mut() {
            Some((last, m)) if *last == v => *m += 1,
            _ => grouped.push((v, 1)),
        }
    }
    Ok(Spectrum {
        order: s.order(),
        integer_eigenvalues: grouped,
        residual: IntPolynomial::one(),
    })
}

/// Number of spanning trees: the Laplacian minor with row and column 0
/// deleted (0 for disconnected graphs, 1 for K_1).
pub fn spanning_trees(g: &Graph) -> BigInt {
    laplacian(g)
        .delete_row_col(0, 0)
        .det()
        .expect("square minor")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_examples() {
        let k2 = laplacian(&Graph::complete(2).unwrap());
        assert_eq!(k2, IntMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]));
        let e3 = laplacian(&Graph::empty(3).unwrap());
        assert_eq!(e3, IntMatrix::zero(3, 3));
        let k3 = laplacian(&Graph::complete(3).unwrap());
        let expected = IntMatrix::identity(3)
            .scalar_mul(&BigInt::from(3))
            .sub(&IntMatrix::all_ones(3));
        assert_eq!(k3, expected);
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Graph::petersen();
        let l = laplacian(&g);
        for i in 0..10 {
            let sum: BigInt = (0..10).map(|j| l.get(i, j).clone()).sum();
            assert!(sum.is_zero());
        }
        assert!(l.is_symmetric());
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            laplacian_charpoly(&Graph::complete(3).unwrap()).factored(),
            "x(x-3)^2"
        );
        assert_eq!(
            laplacian_charpoly(&Graph::empty(4).unwrap()),
            IntPolynomial::from_i64(&[0, 0, 0, 0, 1])
        );
        // P_4: x(x-2)(x^2-4x+2)
        assert_eq!(
            laplacian_charpoly(&Graph::path(4).unwrap()).factored(),
            "x(x-2)(x^2-4x+2)"
        );
    }

    #[test]
    fn multiplicity_by_rank() {
        let two_k2 = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap());
        assert_eq!(multiplicity(&two_k2, &BigInt::zero()), 2);
        assert_eq!(multiplicity(&Graph::star(3), &BigInt::one()), 2);
    }

    #[test]
    fn multiplicity_agrees_with_charpoly_route() {
        for g in [
            Graph::complete(4).unwrap(),
            Graph::star(3),
            Graph::cycle(6).unwrap(),
            Graph::path(4).unwrap(),
        ] {
            let s = spectrum(&g);
            for lambda in 0..=g.order() {
                let lambda = BigInt::from(lambda);
                assert_eq!(
                    multiplicity(&g, &lambda),
                    s.multiplicity_of(&lambda),
                    "{g:?} at {lambda}"
                );
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let k4 = spectrum(&Graph::complete(4).unwrap());
        assert!(k4.is_integral());
        assert_eq!(
            k4.integer_eigenvalues(),
            &[(BigInt::from(0), 1), (BigInt::from(4), 3)]
        );

        let p4 = spectrum(&Graph::path(4).unwrap());
        assert!(!p4.is_integral());
        assert_eq!(
            p4.integer_eigenvalues(),
            &[(BigInt::from(0), 1), (BigInt::from(2), 1)]
        );
        assert_eq!(p4.residual(), &IntPolynomial::from_i64(&[2, -4, 1]));
        assert!(p4.multiset().is_err());
    }

    #[test]
    fn spectrum_trace_identity() {
        for g in [Graph::petersen(), Graph::star(4), Graph::path(5).unwrap()] {
            let s = spectrum(&g);
            let mut trace: BigInt = s
                .integer_eigenvalues()
                .iter()
                .map(|(v, m)| v * BigInt::from(*m))
                .sum();
            if !s.is_integral() {
                let d = s.residual().degree();
                trace += -s.residual().coeff(d - 1);
            }
            assert_eq!(trace, BigInt::from(2 * g.edge_count()));
        }
    }

    #[test]
    fn integrality_examples() {
        assert!(is_laplacian_integral(&Graph::star(3)));
        assert!(!is_laplacian_integral(&Graph::path(4).unwrap()));
        assert!(is_laplacian_integral(&Graph::petersen()));
        assert!(!is_laplacian_integral(&Graph::cycle(5).unwrap()));
    }

    #[test]
    fn complement_spectrum_star() {
        // K_{1,3}: {0,1,1,4} -> complement K_3 u K_1: {0,0,3,3}
        let s = spectrum(&Graph::star(3));
        let c = complement_spectrum(&s).unwrap();
        assert_eq!(
            c.integer_eigenvalues(),
            &[(BigInt::from(0), 2), (BigInt::from(3), 2)]
        );
        assert_eq!(c, spectrum(&Graph::star(3).complement()));
    }

    #[test]
    fn complement_spectrum_complete_and_empty() {
        let n = 5;
        let k = spectrum(&Graph::complete(n).unwrap());
        let c = complement_spectrum(&k).unwrap();
        assert_eq!(c.integer_eigenvalues(), &[(BigInt::zero(), n)]);
        let e = spectrum(&Graph::empty(n).unwrap());
        let c = complement_spectrum(&e).unwrap();
        assert_eq!(
            c.integer_eigenvalues(),
            &[(BigInt::zero(), 1), (BigInt::from(n), n - 1)]
        );
    }

    #[test]
    fn complement_spectrum_rejects_non_integral() {
        let s = spectrum(&Graph::path(4).unwrap());
        assert_eq!(
            complement_spectrum(&s).unwrap_err(),
            SpectraError::NonIntegralSpectrum
        );
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(spanning_trees(&Graph::complete(4).unwrap()), BigInt::from(16));
        assert_eq!(spanning_trees(&Graph::cycle(5).unwrap()), BigInt::from(5));
        assert_eq!(spanning_trees(&Graph::petersen()), BigInt::from(2000));
        let two_k2 = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap());
        assert_eq!(spanning_trees(&two_k2), BigInt::zero());
        assert_eq!(spanning_trees(&Graph::complete(1).unwrap()), BigInt::one());
    }

    #[test]
    fn kirchhoff_equals_eigenvalue_product() {
        for g in [Graph::complete(5).unwrap(), Graph::star(4), Graph::cycle(6).unwrap()] {
            let s = spectrum(&g);
            let product: BigInt = s
                .multiset()
                .unwrap()
                .iter()
                .skip(1)
                .product();
            assert_eq!(spanning_trees(&g) * BigInt::from(g.order()), product);
        }
    }

    #[test]
    fn approximate_roots_for_display() {
        let s = spectrum(&Graph::path(4).unwrap());
        let roots = s.approximate_residual_roots();
        assert_eq!(roots.len(), 2);
        let expected = [2.0 - std::f64::consts::SQRT_2, 2.0 + std::f64::consts::SQRT_2];
        for (got, want) in roots.iter().zip(expected) {
            assert!((got - want).abs() < 1e-8, "{got} vs {want}");
        }
    }

    #[test]
    fn spectrum_json_shape() {
        let v = spectrum(&Graph::star(3)).to_json();
        assert_eq!(v["n"], 4);
        assert_eq!(v["integer"][0][0], 0);
        assert_eq!(v["residual"][0], "1");
    }
}
