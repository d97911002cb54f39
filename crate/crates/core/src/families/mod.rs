//! The integrality families C(n,m) and C(n,k,m), their closed-form Laplacian
//! characteristic polynomials, the orbit construction, parameter transfers,
//! and the integral-parameter search.
//!
//! C(n,m) joins the empty graph on n apexes to m disjoint copies of K_n along
//! the n-rotation: apex i is adjacent to vertex i of every copy. C(n,k,m)
//! does the same with k apexes and the rotation power of order k, so apex j
//! picks up the j-th block of d = n/k consecutive vertices in each copy.

mod verify;

pub use verify::{verify_suite, InstanceResult, SuiteGrid, VerificationReport, SUITE_NAMES};

use num_bigint::BigInt;
use num_integer::Roots;
use thiserror::Error;

use crate::exact::IntPolynomial;
use crate::graph::Graph;
use crate::spectra::{is_laplacian_integral, verify_equitable, EquitablePartition, SpectraError};
use crate::symmetry::{base_of, k_join, union_action, verify_k_symmetric, ActionError, CyclicAction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{k} does not divide {n}")]
    NotDivisor { n: usize, k: usize },
    #[error("parameter {name} must be at least {min}")]
    ParamTooSmall { name: &'static str, min: usize },
    #[error("source graph C({n},{k},{m}) is not Laplacian integral")]
    NonIntegralSource { n: usize, k: usize, m: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("bad grid spec: {0}")]
    BadGrid(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Parameters (n, k, m) of C(n,k,m); C(n,m) is the k = n case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: usize,
    pub k: usize,
    pub m: usize,
}

impl FamilyParams {
    pub fn cnm(n: usize, m: usize) -> Self {
        FamilyParams { n, k: n, m }
    }

    /// Block width d = n/k.
    pub fn d(&self) -> usize {
        self.n / self.k
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        build_cnkm(self.n, self.k, self.m)
    }
}

/// C(n,m): n apexes 0..n-1, copy c of K_n on vertices n + c*n .. n + c*n + n-1,
/// apex i adjacent to vertex i of every copy.
pub fn build_cnm(n: usize, m: usize) -> Graph {
    build_cnkm(n, n, m).expect("n divides n")
}

/// C(n,k,m) = empty graph on k apexes joined by the k-symmetric join to m
/// copies of K_n; apex j is adjacent to vertices c*n + j*d .. c*n + (j+1)*d - 1
/// of each copy c (shifted by the k apexes). Requires k | n.
pub fn build_cnkm(n: usize, k: usize, m: usize) -> Result<Graph, FamilyError> {
    check_at_least("n", n, 1)?;
    check_at_least("k", k, 1)?;
    check_at_least("m", m, 1)?;
    if n % k != 0 {
        return Err(FamilyError::NotDivisor { n, k });
    }
    let (graph, _action, _partition) = cnkm_with_partition(n, k, m)?;
    Ok(graph)
}

fn check_at_least(name: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        return Err(FamilyError::ParamTooSmall { name, min });
    }
    Ok(())
}

/// Builds C(n,k,m) through the join machinery, returning its k-symmetric
/// action and the equitable partition (apexes, copy_1, ..., copy_m).
pub fn cnkm_with_partition(
    n: usize,
    k: usize,
    m: usize,
) -> Result<(Graph, CyclicAction, EquitablePartition), FamilyError> {
    let d = n / k;
    let apexes = Graph::empty(k).expect("k >= 1");
    let apex_rotation: Vec<usize> = (0..k).map(|j| (j + 1) % k).collect();
    let apex_action = verify_k_symmetric(&apexes, &apex_rotation, k)?;

    // union of m copies of K_n, each carrying the order-k rotation i -> i+d
    let clique = Graph::complete(n).expect("n >= 1");
    let clique_rotation: Vec<usize> = (0..n).map(|i| (i + d) % n).collect();
    let clique_action = verify_k_symmetric(&clique, &clique_rotation, k)?;
    let mut copies = clique.clone();
    let mut copies_action = clique_action.clone();
    for _ in 1..m {
        copies_action = union_action(&copies, &copies_action, &clique, &clique_action)?;
        copies = copies.disjoint_union(&clique);
    }

    let (graph, action) = k_join(
        &apexes,
        &apex_action,
        &base_of(&apex_action),
        &copies,
        &copies_action,
        &base_of(&copies_action),
    )?;

    let mut blocks: Vec<Vec<usize>> = vec![(0..k).collect()];
    for c in 0..m {
        blocks.push((k + c * n..k + (c + 1) * n).collect());
    }
    let partition = verify_equitable(&graph, &blocks)?;
    Ok((graph, action, partition))
}

/// Theorem closed form for C(n,m):
/// x (x-1)^(m-1) (x-(n+1))^((m-1)(n-1)) (x-(m+1)) (x^2-(m+n+1)x+mn)^(n-1).
pub fn closed_cnm_charpoly(n: usize, m: usize) -> IntPolynomial {
    closed_cnkm_charpoly(n, n, m).expect("n divides n")
}

/// Theorem closed form for C(n,k,m) with d = n/k:
/// x (x-1)^(m-1) (x-(n+1))^(m(n-1)-k+1) (x-(md+1)) (x^2-(md+n+1)x+mdn)^(k-1).
pub fn closed_cnkm_charpoly(n: usize, k: usize, m: usize) -> Result<IntPolynomial, FamilyError> {
    check_at_least("n", n, 1)?;
    check_at_least("k", k, 1)?;
    check_at_least("m", m, 1)?;
    if n % k != 0 {
        return Err(FamilyError::NotDivisor { n, k });
    }
    let d = n / k;
    let md = (m * d) as i64;
    let n_i = n as i64;
    let linear = |r: i64| IntPolynomial::x_minus(&BigInt::from(r));
    let mut p = IntPolynomial::x();
    p = p.mul(&linear(1).pow(m - 1));
    p = p.mul(&linear(n_i + 1).pow(m * (n - 1) + 1 - k));
    p = p.mul(&linear(md + 1));
    let quadratic = IntPolynomial::from_coeffs(vec![
        BigInt::from(md * n_i),
        BigInt::from(-(md + n_i + 1)),
        BigInt::from(1),
    ]);
    p = p.mul(&quadratic.pow(k - 1));
    debug_assert_eq!(p.degree(), m * n + k);
    Ok(p)
}

/// C(n,k,m) is Laplacian integral iff its quadratic factor splits over the
/// integers (or is absent, k = 1): square discriminant shortcut.
pub fn is_integral_cnkm_params(n: usize, k: usize, m: usize) -> Result<bool, FamilyError> {
    check_at_least("n", n, 1)?;
    check_at_least("k", k, 1)?;
    check_at_least("m", m, 1)?;
    if n % k != 0 {
        return Err(FamilyError::NotDivisor { n, k });
    }
    if k == 1 {
        return Ok(true);
    }
    let md = (m * (n / k)) as i64;
    let n = n as i64;
    let disc = (md + n + 1) * (md + n + 1) - 4 * md * n;
    let root = disc.sqrt();
    Ok(root * root == disc)
}

/// Square-discriminant test for C(n,m) (always integral at n = 1).
pub fn is_integral_cnm_params(n: usize, m: usize) -> bool {
    is_integral_cnkm_params(n, n, m).expect("n divides n")
}

/// Builds the orbit construction G = empty_k joined by the k-symmetric join
/// to (G_1 u ... u G_l), all parts carrying order-k actions, and returns the
/// graph with its validated equitable partition (apexes, V_1, ..., V_l).
pub fn orbit_construction(
    k: usize,
    parts: &[(Graph, CyclicAction)],
) -> Result<(Graph, EquitablePartition), FamilyError> {
    check_at_least("k", k, 1)?;
    check_at_least("l", parts.len(), 1)?;
    for (_, action) in parts {
        if action.k() != k {
            return Err(FamilyError::Action(ActionError::OrderMismatch {
                left: k,
                right: action.k(),
            }));
        }
    }
    let mut union = parts[0].0.clone();
    let mut action = parts[0].1.clone();
    for (g, a) in &parts[1..] {
        action = union_action(&union, &action, g, a)?;
        union = union.disjoint_union(g);
    }

    let apexes = Graph::empty(k).expect("k >= 1");
    let apex_rotation: Vec<usize> = (0..k).map(|j| (j + 1) % k).collect();
    let apex_action = verify_k_symmetric(&apexes, &apex_rotation, k)?;
    let (graph, _) = k_join(
        &apexes,
        &apex_action,
        &base_of(&apex_action),
        &union,
        &action,
        &base_of(&action),
    )?;

    let mut blocks: Vec<Vec<usize>> = vec![(0..k).collect()];
    let mut offset = k;
    for (g, _) in parts {
        blocks.push((offset..offset + g.order()).collect());
        offset += g.order();
    }
    let partition = verify_equitable(&graph, &blocks)?;
    Ok((graph, partition))
}

/// Corollary parameters: C(kl, (k+1)(l-1)) is Laplacian integral for l >= 2;
/// the quadratic factor splits as (x - k(l-1))(x - l(k+1)).
pub fn integral_params_kl(k: usize, l: usize) -> Result<FamilyParams, FamilyError> {
    check_at_least("k", k, 1)?;
    check_at_least("l", l, 2)?;
    Ok(FamilyParams::cnm(k * l, (k + 1) * (l - 1)))
}

/// Corollary parameters: C(k^2+k, k^2+k) is regular and Laplacian integral.
pub fn regular_integral_param(k: usize) -> FamilyParams {
    let n = k * k + k;
    FamilyParams::cnm(n, n)
}

/// From integral C(n,n,m) with d | n and d | m down to C(n, n/d, m/d); the
/// quadratic factor is unchanged, so integrality transfers.
pub fn transfer_down(n: usize, m: usize, d: usize) -> Result<FamilyParams, FamilyError> {
    check_at_least("d", d, 1)?;
    if n % d != 0 {
        return Err(FamilyError::NotDivisor { n, k: d });
    }
    if m % d != 0 {
        return Err(FamilyError::NotDivisor { n: m, k: d });
    }
    if !is_integral_cnm_params(n, m) {
        return Err(FamilyError::NonIntegralSource { n, k: n, m });
    }
    Ok(FamilyParams {
        n,
        k: n / d,
        m: m / d,
    })
}

/// From integral C(n,k,m) with d = n/k up to C(n, n, m*d); same quadratic.
pub fn transfer_up(n: usize, k: usize, m: usize) -> Result<FamilyParams, FamilyError> {
    if n % k != 0 {
        return Err(FamilyError::NotDivisor { n, k });
    }
    if !is_integral_cnkm_params(n, k, m)? {
        return Err(FamilyError::NonIntegralSource { n, k, m });
    }
    let d = n / k;
    Ok(FamilyParams::cnm(n, m * d))
}

/// All pairs (n, m) with n <= max_n, m <= max_m and C(n,m) Laplacian
/// integral, lexicographic, via the discriminant shortcut.
pub fn search_integral_cnm(max_n: usize, max_m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            if is_integral_cnm_params(n, m) {
                out.push((n, m));
            }
        }
    }
    out
}

/// The slow oracle for the search: build every graph and factor its full
/// spectrum.
pub fn search_integral_cnm_bruteforce(max_n: usize, max_m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            if is_laplacian_integral(&build_cnm(n, m)) {
                out.push((n, m));
            }
        }
    }
    out
}

/// First induced P_4 in lexicographic vertex order, if any. A graph with no
/// induced P_4 is a cograph.
pub fn cograph_witness(g: &Graph) -> Option<[usize; 4]> {
    let n = g.order();
    // ordered scan over the path's vertex sequence (a-b-c-d), canonicalized
    // by a < d to visit each path once
    for b in 0..n {
        for c in 0..n {
            if c == b || !g.has_edge(b, c) {
                continue;
            }
            for a in 0..n {
                if a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c) {
                    continue;
                }
                for d in a + 1..n {
                    if d == b || d == c {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}
