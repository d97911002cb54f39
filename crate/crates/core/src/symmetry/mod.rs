//! Free cyclic group actions on graphs and the k-symmetric join.
//!
//! A graph is k-symmetric when Z_k acts freely on its vertices by
//! automorphisms; the generator is stored as a validated [`CyclicAction`].
//! Freeness means every cycle of the permutation has length exactly k, so k
//! divides the order and each orbit picks up exactly one base representative.

mod search;

pub use search::{find_k_symmetric, SearchOutcome, DEFAULT_SEARCH_BUDGET};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("permutation has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("image sequence is not a permutation (value {0} repeats or is out of range)")]
    NotPermutation(usize),
    #[error("permutation is not an automorphism: edge {{{u}, {v}}} maps to a non-edge")]
    NotAutomorphism { u: usize, v: usize },
    #[error("action is not free of order {k}: vertex {vertex} lies on a cycle of length {cycle_len}")]
    NotFree {
        k: usize,
        vertex: usize,
        cycle_len: usize,
    },
    #[error("k must be at least 1")]
    ZeroOrder,
    #[error("actions have different orders: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("{d} does not divide the action order {k}")]
    NotDivisor { d: usize, k: usize },
    #[error("invalid base: {reason}")]
    InvalidBase { reason: String },
    #[error("action order {k} must equal the graph order {n} for this operation")]
    NotFullOrbit { k: usize, n: usize },
    #[error("unbalanced or malformed cycle notation: {0}")]
    BadCycleNotation(String),
}

/// A validated free Z_k action: sigma is an automorphism of its host graph
/// and every sigma-cycle has length exactly k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicAction {
    k: usize,
    sigma: Vec<usize>,
}

/// One representative per orbit, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Base {
    representatives: Vec<usize>,
}

impl Base {
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

impl CyclicAction {
    /// The always-valid 1-symmetric action.
    pub fn identity(g: &Graph) -> CyclicAction {
        CyclicAction {
            k: 1,
            sigma: (0..g.order()).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn graph_order(&self) -> usize {
        self.sigma.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.sigma[v]
    }

    /// v, sigma(v), sigma^2(v), ... back to v.
    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        let mut orbit = vec![v];
        let mut w = self.sigma[v];
        while w != v {
            orbit.push(w);
            w = self.sigma[w];
        }
        orbit
    }

    /// Orbits ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.sigma.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let orbit = self.orbit_of(v);
            for &w in &orbit {
                seen[w] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Disjoint-cycle notation, fixed points omitted unless k = 1.
    pub fn cycle_notation(&self) -> String {
        if self.k == 1 {
            return "()".to_string();
        }
        let mut out = String::new();
        for orbit in self.orbits() {
            out.push('(');
            out.push_str(
                &orbit
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        out
    }
}

/// True iff sigma preserves adjacency in both directions. Errors on a wrong
/// length or non-bijective image sequence.
pub fn is_automorphism(g: &Graph, sigma: &[usize]) -> Result<bool, ActionError> {
    check_permutation(g.order(), sigma)?;
    Ok(automorphism_violation(g, sigma).is_none())
}

fn check_permutation(n: usize, sigma: &[usize]) -> Result<(), ActionError> {
    if sigma.len() != n {
        return Err(ActionError::LengthMismatch {
            got: sigma.len(),
            expected: n,
        });
    }
    let mut seen = vec![false; n];
    for &v in sigma {
        if v >= n || seen[v] {
            return Err(ActionError::NotPermutation(v));
        }
        seen[v] = true;
    }
    Ok(())
}

fn automorphism_violation(g: &Graph, sigma: &[usize]) -> Option<(usize, usize)> {
    // a bijection preserving all edges preserves non-edges by counting
    g.edges()
        .find(|&(u, v)| !g.has_edge(sigma[u], sigma[v]))
}

/// Validates sigma as a k-symmetric automorphism of g: an automorphism whose
/// cycles all have length exactly k.
pub fn verify_k_symmetric(g: &Graph, sigma: &[usize], k: usize) -> Result<CyclicAction, ActionError> {
    if k == 0 {
        return Err(ActionError::ZeroOrder);
    }
    check_permutation(g.order(), sigma)?;
    if let Some((u, v)) = automorphism_violation(g, sigma) {
        return Err(ActionError::NotAutomorphism { u, v });
    }
    let n = g.order();
    let mut seen = vec![false; n];
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let mut len = 1;
        let mut w = sigma[v];
        seen[v] = true;
        while w != v {
            seen[w] = true;
            w = sigma[w];
            len += 1;
        }
        if len != k {
            return Err(ActionError::NotFree {
                k,
                vertex: v,
                cycle_len: len,
            });
        }
    }
    Ok(CyclicAction {
        k,
        sigma: sigma.to_vec(),
    })
}

/// Canonical base: the smallest vertex of each orbit, ascending.
pub fn base_of(action: &CyclicAction) -> Base {
    let mut reps: Vec<usize> = action
        .orbits()
        .into_iter()
        .map(|orbit| orbit.into_iter().min().unwrap())
        .collect();
    reps.sort_unstable();
    Base {
        representatives: reps,
    }
}

/// Validates an explicit choice of one representative per orbit.
pub fn validate_base(action: &CyclicAction, reps: &[usize]) -> Result<Base, ActionError> {
    let n = action.graph_order();
    let expected = n / action.k();
    if reps.len() != expected {
        return Err(ActionError::InvalidBase {
            reason: format!("{} representatives, expected {}", reps.len(), expected),
        });
    }
    let mut orbit_of = vec![usize::MAX; n];
    for (i, orbit) in action.orbits().iter().enumerate() {
        for &v in orbit {
            orbit_of[v] = i;
        }
    }
    let mut hit = vec![false; expected];
    for &r in reps {
        if r >= n {
            return Err(ActionError::InvalidBase {
                reason: format!("vertex {r} out of range"),
            });
        }
        let o = orbit_of[r];
        if hit[o] {
            return Err(ActionError::InvalidBase {
                reason: format!("orbit of vertex {r} is represented twice"),
            });
        }
        hit[o] = true;
    }
    Ok(Base {
        representatives: reps.to_vec(),
    })
}

/// sigma^(k/d), a d-symmetric action, for any divisor d of k.
pub fn power_action(g: &Graph, action: &CyclicAction, d: usize) -> Result<CyclicAction, ActionError> {
    if d == 0 || action.k() % d != 0 {
        return Err(ActionError::NotDivisor { d, k: action.k() });
    }
    let e = action.k() / d;
    let n = action.graph_order();
    let mut sigma: Vec<usize> = (0..n).collect();
    for _ in 0..e {
        sigma = sigma.iter().map(|&v| action.apply(v)).collect();
    }
    verify_k_symmetric(g, &sigma, d)
}

/// The action on g1 union g2 that runs a1 on the first block and a2, shifted,
/// on the second. Orders must match.
pub fn union_action(
    g1: &Graph,
    a1: &CyclicAction,
    g2: &Graph,
    a2: &CyclicAction,
) -> Result<CyclicAction, ActionError> {
    if a1.k() != a2.k() {
        return Err(ActionError::OrderMismatch {
            left: a1.k(),
            right: a2.k(),
        });
    }
    let shift = g1.order();
    let sigma: Vec<usize> = (0..shift)
        .map(|v| a1.apply(v))
        .chain((0..g2.order()).map(|v| shift + a2.apply(v)))
        .collect();
    verify_k_symmetric(&g1.disjoint_union(g2), &sigma, a1.k())
}

/// The action (g, h) -> (sigma(g), h) on the Cartesian product g box h.
pub fn cartesian_action(
    g: &Graph,
    action: &CyclicAction,
    h: &Graph,
) -> Result<CyclicAction, ActionError> {
    let m = h.order();
    let sigma: Vec<usize> = (0..g.order() * m)
        .map(|v| action.apply(v / m) * m + v % m)
        .collect();
    verify_k_symmetric(&g.cartesian_product(h), &sigma, action.k())
}

/// The k-symmetric join: disjoint union of g1 and g2 plus, for each j in
/// 0..k, all edges between sigma1^j(B1) and sigma2^j(B2). Returns the joined
/// graph with its validated action sigma1 + sigma2.
///
/// Adds exactly k * |B1| * |B2| edges: the shifted bases partition each
/// vertex set, so each cross pair appears for at most one j.
pub fn k_join(
    g1: &Graph,
    a1: &CyclicAction,
    b1: &Base,
    g2: &Graph,
    a2: &CyclicAction,
    b2: &Base,
) -> Result<(Graph, CyclicAction), ActionError> {
    if a1.k() != a2.k() {
        return Err(ActionError::OrderMismatch {
            left: a1.k(),
            right: a2.k(),
        });
    }
    let k = a1.k();
    validate_base(a1, b1.representatives())?;
    validate_base(a2, b2.representatives())?;

    // phase of v: the j with v in sigma^j(B)
    let phase = |action: &CyclicAction, base: &Base| -> Vec<usize> {
        let mut phase = vec![usize::MAX; action.graph_order()];
        for &r in base.representatives() {
            let mut v = r;
            for j in 0..k {
                phase[v] = j;
                v = action.apply(v);
            }
        }
        phase
    };
    let phase1 = phase(a1, b1);
    let phase2 = phase(a2, b2);

    let shift = g1.order();
    let union = g1.disjoint_union(g2);
    let mut edges: Vec<(usize, usize)> = union.edges().collect();
    for v1 in 0..g1.order() {
        for v2 in 0..g2.order() {
            if phase1[v1] == phase2[v2] {
                edges.push((v1, shift + v2));
            }
        }
    }
    let joined = Graph::new(union.order(), edges).expect("join edges stay in range");
    debug_assert_eq!(
        joined.edge_count(),
        g1.edge_count() + g2.edge_count() + k * b1.len() * b2.len()
    );

    let sigma: Vec<usize> = (0..shift)
        .map(|v| a1.apply(v))
        .chain((0..g2.order()).map(|v| shift + a2.apply(v)))
        .collect();
    let action = verify_k_symmetric(&joined, &sigma, k)?;
    Ok((joined, action))
}

/// Where a Hamiltonian cycle produced by an n-symmetric action lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleLocation {
    InGraph,
    InComplement,
}

/// For an n-symmetric action on an n-vertex graph (n >= 3), the orbit of
/// vertex 0 is a Hamiltonian cycle of either the graph or its complement,
/// depending on whether 0 and sigma(0) are adjacent.
pub fn hamiltonian_from_action(
    g: &Graph,
    action: &CyclicAction,
) -> Result<(CycleLocation, Vec<usize>), ActionError> {
    let n = g.order();
    if action.graph_order() != n {
        return Err(ActionError::LengthMismatch {
            got: action.graph_order(),
            expected: n,
        });
    }
    if action.k() != n || n < 3 {
        return Err(ActionError::NotFullOrbit { k: action.k(), n });
    }
    let cycle = action.orbit_of(0);
    let location = if g.has_edge(0, action.apply(0)) {
        CycleLocation::InGraph
    } else {
        CycleLocation::InComplement
    };
    debug_assert!({
        let host = match location {
            CycleLocation::InGraph => g.clone(),
            CycleLocation::InComplement => g.complement(),
        };
        (0..n).all(|i| host.has_edge(cycle[i], cycle[(i + 1) % n]))
    });
    Ok((location, cycle))
}

/// Parses disjoint-cycle notation like "(0 1 2 3 4)(5 6 7 8 9)"; commas also
/// separate entries. Unlisted vertices are fixed points.
pub fn parse_cycle_notation(text: &str, n: usize) -> Result<Vec<usize>, ActionError> {
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut assigned = vec![false; n];
    let bad = |msg: &str| ActionError::BadCycleNotation(msg.to_string());
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
        if !rest[..open].trim().is_empty() {
            return Err(bad("unexpected text between cycles"));
        }
        let close = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
        if close < open {
            return Err(bad("')' before '('"));
        }
        let body = &rest[open + 1..close];
        let mut cycle = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let v: usize = token
                .parse()
                .map_err(|_| bad(&format!("bad vertex {token:?}")))?;
            if v >= n {
                return Err(bad(&format!("vertex {v} out of range for order {n}")));
            }
            if assigned[v] {
                return Err(bad(&format!("vertex {v} appears twice")));
            }
            assigned[v] = true;
            cycle.push(v);
        }
        for (i, &v) in cycle.iter().enumerate() {
            sigma[v] = cycle[(i + 1) % cycle.len()];
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(sigma)
}
