//! A one-sided primality witness for the Cartesian product.
//!
//! In a nontrivial Cartesian product, any two incident edges from different
//! factors lie on a common 4-cycle (the product square), and every vertex has
//! incident edges in both factors. So if some vertex u has degree >= 2 and
//! the relation "shares no 4-cycle" connects all of u's incident edges, no
//! bipartition of those edges into factor classes can exist and the graph is
//! prime. The converse direction is not attempted: the verdict is
//! Prime-or-Unknown.

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimalityVerdict {
    /// Prime with respect to the Cartesian product; `witness` is a vertex
    /// whose incident-edge structure certifies it.
    Prime { witness: usize },
    Unknown,
}

impl PrimalityVerdict {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimalityVerdict::Prime { .. })
    }
}

/// Scans vertices in ascending order and returns the first certifying
/// witness, or Unknown. Requires a connected graph on >= 2 vertices.
pub fn primality_witness(g: &Graph) -> Result<PrimalityVerdict, GraphError> {
    if g.order() < 2 || !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    for u in 0..g.order() {
        if g.degree(u) >= 2 && vertex_certifies_primality(g, u) {
            return Ok(PrimalityVerdict::Prime { witness: u });
        }
    }
    Ok(PrimalityVerdict::Unknown)
}

/// Re-checks a witness: true iff the "no common 4-cycle" relation on the
/// edges incident to u forms a connected graph (u must have degree >= 2).
pub fn vertex_certifies_primality(g: &Graph, u: usize) -> bool {
    let ends = g.neighbors(u);
    let d = ends.len();
    if d < 2 {
        return false;
    }
    // relation graph on u's incident edges, indexed by the far endpoint
    let mut adj = vec![Vec::new(); d];
    for i in 0..d {
        for j in i + 1..d {
            if !shares_four_cycle_at(g, u, ends[i], ends[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut seen = vec![false; d];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                count += 1;
                queue.push_back(j);
            }
        }
    }
    count == d
}

/// Edges {u,x} and {u,y} lie on a common 4-cycle iff x and y have a common
/// neighbor other than u. All 4-cycles count, induced or not.
fn shares_four_cycle_at(g: &Graph, u: usize, x: usize, y: usize) -> bool {
    g.neighbors(x)
        .iter()
        .any(|&z| z != u && g.has_edge(z, y))
}
