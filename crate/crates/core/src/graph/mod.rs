//! Simple undirected graphs on vertices 0..n-1: generators, complement,
//! unions, Cartesian products, joins, structural metrics and a Cartesian
//! primality witness.

mod catalog;
mod format;
mod iso;
mod metrics;
mod prime;

pub use catalog::{catalog, random_connected_graph, random_graph, unlabeled_trees};
pub use format::{parse_edge_list, to_edge_list, ParseError};
pub use iso::are_isomorphic;
pub use metrics::{
    articulation_points, is_two_connected_by_articulation, metrics, spacapan_connectivity,
    vertex_connectivity, GraphMetrics,
};
pub use prime::{primality_witness, vertex_certifies_primality, PrimalityVerdict};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {endpoint} out of range for order {order}")]
    EndpointOutOfRange { endpoint: usize, order: usize },
    #[error("invalid order {n} for {kind} graph")]
    InvalidOrder { kind: &'static str, n: usize },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("operation requires both factors to have at least 2 vertices")]
    TrivialFactor,
}

/// Named generator kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Complete,
    Empty,
    Cycle,
    Path,
    Petersen,
}

impl GraphKind {
    pub fn parse(s: &str) -> Option<GraphKind> {
        match s {
            "complete" => Some(GraphKind::Complete),
            "empty" => Some(GraphKind::Empty),
            "cycle" => Some(GraphKind::Cycle),
            "path" => Some(GraphKind::Path),
            "petersen" => Some(GraphKind::Petersen),
            _ => None,
        }
    }
}

/// An immutable simple graph: an order n and a set of edges {u, v} with
/// u < v < n. All operations return new graphs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Rejects loops, duplicate edges, and
    /// out-of-range endpoints.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let e = (u.min(v), u.max(v));
            if e.1 >= order {
                return Err(GraphError::EndpointOutOfRange {
                    endpoint: e.1,
                    order,
                });
            }
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph::from_edge_set(order, set))
    }

    fn from_edge_set(order: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            order,
            edges,
            neighbors,
        }
    }

    pub fn generate(kind: GraphKind, n: usize) -> Result<Self, GraphError> {
        match kind {
            GraphKind::Complete => Graph::complete(n),
            GraphKind::Empty => Graph::empty(n),
            GraphKind::Cycle => Graph::cycle(n),
            GraphKind::Path => Graph::path(n),
            GraphKind::Petersen => {
                if n != 10 {
                    return Err(GraphError::InvalidOrder { kind: "petersen", n });
                }
                Ok(Graph::petersen())
            }
        }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidOrder { kind: "complete", n });
        }
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges)
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidOrder { kind: "empty", n });
        }
        Graph::new(n, std::iter::empty())
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidOrder { kind: "cycle", n });
        }
        Graph::new(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidOrder { kind: "path", n });
        }
        Graph::new(n, (0..n.saturating_sub(1)).map(|u| (u, u + 1)))
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).expect("fixed construction")
    }

    /// Star K_{1,n}: hub 0 joined to n leaves.
    pub fn star(n: usize) -> Self {
        Graph::new(n + 1, (1..=n).map(|v| (0, v))).expect("fixed construction")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.order * (self.order - 1) / 2
    }

    /// Edge {u, v} present iff absent in self. An involution.
    pub fn complement(&self) -> Graph {
        let n = self.order;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(n, edges).expect("complement of a valid graph")
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.order + other.order, edges).expect("shifted union of valid graphs")
    }

    /// Cartesian product; vertex (g, h) is numbered g * other.order() + h.
    /// (g, h) ~ (g', h') iff g = g' and h ~ h', or h = h' and g ~ g'.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.order;
        let mut edges = Vec::new();
        for g in 0..self.order {
            for (h, h2) in other.edges() {
                edges.push((g * m + h, g * m + h2));
            }
        }
        for (g, g2) in self.edges() {
            for h in 0..m {
                edges.push((g * m + h, g2 * m + h));
            }
        }
        Graph::new(self.order * m, edges).expect("product of valid graphs")
    }

    /// Graph join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let union = self.disjoint_union(other);
        let cross = (0..shift).flat_map(|u| (0..other.order).map(move |v| (u, shift + v)));
        Graph::new(union.order, union.edges().chain(cross)).expect("join of valid graphs")
    }

    /// Component ids by breadth-first traversal, plus the component count.
    pub(crate) fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.order];
        let mut count = 0;
        for start in 0..self.order {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = std::collections::VecDeque::from([start]);
            label[start] = count;
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Length of a shortest cycle, or None for forests. Brute-force BFS per
    /// edge; intended for small graphs in tests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            // shortest u-v path avoiding the edge {u,v}
            let mut dist = vec![usize::MAX; self.order];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if (x, y) == (u, v) || (x, y) == (v, u) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let cycle = dist[v] + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}
