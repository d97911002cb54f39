//! Structural metrics: pendants, vertex connectivity (Menger via unit-cap
//! max-flow on the split digraph), articulation points, and the Cartesian
//! product connectivity formula.

use super::{Graph, GraphError};

/// Exact structural metrics of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    /// Number of degree-1 vertices.
    pub pendants: usize,
    /// Number of vertices adjacent to a pendant.
    pub quasi_pendants: usize,
    /// Vertex connectivity; n-1 for complete graphs, 0 when disconnected.
    pub kappa: usize,
    pub min_degree: usize,
    /// Connected, on >= 3 vertices, with no articulation point.
    pub two_connected: bool,
    pub components: usize,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let pendants: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
    let quasi_pendants = (0..g.order())
        .filter(|&v| g.neighbors(v).iter().any(|&w| g.degree(w) == 1))
        .count();
    let components = g.component_count();
    let kappa = vertex_connectivity(g);
    let two_connected = is_two_connected_by_articulation(g);
    debug_assert_eq!(two_connected, kappa >= 2);
    GraphMetrics {
        pendants: pendants.len(),
        quasi_pendants,
        kappa,
        min_degree: g.min_degree(),
        two_connected,
        components,
    }
}

/// Vertex connectivity. Complete graphs (including K_1) use the n-1
/// convention; otherwise the minimum over non-adjacent pairs of the maximum
/// number of internally disjoint paths.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n; // any cut is smaller than n for noncomplete graphs
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(max_vertex_disjoint_paths(g, s, t));
        }
    }
    best
}

/// Maximum number of internally vertex-disjoint s-t paths, via unit-capacity
/// max-flow on the standard vertex-split digraph.
fn max_vertex_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    // node 2v = "in" copy, 2v+1 = "out" copy
    let nodes = 2 * n;
    let mut cap = vec![vec![0u32; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { u32::MAX / 2 } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = u32::MAX / 2;
        cap[2 * v + 1][2 * u] = u32::MAX / 2;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0usize;
    loop {
        // BFS augmenting path
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Articulation vertices (cut vertices) by depth-first low-link.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;

    // iterative DFS to avoid recursion limits on long paths
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        let mut root_children = 0usize;
        while let Some(&(v, parent, next)) = stack.last() {
            if next == 0 {
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
            }
            if next < g.neighbors(v).len() {
                stack.last_mut().unwrap().2 += 1;
                let w = g.neighbors(v)[next];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if u != root && low[v] >= disc[u] {
                        is_cut[u] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Connected, at least 3 vertices, and no articulation point.
pub fn is_two_connected_by_articulation(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && articulation_points(g).is_empty()
}

/// min{kappa(G)|H|, kappa(H)|G|, delta(G) + delta(H)}, the connectivity of
/// G box H for connected factors on at least 2 vertices each.
pub fn spacapan_connectivity(g: &Graph, h: &Graph) -> Result<usize, GraphError> {
    if g.order() < 2 || h.order() < 2 {
        return Err(GraphError::TrivialFactor);
    }
    if !g.is_connected() || !h.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let a = vertex_connectivity(g) * h.order();
    let b = vertex_connectivity(h) * g.order();
    let delta = g.min_degree() + h.min_degree();
    Ok(a.min(b).min(delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: smallest vertex set whose removal disconnects or trivializes.
    pub(crate) fn kappa_by_cut_enumeration(g: &Graph) -> usize {
        let n = g.order();
        if !g.is_connected() {
            return 0;
        }
        for k in 0..n {
            let mut found = false;
            enumerate_subsets(n, k, &mut |cut| {
                if found {
                    return;
                }
                let keep: Vec<usize> = (0..n).filter(|v| !cut.contains(v)).collect();
                if keep.len() <= 1 {
                    found = true; // removal yields a trivial graph
                    return;
                }
                let index_of = |v: usize| keep.iter().position(|&x| x == v).unwrap();
                let sub = Graph::new(
                    keep.len(),
                    g.edges().filter_map(|(u, v)| {
                        (!cut.contains(&u) && !cut.contains(&v))
                            .then(|| (index_of(u), index_of(v)))
                    }),
                )
                .unwrap();
                if !sub.is_connected() {
                    found = true;
                }
            });
            if found {
                return k;
            }
        }
        n - 1
    }

    fn enumerate_subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
            if cur.len() == k {
                f(cur);
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, f);
                cur.pop();
            }
        }
        rec(0, n, k, &mut Vec::new(), f);
    }

    #[test]
    fn p3_metrics() {
        let m = metrics(&Graph::path(3).unwrap());
        assert_eq!(m.pendants, 2);
        assert_eq!(m.quasi_pendants, 1);
        assert_eq!(m.kappa, 1);
        assert_eq!(m.min_degree, 1);
        assert_eq!(m.components, 1);
        assert!(!m.two_connected);
    }

    #[test]
    fn petersen_metrics() {
        let m = metrics(&Graph::petersen());
        assert_eq!(m.kappa, 3);
        assert_eq!(m.pendants, 0);
        assert_eq!(m.quasi_pendants, 0);
        assert!(m.two_connected);
        assert_eq!(kappa_by_cut_enumeration(&Graph::petersen()), 3);
    }

    #[test]
    fn complete_graph_convention() {
        let m = metrics(&Graph::complete(4).unwrap());
        assert_eq!(m.kappa, 3);
        assert_eq!(m.min_degree, 3);
        assert!(m.two_connected);
        assert_eq!(metrics(&Graph::complete(1).unwrap()).kappa, 0);
        assert_eq!(metrics(&Graph::complete(2).unwrap()).kappa, 1);
    }

    #[test]
    fn kappa_matches_cut_enumeration_on_small_graphs() {
        let graphs = [
            Graph::path(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::star(4),
            Graph::complete(2).unwrap().cartesian_product(&Graph::complete(3).unwrap()),
            Graph::cycle(4).unwrap().join(&Graph::empty(1).unwrap()),
            Graph::complete(2).unwrap().disjoint_union(&Graph::complete(3).unwrap()),
        ];
        for g in &graphs {
            assert_eq!(vertex_connectivity(g), kappa_by_cut_enumeration(g), "{g:?}");
        }
    }

    #[test]
    fn kappa_le_min_degree() {
        for g in [
            Graph::petersen(),
            Graph::star(5),
            Graph::cycle(7).unwrap(),
            Graph::path(6).unwrap(),
        ] {
            assert!(vertex_connectivity(&g) <= g.min_degree());
        }
    }

    #[test]
    fn articulation_agrees_with_kappa() {
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::star(3),
            Graph::petersen(),
            Graph::complete(3).unwrap(),
        ] {
            let m = metrics(&g);
            assert_eq!(m.two_connected, is_two_connected_by_articulation(&g), "{g:?}");
        }
        // K_2 is connected with no articulation point but not 2-connected
        assert!(!metrics(&Graph::complete(2).unwrap()).two_connected);
        assert!(!is_two_connected_by_articulation(&Graph::complete(2).unwrap()));
    }

    #[test]
    fn spacapan_examples() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(spacapan_connectivity(&k2, &k2).unwrap(), 2);
        assert_eq!(spacapan_connectivity(&k3, &k2).unwrap(), 3);
        assert_eq!(spacapan_connectivity(&p3, &p3).unwrap(), 2);
    }

    #[test]
    fn spacapan_rejects_bad_inputs() {
        let k2 = Graph::complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2);
        assert_eq!(
            spacapan_connectivity(&two_k2, &k2).unwrap_err(),
            GraphError::Disconnected
        );
        assert_eq!(
            spacapan_connectivity(&Graph::complete(1).unwrap(), &k2).unwrap_err(),
            GraphError::TrivialFactor
        );
    }

    #[test]
    fn spacapan_matches_exact_kappa() {
        let factors = [
            Graph::complete(2).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::path(3).unwrap(),
            Graph::cycle(4).unwrap(),
        ];
        for g in &factors {
            for h in &factors {
                let formula = spacapan_connectivity(g, h).unwrap();
                let exact = vertex_connectivity(&g.cartesian_product(h));
                assert_eq!(formula, exact, "{g:?} x {h:?}");
            }
        }
    }
}
