//! Fixed test catalog, seeded random graphs, and exhaustive small-tree
//! enumeration for the verification grids.

use rand::Rng;

use super::Graph;

/// Twenty named small graphs spanning the tested shapes: complete, empty,
/// paths, cycles, stars, bipartite, products, Petersen, and a disconnected
/// graph. Order is fixed so reports are stable.
pub fn catalog() -> Vec<(&'static str, Graph)> {
    let k2 = Graph::complete(2).unwrap();
    let k3 = Graph::complete(3).unwrap();
    vec![
        ("K1", Graph::complete(1).unwrap()),
        ("K2", k2.clone()),
        ("K3", k3.clone()),
        ("K4", Graph::complete(4).unwrap()),
        ("K5", Graph::complete(5).unwrap()),
        ("empty2", Graph::empty(2).unwrap()),
        ("empty3", Graph::empty(3).unwrap()),
        ("empty4", Graph::empty(4).unwrap()),
        ("P3", Graph::path(3).unwrap()),
        ("P4", Graph::path(4).unwrap()),
        ("P5", Graph::path(5).unwrap()),
        ("C4", Graph::cycle(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
        ("C6", Graph::cycle(6).unwrap()),
        ("K1,3", Graph::star(3)),
        ("K2,3", Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap())),
        ("petersen", Graph::petersen()),
        ("2K2", k2.disjoint_union(&k2)),
        ("K2xK3", k2.cartesian_product(&k3)),
        ("K2xP3", k2.cartesian_product(&Graph::path(3).unwrap())),
    ]
}

/// Erdos-Renyi G(n, 1/2) from the given rng.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect::<Vec<_>>();
    Graph::new(n, edges).expect("generated in range")
}

/// Resamples G(n, 1/2) until connected.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// All trees on exactly n vertices up to isomorphism, enumerated through
/// Prufer sequences and deduplicated by a canonical center-rooted code.
pub fn unlabeled_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Graph::empty(1).unwrap()];
    }
    if n == 2 {
        return vec![Graph::complete(2).unwrap()];
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut prufer = vec![0usize; n - 2];
    loop {
        let edges = decode_prufer(&prufer, n);
        let code = canonical_tree_code(n, &edges);
        if seen.insert(code) {
            out.push(Graph::new(n, edges).expect("prufer decode is a tree"));
        }
        // odometer step over the n^(n-2) sequences
        let mut i = 0;
        loop {
            if i == prufer.len() {
                return out;
            }
            prufer[i] += 1;
            if prufer[i] < n {
                break;
            }
            prufer[i] = 0;
            i += 1;
        }
    }
}

fn decode_prufer(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    edges.push((last.next().unwrap(), last.next().unwrap()));
    edges
}

/// Canonical code of a free tree: root at each center, build the sorted
/// nested-parentheses code, take the smaller.
fn canonical_tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let centers = tree_centers(n, &adj);
    centers
        .into_iter()
        .map(|c| rooted_code(&adj, c, usize::MAX))
        .min()
        .expect("a tree has 1 or 2 centers")
}

fn tree_centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn catalog_has_twenty_valid_graphs() {
        let cat = catalog();
        assert_eq!(cat.len(), 20);
        for (name, g) in &cat {
            let sum: usize = g.degrees().iter().sum();
            assert_eq!(sum, 2 * g.edge_count(), "{name}");
        }
    }

    #[test]
    fn random_graphs_are_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            assert_eq!(random_graph(8, &mut a), random_graph(8, &mut b));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..10 {
            assert!(random_connected_graph(6, &mut rng).is_connected());
        }
    }

    #[test]
    fn tree_counts_match_oeis() {
        // A000055: trees on n nodes
        let expected = [1usize, 1, 1, 2, 3, 6, 11];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let trees = unlabeled_trees(n);
            assert_eq!(trees.len(), count, "n = {n}");
            for t in &trees {
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn tree_dedup_is_by_isomorphism() {
        use super::super::are_isomorphic;
        let trees = unlabeled_trees(6);
        for (i, a) in trees.iter().enumerate() {
            for b in trees.iter().skip(i + 1) {
                assert!(!are_isomorphic(a, b));
            }
        }
    }
}
