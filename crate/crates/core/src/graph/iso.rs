//! Brute-force graph isomorphism by backtracking with degree-signature
//! pruning. Fine for the small graphs used in tests and verification grids.

use super::Graph;

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let n = a.order();
    let sig_a: Vec<Vec<usize>> = (0..n).map(|v| neighbor_degree_signature(a, v)).collect();
    let sig_b: Vec<Vec<usize>> = (0..n).map(|v| neighbor_degree_signature(b, v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &sig_a, &sig_b, &mut map, &mut used, 0)
}

fn neighbor_degree_signature(g: &Graph, v: usize) -> Vec<usize> {
    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    sig.sort_unstable();
    sig
}

fn extend(
    a: &Graph,
    b: &Graph,
    sig_a: &[Vec<usize>],
    sig_b: &[Vec<usize>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    if v == a.order() {
        return true;
    }
    'candidates: for w in 0..b.order() {
        if used[w] || a.degree(v) != b.degree(w) || sig_a[v] != sig_b[w] {
            continue;
        }
        for u in 0..v {
            if a.has_edge(u, v) != b.has_edge(map[u], w) {
                continue 'candidates;
            }
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, sig_a, sig_b, map, used, v + 1) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c5 = Graph::cycle(5).unwrap();
        let pentagram = Graph::new(5, (0..5).map(|i| (i, (i + 2) % 5))).unwrap();
        assert!(are_isomorphic(&c5, &pentagram));
        assert!(are_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C_6 vs 2C_3: both 2-regular on 6 vertices
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap());
        assert!(!are_isomorphic(&c6, &two_c3));
    }

    #[test]
    fn petersen_vs_prism() {
        let prism = Graph::cycle(5).unwrap().cartesian_product(&Graph::complete(2).unwrap());
        assert!(!are_isomorphic(&Graph::petersen(), &prism));
        assert!(are_isomorphic(&Graph::petersen(), &Graph::petersen()));
    }

    #[test]
    fn order_mismatch() {
        assert!(!are_isomorphic(&Graph::complete(3).unwrap(), &Graph::complete(4).unwrap()));
    }
}
