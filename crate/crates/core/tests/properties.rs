//! Cross-cutting invariants: randomized structural properties of graphs,
//! exact-arithmetic round trips, and action/base laws.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symspec::exact::{IntMatrix, IntPolynomial};
use symspec::families::{build_cnm, closed_cnm_charpoly};
use symspec::graph::{
    catalog, is_two_connected_by_articulation, parse_edge_list, random_connected_graph,
    to_edge_list, vertex_connectivity, Graph,
};
use symspec::spectra::spectrum;
use symspec::symmetry::{
    base_of, find_k_symmetric, k_join, verify_k_symmetric, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, edges).expect("generated in range")
        })
    })
}

fn matrix_strategy(max_n: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-9i64..=9, n * n)
            .prop_map(move |data| IntMatrix::from_fn(n, n, |i, j| BigInt::from(data[i * n + j])))
    })
}

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-9i64..=9, 1..=max_deg + 1)
        .prop_map(|coeffs| IntPolynomial::from_i64(&coeffs))
}

proptest! {
    #[test]
    fn complement_is_involution(g in graph_strategy(9)) {
        let n = g.order();
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn handshake_holds(g in graph_strategy(9)) {
        let total: usize = g.degrees().iter().sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn metrics_invariants(g in graph_strategy(8)) {
        let m = symspec::graph::metrics(&g);
        // each pendant's unique neighbor is the only quasi-pendant it charges
        prop_assert!(m.quasi_pendants <= m.pendants);
        prop_assert!(m.pendants <= g.order());
        prop_assert!(m.kappa <= m.min_degree || g.order() == 1);
        prop_assert_eq!(m.two_connected, m.kappa >= 2);
        prop_assert_eq!(m.components, g.component_count());
    }

    #[test]
    fn kappa_at_most_min_degree(g in graph_strategy(8)) {
        prop_assert!(vertex_connectivity(&g) <= g.min_degree() || g.order() == 1);
    }

    #[test]
    fn edge_list_round_trips(g in graph_strategy(9)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn charpoly_evaluates_to_shifted_det(m in matrix_strategy(5), t in -10i64..=10) {
        let p = m.charpoly().unwrap();
        let t = BigInt::from(t);
        let n = m.rows();
        let shifted = IntMatrix::from_fn(n, n, |i, j| {
            if i == j { &t - m.get(i, j) } else { -m.get(i, j) }
        });
        prop_assert_eq!(p.eval(&t), shifted.det().unwrap());
    }

    #[test]
    fn product_div_round_trip(p in poly_strategy(6), roots in proptest::collection::vec(-6i64..=6, 1..4)) {
        // q is monic by construction, so (p*q)/q = p exactly
        let mut q = IntPolynomial::one();
        for r in &roots {
            q = q.mul(&IntPolynomial::x_minus(&BigInt::from(*r)));
        }
        let product = p.mul(&q);
        prop_assert_eq!(product.div_exact(&q).unwrap(), p);
    }

    #[test]
    fn gcd_divides_both(p in poly_strategy(5), q in poly_strategy(5)) {
        let g = p.gcd(&q);
        if !g.is_zero() {
            if !p.is_zero() {
                // divide the primitive parts: the gcd is primitive
                prop_assert!(p.primitive_part().div_exact(&g).is_ok());
            }
            if !q.is_zero() {
                prop_assert!(q.primitive_part().div_exact(&g).is_ok());
            }
        }
    }

    #[test]
    fn integer_roots_reconstruct(roots in proptest::collection::vec(-5i64..=5, 0..4), residual_kind in 0usize..3) {
        let residual = match residual_kind {
            0 => IntPolynomial::one(),
            1 => IntPolynomial::from_i64(&[2, -4, 1]),  // roots 2 +- sqrt 2
            _ => IntPolynomial::from_i64(&[1, 0, 1]),   // no real roots
        };
        let mut p = residual.clone();
        for r in &roots {
            p = p.mul(&IntPolynomial::x_minus(&BigInt::from(*r)));
        }
        let (found, rem) = p.integer_roots();
        let mut rebuilt = rem.clone();
        for (r, m) in &found {
            rebuilt = rebuilt.mul(&IntPolynomial::x_minus(r).pow(*m));
        }
        prop_assert_eq!(rebuilt, p);
        // the residual keeps no integer roots
        prop_assert_eq!(rem.integer_roots().0.len(), 0);
    }

    #[test]
    fn spectrum_invariants(g in graph_strategy(8)) {
        let s = spectrum(&g);
        let n = g.order();
        // 0 with multiplicity = component count
        prop_assert_eq!(s.multiplicity_of(&BigInt::zero()), g.component_count());
        // all integer eigenvalues in [0, n]
        for (v, _) in s.integer_eigenvalues() {
            prop_assert!(*v >= BigInt::zero() && *v <= BigInt::from(n));
        }
        // multiplicities plus residual degree account for n
        let counted: usize = s.integer_eigenvalues().iter().map(|(_, m)| m).sum();
        prop_assert_eq!(counted + s.residual().degree(), n);
        // trace identity
        let mut trace: BigInt = s
            .integer_eigenvalues()
            .iter()
            .map(|(v, m)| v * BigInt::from(*m))
            .sum();
        if !s.is_integral() {
            let d = s.residual().degree();
            trace += -s.residual().coeff(d - 1);
        }
        prop_assert_eq!(trace, BigInt::from(2 * g.edge_count()));
    }
}

#[test]
fn two_connected_agrees_with_kappa_on_random_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for i in 0..50 {
        let n = 3 + (i % 8);
        let g = random_connected_graph(n, &mut rng);
        assert_eq!(
            is_two_connected_by_articulation(&g),
            vertex_connectivity(&g) >= 2,
            "{g:?}"
        );
    }
}

#[test]
fn validated_actions_have_exact_order_and_base_laws() {
    let cases: Vec<(Graph, Vec<usize>, usize)> = vec![
        (Graph::cycle(6).unwrap(), (0..6).map(|i| (i + 1) % 6).collect(), 6),
        (Graph::cycle(6).unwrap(), (0..6).map(|i| (i + 2) % 6).collect(), 3),
        (Graph::cycle(6).unwrap(), (0..6).map(|i| (i + 3) % 6).collect(), 2),
        (Graph::complete(4).unwrap(), vec![1, 2, 3, 0], 4),
        (Graph::petersen(), (0..10).map(|v| if v < 5 { (v + 1) % 5 } else { 5 + (v - 4) % 5 }).collect(), 5),
    ];
    for (g, sigma, k) in cases {
        let a = verify_k_symmetric(&g, &sigma, k).expect("valid action");
        let n = g.order();
        assert_eq!(a.orbits().len(), n / k);
        // sigma^k = id and sigma^j != id for 0 < j < k
        let mut power: Vec<usize> = (0..n).collect();
        for j in 1..=k {
            power = power.iter().map(|&v| a.apply(v)).collect();
            let is_id = power.iter().enumerate().all(|(v, &w)| v == w);
            assert_eq!(is_id, j == k, "power {j} of order-{k} action");
        }
        // base: one representative per orbit, orbits cover V
        let base = base_of(&a);
        assert_eq!(base.len(), n / k);
        let mut covered = vec![false; n];
        for &r in base.representatives() {
            for v in a.orbit_of(r) {
                assert!(!covered[v], "orbits of representatives overlap");
                covered[v] = true;
            }
        }
        assert!(covered.iter().all(|&c| c));
    }
}

#[test]
fn search_returns_not_found_when_k_does_not_divide_n() {
    for (_, g) in catalog() {
        let n = g.order();
        for k in 2..=n {
            if n % k != 0 {
                assert_eq!(
                    find_k_symmetric(&g, k, DEFAULT_SEARCH_BUDGET),
                    SearchOutcome::NotFound
                );
            }
        }
    }
}

#[test]
fn k_join_edge_count_formula() {
    let parts: Vec<(Graph, Vec<usize>, usize)> = vec![
        (Graph::complete(2).unwrap(), vec![1, 0], 2),
        (Graph::cycle(4).unwrap(), vec![1, 2, 3, 0], 4),
        (Graph::cycle(4).unwrap(), vec![2, 3, 0, 1], 2),
        (Graph::complete(4).unwrap(), vec![2, 3, 0, 1], 2),
        (Graph::empty(2).unwrap(), vec![1, 0], 2),
    ];
    for (g1, s1, k1) in &parts {
        for (g2, s2, k2) in &parts {
            if k1 != k2 {
                continue;
            }
            let a1 = verify_k_symmetric(g1, s1, *k1).unwrap();
            let a2 = verify_k_symmetric(g2, s2, *k2).unwrap();
            let b1 = base_of(&a1);
            let b2 = base_of(&a2);
            let (joined, _) = k_join(g1, &a1, &b1, g2, &a2, &b2).unwrap();
            assert_eq!(
                joined.edge_count(),
                g1.edge_count() + g2.edge_count() + k1 * b1.len() * b2.len()
            );
        }
    }
}

#[test]
fn closed_form_shape_invariants() {
    for n in 1..=6usize {
        for m in 1..=6usize {
            let p = closed_cnm_charpoly(n, m);
            assert_eq!(p.degree(), n * (m + 1));
            assert!(p.is_monic());
            // connected family: constant term 0 with x-multiplicity exactly 1
            assert!(p.coeff(0).is_zero());
            assert!(!p.coeff(1).is_zero());
        }
    }
}

#[test]
fn catalog_round_trips_through_edge_list() {
    for (name, g) in catalog() {
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn built_families_are_connected() {
    for n in 1..=4usize {
        for m in 1..=4usize {
            assert!(build_cnm(n, m).is_connected());
        }
    }
}
