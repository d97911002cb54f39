//! Named verification suites: each runs one identity or bound over a finite
//! parameter grid with exact comparisons, and reports every instance.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exact::{count_roots_in_halfopen, IntPolynomial};
use crate::graph::{
    catalog, metrics, primality_witness, random_connected_graph, random_graph,
    spacapan_connectivity, unlabeled_trees, vertex_connectivity, Graph,
};
use crate::spectra::{
    complement_spectrum, laplacian_charpoly, multiplicity, spanning_trees, spectrum,
    verify_equitable, DivisorMatrix, EquitablePartition,
};
use crate::symmetry::{base_of, k_join, verify_k_symmetric, CyclicAction};

use super::{
    build_cnkm, build_cnm, closed_cnkm_charpoly, closed_cnm_charpoly, cnkm_with_partition,
    orbit_construction, FamilyError,
};

pub const SUITE_NAMES: &[&str] = &[
    "char",
    "char-k",
    "multm",
    "km-product",
    "orbit",
    "two-conn-prime",
    "faria",
    "fiedler",
    "kirchhoff",
    "cartesian-sum",
    "complement",
    "spacapan",
    "equitable-containment",
];

/// Grid bounds for a suite, parsed from specs like `n<=6,m<=6,seed=1`.
/// Unknown keys are rejected; missing keys fall back to per-suite defaults.
#[derive(Debug, Clone, Default)]
pub struct SuiteGrid {
    bounds: std::collections::BTreeMap<String, u64>,
}

impl SuiteGrid {
    pub fn empty() -> Self {
        SuiteGrid::default()
    }

    pub fn parse(spec: &str) -> Result<Self, FamilyError> {
        let mut bounds = std::collections::BTreeMap::new();
        for part in spec.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once("<=")
                .or_else(|| part.split_once('='))
                .ok_or_else(|| FamilyError::BadGrid(format!("cannot parse {part:?}")))?;
            let key = key.trim();
            if !matches!(key, "n" | "m" | "k" | "l" | "count" | "seed" | "cayley") {
                return Err(FamilyError::BadGrid(format!("unknown key {key:?}")));
            }
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| FamilyError::BadGrid(format!("bad value in {part:?}")))?;
            bounds.insert(key.to_string(), value);
        }
        Ok(SuiteGrid { bounds })
    }

    fn get(&self, key: &str, default: u64) -> u64 {
        self.bounds.get(key).copied().unwrap_or(default)
    }

    fn describe(&self, used: &[(&str, u64)]) -> String {
        used.iter()
            .map(|(k, v)| format!("{k}<={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InstanceResult {
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: String,
    pub results: Vec<InstanceResult>,
}

impl VerificationReport {
    fn new(suite: &str, grid: String) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            grid,
            results: Vec::new(),
        }
    }

    fn push(&mut self, params: String, expected: String, computed: String) {
        let pass = expected == computed;
        self.results.push(InstanceResult {
            params,
            expected,
            computed,
            pass,
        });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.results.iter().filter(|r| r.pass).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }

    /// One line per instance plus a summary line, stable across runs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} [{}] expected {} computed {}\n",
                self.suite, r.params, r.expected, r.computed
            ));
        }
        out.push_str(&format!(
            "{}: {}/{} instances pass\n",
            self.suite,
            self.pass_count(),
            self.results.len()
        ));
        out
    }
}

/// Runs the named suite over the grid. Every comparison is exact.
pub fn verify_suite(name: &str, grid: &SuiteGrid) -> Result<VerificationReport, FamilyError> {
    match name {
        "char" => Ok(char_suite(grid)),
        "char-k" => Ok(char_k_suite(grid)),
        "multm" => multm_suite(grid),
        "km-product" => km_product_suite(grid),
        "orbit" => orbit_suite(grid),
        "two-conn-prime" => two_conn_prime_suite(grid),
        "faria" => Ok(faria_suite(grid)),
        "fiedler" => Ok(fiedler_suite(grid)),
        "kirchhoff" => Ok(kirchhoff_suite(grid)),
        "cartesian-sum" => Ok(cartesian_sum_suite(grid)),
        "complement" => Ok(complement_suite(grid)),
        "spacapan" => Ok(spacapan_suite(grid)),
        "equitable-containment" => equitable_containment_suite(grid),
        other => Err(FamilyError::UnknownSuite(other.to_string())),
    }
}

/// laplacian_charpoly(C(n,m)) equals the closed form, coefficient for
/// coefficient.
fn char_suite(grid: &SuiteGrid) -> VerificationReport {
    let max_n = grid.get("n", 6) as usize;
    let max_m = grid.get("m", 6) as usize;
    let mut report = VerificationReport::new(
        "char",
        grid.describe(&[("n", max_n as u64), ("m", max_m as u64)]),
    );
    for n in 1..=max_n {
        for m in 1..=max_m {
            let computed = laplacian_charpoly(&build_cnm(n, m));
            let expected = closed_cnm_charpoly(n, m);
            report.push(
                format!("n={n},m={m}"),
                expected.factored(),
                if computed == expected {
                    expected.factored()
                } else {
                    computed.to_string()
                },
            );
        }
    }
    report
}

/// Same equality for C(n,k,m) over every divisor k of n.
fn char_k_suite(grid: &SuiteGrid) -> VerificationReport {
    let max_n = grid.get("n", 8) as usize;
    let max_m = grid.get("m", 4) as usize;
    let mut report = VerificationReport::new(
        "char-k",
        grid.describe(&[("n", max_n as u64), ("m", max_m as u64)]),
    );
    for n in 1..=max_n {
        for k in 1..=n {
            if n % k != 0 {
                continue;
            }
            for m in 1..=max_m {
                let computed = laplacian_charpoly(&build_cnkm(n, k, m).expect("k | n"));
                let expected = closed_cnkm_charpoly(n, k, m).expect("k | n");
                report.push(
                    format!("n={n},k={k},m={m}"),
                    expected.factored(),
                    if computed == expected {
                        expected.factored()
                    } else {
                        computed.to_string()
                    },
                );
            }
        }
    }
    report
}

/// Regular k-symmetric part choices for the join grids: K_k always, C_k for
/// k >= 3. Patterns enumerate part-type tuples.
fn part_choices(k: usize) -> Vec<(&'static str, Graph, CyclicAction)> {
    let mut out = Vec::new();
    let complete = Graph::complete(k).expect("k >= 1");
    let rotation: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let action = verify_k_symmetric(&complete, &rotation, k).expect("rotation of K_k");
    out.push(("K", complete, action));
    if k >= 3 {
        let cycle = Graph::cycle(k).expect("k >= 3");
        let action = verify_k_symmetric(&cycle, &rotation, k).expect("rotation of C_k");
        out.push(("C", cycle, action));
    }
    out
}

fn part_patterns(choices: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..choices).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Chained k-symmetric join of parts (folded left, canonical bases), with
/// the part blocks tracked for the equitable partition.
fn chained_join(
    parts: &[(Graph, CyclicAction)],
) -> Result<(Graph, Vec<Vec<usize>>), FamilyError> {
    let mut graph = parts[0].0.clone();
    let mut action = parts[0].1.clone();
    let mut blocks: Vec<Vec<usize>> = vec![(0..graph.order()).collect()];
    for (g, a) in &parts[1..] {
        let offset = graph.order();
        let (joined, joined_action) = k_join(
            &graph,
            &action,
            &base_of(&action),
            g,
            a,
            &base_of(a),
        )?;
        graph = joined;
        action = joined_action;
        blocks.push((offset..offset + g.order()).collect());
    }
    Ok((graph, blocks))
}

/// The k-symmetric join of l parts has m_G(n) >= l-1 where n = |V(G)|/k,
/// and the divisor characteristic polynomial is x(x-n)^(l-1).
fn multm_suite(grid: &SuiteGrid) -> Result<VerificationReport, FamilyError> {
    let max_k = grid.get("k", 4) as usize;
    let max_l = grid.get("l", 4) as usize;
    let mut report = VerificationReport::new(
        "multm",
        grid.describe(&[("k", max_k as u64), ("l", max_l as u64)]),
    );
    for k in 2..=max_k {
        let choices = part_choices(k);
        for l in 2..=max_l {
            for pattern in part_patterns(choices.len(), l) {
                let parts: Vec<(Graph, CyclicAction)> = pattern
                    .iter()
                    .map(|&c| (choices[c].1.clone(), choices[c].2.clone()))
                    .collect();
                let names: Vec<String> = pattern
                    .iter()
                    .map(|&c| format!("{}{}", choices[c].0, k))
                    .collect();
                let (graph, blocks) = chained_join(&parts)?;
                let n = graph.order() / k;
                let params = format!("k={k},l={l},parts={}", names.join("+"));

                let mult = multiplicity(&graph, &BigInt::from(n));
                report.push(
                    format!("{params} multiplicity"),
                    format!("m_G({n})>={}", l - 1),
                    if mult >= l - 1 {
                        format!("m_G({n})>={}", l - 1)
                    } else {
                        format!("m_G({n})={mult}")
                    },
                );

                let partition = verify_equitable(&graph, &blocks)?;
                let divisor = DivisorMatrix::from(&partition).charpoly();
                let expected = IntPolynomial::x()
                    .mul(&IntPolynomial::x_minus(&BigInt::from(n)).pow(l - 1));
                report.push(
                    format!("{params} divisor"),
                    expected.factored(),
                    divisor.factored(),
                );
            }
        }
    }
    Ok(report)
}

/// m_{K_m box G}(m) >= m-1 for full-orbit-symmetric G.
fn km_product_suite(grid: &SuiteGrid) -> Result<VerificationReport, FamilyError> {
    let max_m = grid.get("m", 4) as usize;
    let mut report = VerificationReport::new("km-product", grid.describe(&[("m", max_m as u64)]));
    let hosts: Vec<(&str, Graph)> = vec![
        ("C3", Graph::cycle(3).expect("fixed")),
        ("C4", Graph::cycle(4).expect("fixed")),
        ("C5", Graph::cycle(5).expect("fixed")),
        ("K4", Graph::complete(4).expect("fixed")),
    ];
    for (name, g) in &hosts {
        // hosts must really be n-symmetric on n vertices
        let rotation: Vec<usize> = (0..g.order()).map(|i| (i + 1) % g.order()).collect();
        verify_k_symmetric(g, &rotation, g.order())?;
        for m in 1..=max_m {
            let product = Graph::complete(m).expect("m >= 1").cartesian_product(g);
            let mult = multiplicity(&product, &BigInt::from(m));
            report.push(
                format!("G={name},m={m}"),
                format!("m(m)>={}", m - 1),
                if mult >= m - 1 {
                    format!("m(m)>={}", m - 1)
                } else {
                    format!("m(m)={mult}")
                },
            );
        }
    }
    Ok(report)
}

/// The orbit construction G = empty_k join_k (G_1 u ... u G_l) has
/// m_G(1) >= l-1 and divisor characteristic polynomial x(x-1)^(l-1)(x-(n+1)).
fn orbit_suite(grid: &SuiteGrid) -> Result<VerificationReport, FamilyError> {
    let max_k = grid.get("k", 3) as usize;
    let max_l = grid.get("l", 4) as usize;
    let mut report = VerificationReport::new(
        "orbit",
        grid.describe(&[("k", max_k as u64), ("l", max_l as u64)]),
    );
    for k in 2..=max_k {
        let choices = part_choices(k);
        for l in 2..=max_l {
            for pattern in part_patterns(choices.len(), l) {
                let parts: Vec<(Graph, CyclicAction)> = pattern
                    .iter()
                    .map(|&c| (choices[c].1.clone(), choices[c].2.clone()))
                    .collect();
                let names: Vec<String> = pattern
                    .iter()
                    .map(|&c| format!("{}{}", choices[c].0, k))
                    .collect();
                let (graph, partition) = orbit_construction(k, &parts)?;
                let n: usize = parts.iter().map(|(g, _)| g.order() / k).sum();
                let params = format!("k={k},l={l},parts={}", names.join("+"));

                let mult = multiplicity(&graph, &BigInt::one());
                report.push(
                    format!("{params} multiplicity"),
                    format!("m_G(1)>={}", l - 1),
                    if mult >= l - 1 {
                        format!("m_G(1)>={}", l - 1)
                    } else {
                        format!("m_G(1)={mult}")
                    },
                );

                let divisor = DivisorMatrix::from(&partition).charpoly();
                let expected = IntPolynomial::x()
                    .mul(&IntPolynomial::x_minus(&BigInt::one()).pow(l - 1))
                    .mul(&IntPolynomial::x_minus(&BigInt::from(n + 1)));
                report.push(
                    format!("{params} divisor"),
                    expected.factored(),
                    divisor.factored(),
                );
            }
        }
    }
    Ok(report)
}

/// With connected parts the orbit construction is 2-connected and prime;
/// with a disconnected empty-graph part it is not 2-connected.
fn two_conn_prime_suite(grid: &SuiteGrid) -> Result<VerificationReport, FamilyError> {
    let max_k = grid.get("k", 3) as usize;
    let max_l = grid.get("l", 4) as usize;
    let mut report = VerificationReport::new(
        "two-conn-prime",
        grid.describe(&[("k", max_k as u64), ("l", max_l as u64)]),
    );
    for k in 2..=max_k {
        let choices = part_choices(k);
        for l in 2..=max_l {
            for pattern in part_patterns(choices.len(), l) {
                let parts: Vec<(Graph, CyclicAction)> = pattern
                    .iter()
                    .map(|&c| (choices[c].1.clone(), choices[c].2.clone()))
                    .collect();
                let names: Vec<String> = pattern
                    .iter()
                    .map(|&c| format!("{}{}", choices[c].0, k))
                    .collect();
                let (graph, _) = orbit_construction(k, &parts)?;
                let params = format!("k={k},l={l},parts={}", names.join("+"));
                let m = metrics(&graph);
                let prime = primality_witness(&graph)
                    .map(|v| v.is_prime())
                    .unwrap_or(false);
                report.push(
                    params.clone(),
                    "two-connected prime".to_string(),
                    match (m.two_connected, prime) {
                        (true, true) => "two-connected prime".to_string(),
                        (tc, pr) => format!("two_connected={tc} prime={pr}"),
                    },
                );
            }

            // the caveat: a disconnected part (empty graph on k vertices)
            // produces a cut vertex
            let empty = Graph::empty(k).expect("k >= 2");
            let rotation: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            let empty_action = verify_k_symmetric(&empty, &rotation, k)?;
            let mut parts = vec![(empty, empty_action)];
            for _ in 1..l {
                parts.push((choices[0].1.clone(), choices[0].2.clone()));
            }
            let (graph, _) = orbit_construction(k, &parts)?;
            let m = metrics(&graph);
            report.push(
                format!("k={k},l={l},parts=E{k}+K{k}^{}", l - 1),
                "not two-connected".to_string(),
                if m.two_connected {
                    "two-connected".to_string()
                } else {
                    "not two-connected".to_string()
                },
            );
        }
    }
    Ok(report)
}

/// Faria bound m_G(1) >= p - q on every tree with at most `n` vertices and on
/// `count` seeded random graphs.
fn faria_suite(grid: &SuiteGrid) -> VerificationReport {
    let max_n = grid.get("n", 8) as usize;
    let count = grid.get("count", 100);
    let seed = grid.get("seed", 0);
    let mut report = VerificationReport::new(
        "faria",
        format!("n<={max_n},count={count},seed={seed}"),
    );
    for n in 1..=max_n {
        for (idx, tree) in unlabeled_trees(n).iter().enumerate() {
            report.push(
                format!("tree n={n} #{idx}"),
                "m(1)>=p-q".to_string(),
                faria_holds(tree),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let n = 4 + (i as usize % 7);
        let g = random_graph(n, &mut rng);
        report.push(
            format!("random #{i} n={n}"),
            "m(1)>=p-q".to_string(),
            faria_holds(&g),
        );
    }
    report
}

fn faria_holds(g: &Graph) -> String {
    let m = metrics(g);
    let bound = m.pendants.saturating_sub(m.quasi_pendants);
    let mult = multiplicity(g, &BigInt::one());
    if mult >= bound {
        "m(1)>=p-q".to_string()
    } else {
        format!("m(1)={mult} < p-q={bound}")
    }
}

/// Fiedler bound: second-smallest Laplacian eigenvalue <= kappa for
/// noncomplete graphs; complete graphs are checked against their exact value
/// lambda_2 = n. Decided with integer arithmetic only: integer eigenvalues
/// directly, residual roots by Sturm counts over (0, kappa].
fn fiedler_suite(grid: &SuiteGrid) -> VerificationReport {
    let count = grid.get("count", 30);
    let seed = grid.get("seed", 0);
    let mut report =
        VerificationReport::new("fiedler", format!("catalog,count={count},seed={seed}"));
    for (name, g) in catalog() {
        report.push(name.to_string(), "holds".to_string(), fiedler_holds(&g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let n = 4 + (i as usize % 6);
        let g = random_connected_graph(n, &mut rng);
        report.push(
            format!("random #{i} n={n}"),
            "holds".to_string(),
            fiedler_holds(&g),
        );
    }
    report
}

fn fiedler_holds(g: &Graph) -> String {
    let n = g.order();
    if n == 1 {
        return "holds".to_string(); // no second eigenvalue
    }
    let s = spectrum(g);
    if g.is_complete() {
        // lambda_2 = n exactly: spectrum must be {0, n^(n-1)}
        let expected = s.multiplicity_of(&BigInt::zero()) == 1
            && s.multiplicity_of(&BigInt::from(n)) == n - 1;
        return if expected {
            "holds".to_string()
        } else {
            "complete graph spectrum mismatch".to_string()
        };
    }
    let kappa = vertex_connectivity(g);
    if !g.is_connected() {
        // lambda_2 = 0 = kappa
        return "holds".to_string();
    }
    // smallest nonzero eigenvalue: integer candidates first
    let integer_ok = s
        .integer_eigenvalues()
        .iter()
        .any(|(v, _)| !v.is_zero() && *v <= BigInt::from(kappa));
    let residual_ok = !s.residual().is_one()
        && count_roots_in_halfopen(&s.residual().squarefree_part(), 0, kappa as i64) >= 1;
    if integer_ok || residual_ok {
        "holds".to_string()
    } else {
        format!("lambda2 > kappa={kappa}")
    }
}

/// Kirchhoff counts: the Laplacian minor determinant vs direct spanning-tree
/// enumeration on small catalog graphs, and K_n vs Cayley's n^(n-2).
fn kirchhoff_suite(grid: &SuiteGrid) -> VerificationReport {
    let max_n = grid.get("n", 6) as usize;
    let cayley = grid.get("cayley", 7) as usize;
    let mut report = VerificationReport::new(
        "kirchhoff",
        format!("n<={max_n},cayley<={cayley}"),
    );
    for (name, g) in catalog() {
        if g.order() > max_n {
            continue;
        }
        let computed = spanning_trees(&g);
        let direct = count_spanning_trees_direct(&g);
        report.push(name.to_string(), direct.to_string(), computed.to_string());
    }
    for n in 1..=cayley {
        let g = Graph::complete(n).expect("n >= 1");
        let expected = if n == 1 {
            BigInt::one()
        } else {
            BigInt::from(n).pow((n - 2) as u32)
        };
        report.push(
            format!("K{n}"),
            expected.to_string(),
            spanning_trees(&g).to_string(),
        );
    }
    report
}

/// Brute-force oracle: count (n-1)-edge subsets forming a spanning tree.
fn count_spanning_trees_direct(g: &Graph) -> BigInt {
    let n = g.order();
    if n == 1 {
        return BigInt::one();
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() < n - 1 {
        return BigInt::zero();
    }
    let mut count = BigInt::zero();
    let mut chosen = Vec::new();
    count_subsets(&edges, 0, n - 1, &mut chosen, &mut count, n);
    count
}

fn count_subsets(
    edges: &[(usize, usize)],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<(usize, usize)>,
    count: &mut BigInt,
    n: usize,
) {
    if remaining == 0 {
        let candidate = Graph::new(n, chosen.iter().copied()).expect("edges from the graph");
        if candidate.is_connected() {
            *count += BigInt::one();
        }
        return;
    }
    if edges.len() - start < remaining {
        return;
    }
    for i in start..edges.len() {
        chosen.push(edges[i]);
        count_subsets(edges, i + 1, remaining - 1, chosen, count, n);
        chosen.pop();
    }
}

/// The spectrum of G box H is the multiset of pairwise eigenvalue sums;
/// checked exactly on integral factor pairs.
fn cartesian_sum_suite(grid: &SuiteGrid) -> VerificationReport {
    let max_n = grid.get("n", 5) as usize;
    let mut report = VerificationReport::new("cartesian-sum", format!("n<={max_n}"));
    let factors: Vec<(&str, Graph)> = catalog()
        .into_iter()
        .filter(|(_, g)| g.order() <= max_n && spectrum(g).is_integral())
        .collect();
    for (i, (name_g, g)) in factors.iter().enumerate() {
        for (name_h, h) in factors.iter().skip(i) {
            let product = g.cartesian_product(h);
            let computed = spectrum(&product);
            let sg = spectrum(g).multiset().expect("integral factor");
            let sh = spectrum(h).multiset().expect("integral factor");
            let mut sums: Vec<BigInt> = sg
                .iter()
                .flat_map(|a| sh.iter().map(move |b| a + b))
                .collect();
            sums.sort();
            let params = format!("{name_g} x {name_h}");
            match computed.multiset() {
                Ok(got) => report.push(
                    params,
                    format_multiset(&sums),
                    format_multiset(&got),
                ),
                Err(_) => report.push(
                    params,
                    format_multiset(&sums),
                    "non-integral product spectrum".to_string(),
                ),
            }
        }
    }
    report
}

fn format_multiset(values: &[BigInt]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// complement_spectrum(spectrum(G)) = spectrum(complement(G)) on integral
/// catalog graphs.
fn complement_suite(_grid: &SuiteGrid) -> VerificationReport {
    let mut report = VerificationReport::new("complement", "catalog".to_string());
    for (name, g) in catalog() {
        let s = spectrum(&g);
        if !s.is_integral() {
            continue;
        }
        let derived = complement_spectrum(&s).expect("integral input");
        let direct = spectrum(&g.complement());
        report.push(
            name.to_string(),
            format_multiset(&direct.multiset().expect("complement of integral is integral")),
            format_multiset(&derived.multiset().expect("derived spectrum is integral")),
        );
    }
    report
}

/// The product connectivity formula vs exact kappa on connected catalog
/// pairs with 2..=max_n vertices.
fn spacapan_suite(grid: &SuiteGrid) -> VerificationReport {
    let max_n = grid.get("n", 5) as usize;
    let mut report = VerificationReport::new("spacapan", format!("n<={max_n}"));
    let factors: Vec<(&str, Graph)> = catalog()
        .into_iter()
        .filter(|(_, g)| g.order() >= 2 && g.order() <= max_n && g.is_connected())
        .collect();
    for (i, (name_g, g)) in factors.iter().enumerate() {
        for (name_h, h) in factors.iter().skip(i) {
            let formula = spacapan_connectivity(g, h).expect("connected nontrivial factors");
            let exact = vertex_connectivity(&g.cartesian_product(h));
            report.push(
                format!("{name_g} x {name_h}"),
                exact.to_string(),
                formula.to_string(),
            );
        }
    }
    report
}

/// Divisor-eigenvalue containment (squarefree divisibility) for singleton
/// partitions, one-block partitions of regular graphs, the family
/// partitions, and the orbit partitions.
fn equitable_containment_suite(grid: &SuiteGrid) -> Result<VerificationReport, FamilyError> {
    let mut report = VerificationReport::new("equitable-containment", "catalog+families".to_string());
    let _ = grid;
    let mut cases: Vec<(String, Graph, EquitablePartition)> = Vec::new();

    for (name, g) in catalog() {
        let singleton: Vec<Vec<usize>> = (0..g.order()).map(|v| vec![v]).collect();
        let p = verify_equitable(&g, &singleton)?;
        cases.push((format!("{name} singleton"), g.clone(), p));
        if g.is_regular() {
            let p = verify_equitable(&g, &[(0..g.order()).collect()])?;
            cases.push((format!("{name} one-block"), g, p));
        }
    }

    for n in 1..=3usize {
        for m in 1..=3usize {
            let (g, _, p) = cnkm_with_partition(n, n, m)?;
            cases.push((format!("C({n},{m}) apex+copies"), g, p));
        }
    }
    for (n, k, m) in [(4, 2, 1), (4, 2, 3), (6, 3, 2), (6, 2, 2)] {
        let (g, _, p) = cnkm_with_partition(n, k, m)?;
        cases.push((format!("C({n},{k},{m}) apex+copies"), g, p));
    }

    for k in 2..=3usize {
        let choices = part_choices(k);
        for l in 2..=3usize {
            let parts: Vec<(Graph, CyclicAction)> = (0..l)
                .map(|i| {
                    let c = i % choices.len();
                    (choices[c].1.clone(), choices[c].2.clone())
                })
                .collect();
            let (g, p) = orbit_construction(k, &parts)?;
            cases.push((format!("orbit k={k},l={l}"), g, p));
        }
    }

    for (params, g, p) in cases {
        let contained = crate::spectra::divisor_contained(&g, &p);
        report.push(
            params,
            "contained".to_string(),
            if contained {
                "contained".to_string()
            } else {
                "not contained".to_string()
            },
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, spec: &str) -> VerificationReport {
        let grid = SuiteGrid::parse(spec).unwrap();
        verify_suite(name, &grid).unwrap()
    }

    #[test]
    fn char_suite_small_grid_passes() {
        let report = run("char", "n<=4,m<=4");
        assert_eq!(report.results.len(), 16);
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn char_k_suite_small_grid_passes() {
        let report = run("char-k", "n<=4,m<=2");
        assert!(report.passed(), "{}", report.to_text());
        // n = 1..4 have 1+2+2+3 divisors, times 2 values of m, 2 rows each
        assert_eq!(report.results.len(), 16);
    }

    #[test]
    fn multm_suite_small() {
        let report = run("multm", "k<=3,l<=3");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn km_product_suite_small() {
        let report = run("km-product", "m<=3");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn orbit_and_prime_suites_small() {
        let report = run("orbit", "k<=2,l<=3");
        assert!(report.passed(), "{}", report.to_text());
        let report = run("two-conn-prime", "k<=2,l<=3");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn faria_suite_small() {
        let report = run("faria", "n<=6,count=20,seed=0");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn fiedler_suite_small() {
        let report = run("fiedler", "count=10,seed=0");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn kirchhoff_suite_small() {
        let report = run("kirchhoff", "n<=5,cayley=5");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn cartesian_sum_suite_small() {
        let report = run("cartesian-sum", "n<=3");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn complement_and_spacapan_suites() {
        assert!(run("complement", "").passed());
        let report = run("spacapan", "n<=3");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn equitable_containment_suite_passes() {
        let report = run("equitable-containment", "");
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(matches!(
            verify_suite("nope", &SuiteGrid::empty()),
            Err(FamilyError::UnknownSuite(_))
        ));
    }

    #[test]
    fn grid_parsing() {
        let g = SuiteGrid::parse("n<=6, m<=4, seed=3").unwrap();
        assert_eq!(g.get("n", 0), 6);
        assert_eq!(g.get("m", 0), 4);
        assert_eq!(g.get("seed", 0), 3);
        assert_eq!(g.get("count", 100), 100);
        assert!(SuiteGrid::parse("bogus<=3").is_err());
        assert!(SuiteGrid::parse("n<=x").is_err());
    }

    #[test]
    fn report_text_and_json_shapes() {
        let report = run("char", "n<=2,m<=2");
        let text = report.to_text();
        assert!(text.contains("PASS char [n=1,m=1]"));
        assert!(text.contains("char: 4/4 instances pass"));
        let json = report.to_json();
        assert_eq!(json["suite"], "char");
        assert_eq!(json["results"].as_array().unwrap().len(), 4);
        assert_eq!(json["results"][0]["pass"], true);
    }
}
