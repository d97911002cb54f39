//! Command-line front end: graph I/O, family generation, exact spectra,
//! integrality searches, joins, symmetry search, and verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symspec::families::{
    build_cnkm, build_cnm, orbit_construction, search_integral_cnm,
    search_integral_cnm_bruteforce, verify_suite, SuiteGrid, SUITE_NAMES,
};
use symspec::graph::{
    metrics, parse_edge_list, primality_witness, to_edge_list, Graph, GraphKind,
    PrimalityVerdict,
};
use symspec::spectra::{laplacian_charpoly, spectrum};
use symspec::symmetry::{
    base_of, find_k_symmetric, k_join, parse_cycle_notation, validate_base, verify_k_symmetric,
    CyclicAction, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "symspec",
    about = "Exact Laplacian spectra of graphs with free cyclic symmetries",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family or named graph as an edge list
    Gen(GenArgs),
    /// Exact Laplacian spectrum of a graph
    Spectrum(GraphInput),
    /// Exact Laplacian characteristic polynomial
    Charpoly(GraphInput),
    /// Decide Laplacian integrality
    Integral(GraphInput),
    /// Search for Laplacian integral C(n,m) parameters
    Search(SearchArgs),
    /// k-symmetric join of two graphs
    Join(JoinArgs),
    /// Search for a free cyclic action of a given order
    FindSym(FindSymArgs),
    /// Structural metrics: connectivity, pendants, primality witness
    Metrics(GraphInput),
    /// Run a named verification suite over a parameter grid
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// cnm | cnkm | orbit | named
    #[arg(long)]
    family: String,
    /// clique size (cnm, cnkm) or order (named)
    #[arg(long)]
    n: Option<usize>,
    /// copy count (cnm, cnkm)
    #[arg(long)]
    m: Option<usize>,
    /// symmetry order (cnkm, orbit)
    #[arg(long)]
    k: Option<usize>,
    /// named generator kind: complete | empty | cycle | path | petersen
    #[arg(long)]
    kind: Option<String>,
    /// orbit parts, e.g. "K2,K2" or "C3,K3" (orders must be multiples of k)
    #[arg(long)]
    parts: Option<String>,
}

#[derive(Args)]
struct GraphInput {
    /// edge-list file, or '-' for stdin
    input: String,
    /// machine-readable JSON output
    #[arg(long)]
    json: bool,
    /// factored polynomial form, integer roots ascending
    #[arg(long)]
    factored: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    max_m: usize,
    /// cross-check with full spectrum computation instead of the
    /// discriminant shortcut
    #[arg(long)]
    brute_force: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct JoinArgs {
    /// first edge-list file, or '-'
    graph1: String,
    /// second edge-list file, or '-'
    graph2: String,
    /// common action order
    #[arg(long)]
    k: usize,
    /// first action in cycle notation, e.g. "(0 1 2 3 4)"
    #[arg(long)]
    sigma1: String,
    /// second action in cycle notation
    #[arg(long)]
    sigma2: String,
    /// base of the first action, comma-separated (default: canonical)
    #[arg(long)]
    base1: Option<String>,
    /// base of the second action, comma-separated (default: canonical)
    #[arg(long)]
    base2: Option<String>,
}

#[derive(Args)]
struct FindSymArgs {
    /// edge-list file, or '-' for stdin
    input: String,
    #[arg(long)]
    k: usize,
    /// node-expansion budget
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// suite name; see --list
    #[arg(long, required_unless_present = "list")]
    suite: Option<String>,
    /// grid bounds like "n<=6,m<=6" (suite defaults otherwise)
    #[arg(long)]
    grid: Option<String>,
    /// seed for randomized grids (used unless --grid sets one)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    /// list available suites
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Spectrum(args) => spectrum_cmd(args),
        Command::Charpoly(args) => charpoly_cmd(args),
        Command::Integral(args) => integral_cmd(args),
        Command::Search(args) => search_cmd(args),
        Command::Join(args) => join_cmd(args),
        Command::FindSym(args) => find_sym_cmd(args),
        Command::Metrics(args) => metrics_cmd(args),
        Command::Verify(args) => verify_cmd(args),
    }
}

fn read_graph(path: &str) -> Result<Graph, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
    };
    parse_edge_list(&text).map_err(|e| e.to_string())
}

fn require(value: Option<usize>, flag: &str) -> Result<usize, String> {
    value.ok_or_else(|| format!("--{flag} is required for this family"))
}

fn gen(args: GenArgs) -> Result<ExitCode, String> {
    let graph = match args.family.as_str() {
        "cnm" => {
            let n = require(args.n, "n")?;
            let m = require(args.m, "m")?;
            if n == 0 || m == 0 {
                return Err("n and m must be at least 1".to_string());
            }
            build_cnm(n, m)
        }
        "cnkm" => {
            let n = require(args.n, "n")?;
            let m = require(args.m, "m")?;
            let k = require(args.k, "k")?;
            build_cnkm(n, k, m).map_err(|e| e.to_string())?
        }
        "orbit" => {
            let k = require(args.k, "k")?;
            let spec = args
                .parts
                .ok_or_else(|| "--parts is required for the orbit family".to_string())?;
            let parts = parse_parts(&spec, k)?;
            let (graph, _) = orbit_construction(k, &parts).map_err(|e| e.to_string())?;
            graph
        }
        "named" => {
            let kind = args
                .kind
                .ok_or_else(|| "--kind is required for named graphs".to_string())?;
            let kind = GraphKind::parse(&kind)
                .ok_or_else(|| format!("unknown kind {kind:?}"))?;
            let n = args.n.unwrap_or(if kind == GraphKind::Petersen { 10 } else { 0 });
            Graph::generate(kind, n).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    print!("{}", to_edge_list(&graph));
    Ok(ExitCode::SUCCESS)
}

/// Parses "K2,C4,E2" into parts with their order-k rotation actions.
fn parse_parts(spec: &str, k: usize) -> Result<Vec<(Graph, CyclicAction)>, String> {
    let mut parts = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let mut chars = token.chars();
        let kind = chars.next().expect("token is nonempty");
        let order: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("bad part {token:?}: expected K<n>, C<n>, or E<n>"))?;
        if order == 0 || order % k != 0 {
            return Err(format!("part {token:?}: order must be a positive multiple of k={k}"));
        }
        let graph = match kind {
            'K' => Graph::complete(order),
            'C' => Graph::cycle(order),
            'E' => Graph::empty(order),
            _ => return Err(format!("bad part {token:?}: expected K<n>, C<n>, or E<n>")),
        }
        .map_err(|e| e.to_string())?;
        let step = order / k;
        let rotation: Vec<usize> = (0..order).map(|i| (i + step) % order).collect();
        let action = verify_k_symmetric(&graph, &rotation, k).map_err(|e| e.to_string())?;
        parts.push((graph, action));
    }
    if parts.is_empty() {
        return Err("no parts given".to_string());
    }
    Ok(parts)
}

fn spectrum_cmd(args: GraphInput) -> Result<ExitCode, String> {
    let g = read_graph(&args.input)?;
    let s = spectrum(&g);
    if args.json {
        println!("{}", s.to_json());
    } else if args.factored {
        println!("{}", s.charpoly().factored());
    } else {
        println!("n={}", s.order());
        println!("{}", s.eigenvalue_summary());
        if !s.is_integral() {
            let roots: Vec<String> = s
                .approximate_residual_roots()
                .iter()
                .map(|r| format!("{r:.9}"))
                .collect();
            println!("residual roots ~ {}", roots.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn charpoly_cmd(args: GraphInput) -> Result<ExitCode, String> {
    let g = read_graph(&args.input)?;
    let p = laplacian_charpoly(&g);
    if args.json {
        println!(
            "{}",
            serde_json::Value::Array(
                p.to_coeff_strings()
                    .into_iter()
                    .map(serde_json::Value::String)
                    .collect()
            )
        );
    } else if args.factored {
        println!("{}", p.factored());
    } else {
        println!("{p}");
    }
    Ok(ExitCode::SUCCESS)
}

fn integral_cmd(args: GraphInput) -> Result<ExitCode, String> {
    let g = read_graph(&args.input)?;
    let s = spectrum(&g);
    if args.json {
        let mut v = s.to_json();
        v["integral"] = serde_json::Value::Bool(s.is_integral());
        println!("{v}");
    } else {
        println!("{}", if s.is_integral() { "yes" } else { "no" });
        println!("{}", s.eigenvalue_summary());
    }
    Ok(ExitCode::SUCCESS)
}

fn search_cmd(args: SearchArgs) -> Result<ExitCode, String> {
    if args.max_n == 0 || args.max_m == 0 {
        return Err("--max-n and --max-m must be at least 1".to_string());
    }
    let pairs = if args.brute_force {
        search_integral_cnm_bruteforce(args.max_n, args.max_m)
    } else {
        search_integral_cnm(args.max_n, args.max_m)
    };
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "max_n": args.max_n,
                "max_m": args.max_m,
                "pairs": pairs,
            })
        );
    } else {
        for (n, m) in pairs {
            println!("{n} {m}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_base_list(spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad base vertex {t:?}")))
        .collect()
}

fn join_cmd(args: JoinArgs) -> Result<ExitCode, String> {
    let g1 = read_graph(&args.graph1)?;
    let g2 = read_graph(&args.graph2)?;
    let sigma1 = parse_cycle_notation(&args.sigma1, g1.order()).map_err(|e| e.to_string())?;
    let sigma2 = parse_cycle_notation(&args.sigma2, g2.order()).map_err(|e| e.to_string())?;
    let a1 = verify_k_symmetric(&g1, &sigma1, args.k).map_err(|e| e.to_string())?;
    let a2 = verify_k_symmetric(&g2, &sigma2, args.k).map_err(|e| e.to_string())?;
    let b1 = match &args.base1 {
        Some(spec) => validate_base(&a1, &parse_base_list(spec)?).map_err(|e| e.to_string())?,
        None => base_of(&a1),
    };
    let b2 = match &args.base2 {
        Some(spec) => validate_base(&a2, &parse_base_list(spec)?).map_err(|e| e.to_string())?,
        None => base_of(&a2),
    };
    let (joined, action) = k_join(&g1, &a1, &b1, &g2, &a2, &b2).map_err(|e| e.to_string())?;
    print!("{}", to_edge_list(&joined));
    println!("# action k={} sigma={}", action.k(), action.cycle_notation());
    Ok(ExitCode::SUCCESS)
}

fn find_sym_cmd(args: FindSymArgs) -> Result<ExitCode, String> {
    let g = read_graph(&args.input)?;
    if args.k == 0 {
        return Err("--k must be at least 1".to_string());
    }
    let outcome = find_k_symmetric(&g, args.k, args.budget);
    if args.json {
        let v = match &outcome {
            SearchOutcome::Found(a) => serde_json::json!({
                "status": "found",
                "action": {"k": a.k(), "sigma": a.sigma()},
            }),
            SearchOutcome::NotFound => serde_json::json!({"status": "not-found"}),
            SearchOutcome::BudgetExhausted => serde_json::json!({"status": "budget-exhausted"}),
        };
        println!("{v}");
    } else {
        match &outcome {
            SearchOutcome::Found(a) => {
                println!("found k={}", a.k());
                println!("{}", a.cycle_notation());
            }
            SearchOutcome::NotFound => println!("not found"),
            SearchOutcome::BudgetExhausted => println!("budget exhausted"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn metrics_cmd(args: GraphInput) -> Result<ExitCode, String> {
    let g = read_graph(&args.input)?;
    let m = metrics(&g);
    let primality = if g.order() >= 2 && g.is_connected() {
        Some(primality_witness(&g).map_err(|e| e.to_string())?)
    } else {
        None
    };
    if args.json {
        let primality = match primality {
            Some(PrimalityVerdict::Prime { witness }) => {
                serde_json::json!({"verdict": "prime", "witness": witness})
            }
            Some(PrimalityVerdict::Unknown) => serde_json::json!({"verdict": "unknown"}),
            None => serde_json::json!({"verdict": "not-applicable"}),
        };
        println!(
            "{}",
            serde_json::json!({
                "order": g.order(),
                "edges": g.edge_count(),
                "kappa": m.kappa,
                "pendants": m.pendants,
                "quasi_pendants": m.quasi_pendants,
                "min_degree": m.min_degree,
                "two_connected": m.two_connected,
                "components": m.components,
                "primality": primality,
            })
        );
    } else {
        println!("order={} edges={}", g.order(), g.edge_count());
        println!(
            "kappa={} min_degree={} components={} two_connected={}",
            m.kappa, m.min_degree, m.components, m.two_connected
        );
        println!("pendants={} quasi_pendants={}", m.pendants, m.quasi_pendants);
        match primality {
            Some(PrimalityVerdict::Prime { witness }) => {
                println!("primality=prime witness={witness}")
            }
            Some(PrimalityVerdict::Unknown) => println!("primality=unknown"),
            None => println!("primality=not-applicable"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.list {
        for name in SUITE_NAMES {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let suite = args.suite.expect("clap enforces suite unless --list");
    let mut spec = args.grid.unwrap_or_default();
    if !spec.contains("seed") {
        if !spec.is_empty() {
            spec.push(',');
        }
        spec.push_str(&format!("seed={}", args.seed));
    }
    let grid = SuiteGrid::parse(&spec).map_err(|e| e.to_string())?;
    let report = verify_suite(&suite, &grid).map_err(|e| e.to_string())?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
