//! Command-line front end: Hilbert function computation, parking-function
//! and polytope queries, and the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bizon::counting::{hilbert_direct, HilbertPolynomial};
use bizon::delcon::{hilbert_delcon, MemoTable};
use bizon::error::Error;
use bizon::multigraph::MultiGraph;
use bizon::parking;
use bizon::polytope;
use bizon::verify;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_R_TOO_SMALL: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "bizon", version, about = "Hilbert functions of bizonotopal algebras of multigraphs")]
struct Cli {
    /// Worker threads (default: available parallelism; env BIZON_THREADS)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphSource {
    /// Graph file: "p <n> <m>" header, "e <u> <v>" edges, 1-indexed
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Built-in family, e.g. complete:5, loops:3, cycle:4, path:3, petersen:10
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of the r-bizonotopal algebra
    Hilbert {
        #[command(flatten)]
        source: GraphSource,
        /// Algebra parameter: 1 external, 0 central, -1 internal
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Weak parking functions
    Parking {
        #[command(flatten)]
        source: GraphSource,
        #[arg(value_enum)]
        action: ParkingAction,
    },
    /// Score-vector polytope
    Polytope {
        #[command(flatten)]
        source: GraphSource,
        #[arg(value_enum)]
        action: PolytopeAction,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest complete graph used by the appendix/polytope suites
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Direct,
    Delcon,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParkingAction {
    List,
    Count,
    Maximal,
    ConeCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolytopeAction {
    Vertices,
    Count,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Appendix,
    Delcon,
    Oracle,
    Parking,
    Polytope,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("BIZON_THREADS").ok().and_then(|s| s.parse().ok()));
    if let Some(t) = threads {
        if rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("warning: thread pool already initialized");
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::RBelowMinusDelta { .. } | Error::ZeroAlgebra => EXIT_R_TOO_SMALL,
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::InvalidGraph(_) | Error::UnknownFamily(_) => EXIT_PARSE,
        _ => EXIT_CHECK_FAILED,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Hilbert { source, r, method } => {
            let (name, g) = load_graph(&source)?;
            cmd_hilbert(&name, &g, r, method, cli.json)
        }
        Command::Parking { source, action } => {
            let (name, g) = load_graph(&source)?;
            cmd_parking(&name, &g, action, cli.json)
        }
        Command::Polytope { source, action } => {
            let (name, g) = load_graph(&source)?;
            cmd_polytope(&name, &g, action, cli.json)
        }
        Command::Verify { suite, max_n } => cmd_verify(suite, max_n, cli.json),
    }
}

/// Parse "p n m" / "e u v" graph files; 1-indexed vertices, '#' comments.
fn parse_graph_file(text: &str) -> Result<MultiGraph, Error> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| Error::InvalidGraph(format!("line {}: {msg}", lineno + 1));
        match fields[0] {
            "p" => {
                if header.is_some() || fields.len() != 3 {
                    return Err(bad("malformed or duplicate header"));
                }
                let n = fields[1].parse().map_err(|_| bad("bad vertex count"))?;
                let m = fields[2].parse().map_err(|_| bad("bad edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| bad("edge before header"))?;
                if fields.len() != 3 {
                    return Err(bad("edge line needs two endpoints"));
                }
                let u: usize = fields[1].parse().map_err(|_| bad("bad endpoint"))?;
                let v: usize = fields[2].parse().map_err(|_| bad("bad endpoint"))?;
                if u < 1 || v < 1 || u > n || v > n {
                    return Err(bad("endpoint out of range"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(bad("unknown line type")),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::InvalidGraph("missing header".to_string()))?;
    if edges.len() != m {
        return Err(Error::InvalidGraph(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    MultiGraph::new(n, edges)
}

fn load_graph(source: &GraphSource) -> Result<(String, MultiGraph), Error> {
    match (&source.graph, &source.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidGraph(format!("{}: {e}", path.display())))?;
            Ok((path.display().to_string(), parse_graph_file(&text)?))
        }
        (None, Some(spec)) => {
            let (name, param) = spec
                .split_once(':')
                .ok_or_else(|| Error::UnknownFamily(spec.clone()))?;
            let n = param
                .parse()
                .map_err(|_| Error::UnknownFamily(spec.clone()))?;
            Ok((spec.clone(), MultiGraph::family(name, n)?))
        }
        _ => Err(Error::InvalidGraph(
            "exactly one of --graph and --family is required".to_string(),
        )),
    }
}

fn cmd_hilbert(
    name: &str,
    g: &MultiGraph,
    r: i64,
    method: Method,
    json: bool,
) -> Result<ExitCode, Error> {
    let start = Instant::now();
    if method == Method::Delcon && r != 0 && r != 1 {
        return Err(Error::InvalidGraph(format!(
            "method delcon supports r in {{0,1}}, got {r}"
        )));
    }
    let (h, method_name) = match method {
        Method::Direct => (hilbert_direct(g, r)?, "direct"),
        Method::Delcon => {
            let memo = MemoTable::new();
            let h = hilbert_delcon(g, r, &memo)?;
            // cross-check against the direct method when it is in budget
            match hilbert_direct(g, r) {
                Ok(direct) if direct != h => {
                    eprintln!("error: delcon and direct methods disagree on {name}");
                    return Ok(ExitCode::from(EXIT_CHECK_FAILED));
                }
                _ => {}
            }
            (h, "delcon")
        }
        Method::Auto => {
            if (r == 0 || r == 1) && g.vertex_count() <= 12 {
                let memo = MemoTable::new();
                let h = hilbert_delcon(g, r, &memo)?;
                if g.vertex_count() <= 6 && g.edge_count() <= 12 {
                    let direct = hilbert_direct(g, r)?;
                    if direct != h {
                        eprintln!("error: delcon and direct methods disagree on {name}");
                        return Ok(ExitCode::from(EXIT_CHECK_FAILED));
                    }
                }
                (h, "delcon")
            } else {
                (hilbert_direct(g, r)?, "direct")
            }
        }
    };
    let elapsed = start.elapsed().as_millis();
    print_hilbert(name, r, method_name, &h, elapsed, json);
    Ok(ExitCode::SUCCESS)
}

fn print_hilbert(
    name: &str,
    r: i64,
    method: &str,
    h: &HilbertPolynomial,
    wall_time_ms: u128,
    json: bool,
) {
    if json {
        let record = json!({
            "graph": name,
            "r": r,
            "method": method,
            "hilbert": h.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "dimension": h.dimension().to_string(),
            "top_degree": h.top_degree(),
            "top_dimension": h.leading_coefficient().map(|c| c.to_string()),
            "wall_time_ms": wall_time_ms,
        });
        println!("{record}");
        return;
    }
    println!("graph: {name}");
    println!("r: {r}  method: {method}");
    if h.is_zero() {
        println!("h(k): (zero algebra)");
        println!("dim = 0");
    } else {
        let row: Vec<String> = h.coeffs().iter().map(|c| c.to_string()).collect();
        println!("h(k): {}", row.join(", "));
        println!(
            "dim = {}; top degree {} with dimension {}",
            h.dimension(),
            h.top_degree().unwrap(),
            h.leading_coefficient().unwrap()
        );
    }
    println!("wall time: {wall_time_ms} ms");
}

fn sorted_rows(set: &std::collections::HashSet<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = set.iter().cloned().collect();
    rows.sort();
    rows
}

fn print_rows(rows: &[Vec<u32>]) {
    for row in rows {
        let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("({})", parts.join(","));
    }
}

fn cmd_parking(
    name: &str,
    g: &MultiGraph,
    action: ParkingAction,
    json: bool,
) -> Result<ExitCode, Error> {
    match action {
        ParkingAction::List => {
            let rows = sorted_rows(&parking::enumerate_weak_parking(g)?);
            if json {
                println!("{}", json!({ "graph": name, "weak_parking": rows }));
            } else {
                print_rows(&rows);
            }
        }
        ParkingAction::Count => {
            let count = parking::enumerate_weak_parking(g)?.len();
            if json {
                println!("{}", json!({ "graph": name, "count": count }));
            } else {
                println!("{count}");
            }
        }
        ParkingAction::Maximal => {
            let rows = sorted_rows(&parking::maximal_weak_parking(g)?);
            if json {
                println!("{}", json!({ "graph": name, "maximal": rows }));
            } else {
                print_rows(&rows);
            }
        }
        ParkingAction::ConeCheck => {
            let ok = parking::cone_equivalence_check(g)?;
            if json {
                println!("{}", json!({ "graph": name, "cone_equivalence": ok }));
            } else {
                println!("cone equivalence: {ok}");
            }
            if !ok {
                return Ok(ExitCode::from(EXIT_CHECK_FAILED));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_polytope(
    name: &str,
    g: &MultiGraph,
    action: PolytopeAction,
    json: bool,
) -> Result<ExitCode, Error> {
    match action {
        PolytopeAction::Vertices => {
            let rows = sorted_rows(&polytope::all_vertices(g)?);
            if json {
                println!("{}", json!({ "graph": name, "vertices": rows }));
            } else {
                print_rows(&rows);
            }
        }
        PolytopeAction::Count => {
            let (count, bound, tight) = polytope::vertex_count_bounds(g)?;
            if json {
                println!(
                    "{}",
                    json!({ "graph": name, "count": count as u64, "bound": bound as u64, "tight": tight })
                );
            } else {
                println!("count = {count}, bound = {bound}, tight = {tight}");
            }
        }
        PolytopeAction::Verify => {
            let ok = polytope::verify_vertex_characterizations(g)?;
            if json {
                println!("{}", json!({ "graph": name, "characterizations": ok }));
            } else {
                println!("vertex characterizations: {ok}");
            }
            if !ok {
                return Ok(ExitCode::from(EXIT_CHECK_FAILED));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: Suite, max_n: usize, json: bool) -> Result<ExitCode, Error> {
    let reports = match suite {
        Suite::Appendix => vec![verify::appendix_suite(max_n)?],
        Suite::Delcon => vec![verify::delcon_suite()?],
        Suite::Oracle => vec![verify::oracle_suite()?],
        Suite::Parking => vec![verify::parking_suite()?],
        Suite::Polytope => vec![verify::polytope_suite(max_n)?],
        Suite::All => verify::all_suites(max_n)?,
    };
    let mut all_ok = true;
    if json {
        let value = json!(reports
            .iter()
            .map(|rep| {
                json!({
                    "suite": rep.suite,
                    "corpus_seed": rep.corpus_seed,
                    "passed": rep.passed(),
                    "checks": rep.checks.iter().map(|c| json!({
                        "name": c.name,
                        "passed": c.passed,
                        "detail": c.detail,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>());
        println!("{value}");
        all_ok = reports.iter().all(|r| r.passed());
    } else {
        for rep in &reports {
            println!("suite {} (corpus seed {})", rep.suite, rep.corpus_seed);
            for c in &rep.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("  [{tag}] {}", c.name);
                } else {
                    println!("  [{tag}] {} — {}", c.name, c.detail);
                }
                all_ok &= c.passed;
            }
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}
