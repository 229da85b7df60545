//! Batch command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 computation over budget. Results go to stdout (valid JSON under
//! `--json`); diagnostics go to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use linext::entropy::{graph_entropy, EntropyError, DEFAULT_ENTROPY_TOL};
use linext::graph::{parse_graph, Graph, EXACT_LIMIT};
use linext::opt::{
    coloring_lower_bound, complement_upper_bound, cut_upper_bound, epsilon_with_budget, OptError,
    DEFAULT_SEARCH_BUDGET,
};
use linext::orient::AcyclicOrientation;
use linext::polytope::{in_stable_polytope, mc_volume};
use linext::poset::Poset;
use linext::verify::run_suite;

#[derive(Parser)]
#[command(
    name = "linext",
    version,
    about = "Acyclic orientations maximizing linear-extension counts",
    max_term_width = 100
)]
struct Cli {
    /// Worker threads for parallel commands (0 = all cores; falls back to
    /// the LINEXT_THREADS environment variable).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the maximum linear-extension count over acyclic orientations.
    Optimize {
        /// Edge-list file: an "n m" header line, then one "u v" pair per line.
        path: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Abort (exit 3) if the search needs more than this many orientations.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Count linear extensions of the poset given by a directed edge list.
    Count {
        /// Edge-list file: an "n m" header line, then one "tail head" pair per line.
        path: PathBuf,
        /// Emit the count as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a named invariant suite and report pass/fail per check.
    Verify {
        /// One of: bip, odd-cycle, comparability, recurrence, flow, inout,
        /// complement-bound, stanley, zonotope, entropy-bounds.
        suite: String,
        /// Size of the suite's random corpus (default varies per suite).
        #[arg(long)]
        corpus_size: Option<usize>,
        /// Seed for the suite's random corpus.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Estimate the volume of the graph's stable-set polytope by Monte Carlo.
    Volume {
        /// Edge-list file: an "n m" header line, then one "u v" pair per line.
        path: PathBuf,
        /// Sample count (at least 10000).
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Seed for the sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the estimate as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Minimize the graph entropy over the stable-set polytope.
    Entropy {
        /// Edge-list file: an "n m" header line, then one "u v" pair per line.
        path: PathBuf,
        /// Certified accuracy of the reported minimum, in bits.
        #[arg(long, default_value_t = DEFAULT_ENTROPY_TOL)]
        tol: f64,
        /// Emit the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Sweep random graphs over a parameter grid and emit a CSV of bounds.
    Experiment {
        /// Grid spec "n1:p1,n2:p2,…", e.g. "5:0.3,6:0.5".
        #[arg(long)]
        grid: String,
        /// Comma-separated seeds, e.g. "1,2,3".
        #[arg(long)]
        seeds: String,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Budget for the per-row exact optimum; over-budget rows leave the
        /// exact column empty.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
}

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Print to stdout, ignoring write failures (a closed pipe downstream
/// must not turn a successful run into a panic).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

/// A diagnostic for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_threads(cli.threads) {
        eprintln!("linext: {}", f.message);
        return ExitCode::from(f.code);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("linext: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), Failure> {
    let threads = match flag {
        Some(t) => Some(t),
        None => match std::env::var("LINEXT_THREADS") {
            Ok(raw) => Some(raw.parse().map_err(|_| {
                fail(EXIT_USAGE, format!("LINEXT_THREADS must be an integer, got {raw:?}"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| fail(EXIT_USAGE, format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Optimize { path, json, budget } => cmd_optimize(&path, json, budget),
        Command::Count { path, json } => cmd_count(&path, json),
        Command::Verify { suite, corpus_size, seed, json } => {
            cmd_verify(&suite, corpus_size, seed, json)
        }
        Command::Volume { path, samples, seed, json } => cmd_volume(&path, samples, seed, json),
        Command::Entropy { path, tol, json } => cmd_entropy(&path, tol, json),
        Command::Experiment { grid, seeds, out, budget } => {
            cmd_experiment(&grid, &seeds, out.as_deref(), budget)
        }
    }
}

fn load_graph(path: &std::path::Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn orientation_json(o: &AcyclicOrientation) -> serde_json::Value {
    json!(o.to_directed_pairs())
}

fn orientation_text(o: &AcyclicOrientation) -> String {
    o.to_directed_pairs().iter().map(|[t, h]| format!("{t}->{h}")).collect::<Vec<_>>().join(" ")
}

fn cmd_optimize(path: &std::path::Path, json: bool, budget: u64) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let report = epsilon_with_budget(&g, budget).map_err(|e| match e {
        OptError::BudgetExceeded { .. } => fail(EXIT_BUDGET, e.to_string()),
        other => fail(EXIT_BUDGET, other.to_string()),
    })?;

    // Companion bounds; the vertex-deletion bound needs a connected graph
    // on at least two vertices.
    let (coloring_product, coloring_closed) =
        coloring_lower_bound(&g).map_err(|e| fail(EXIT_BUDGET, e.to_string()))?;
    let cut = if g.vertex_count() >= 2 && g.is_connected() {
        Some(cut_upper_bound(&g).map_err(|e| fail(EXIT_BUDGET, e.to_string()))?)
    } else {
        None
    };
    let (complement, complement_tight) =
        complement_upper_bound(&g).map_err(|e| fail(EXIT_BUDGET, e.to_string()))?;

    if json {
        let doc = json!({
            "epsilon": report.epsilon.to_string(),
            "argmax_count": report.argmax.len(),
            "argmax": report.argmax.iter().map(orientation_json).collect::<Vec<_>>(),
            "bounds": {
                "coloring_product": coloring_product.to_string(),
                "coloring_closed": coloring_closed.to_string(),
                "cut": cut.as_ref().map(|c| c.to_string()),
                "complement": complement.to_string(),
                "complement_tight": complement_tight,
            },
        });
        out!("{doc}");
    } else {
        out!("epsilon: {}", report.epsilon);
        out!("orientations searched: {}", report.orientations_searched);
        out!("argmax ({} orientations):", report.argmax.len());
        for o in &report.argmax {
            out!("  {}", orientation_text(o));
        }
        out!("bounds:");
        out!("  coloring product >= {coloring_product}");
        out!("  coloring closed  >= {coloring_closed}");
        match cut {
            Some(c) => out!("  vertex deletion  <= {c}"),
            None => out!("  vertex deletion  (needs a connected graph)"),
        }
        out!(
            "  complement       <= {complement}{}",
            if complement_tight { " (tight)" } else { "" }
        );
    }
    Ok(())
}

/// Re-scan the already validated edge lines for their directed order.
fn directed_pairs(text: &str) -> Vec<[usize; 2]> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .skip(1)
        .map(|l| {
            let mut it = l.split_whitespace();
            let t: usize = it.next().unwrap().parse().unwrap();
            let h: usize = it.next().unwrap().parse().unwrap();
            [t, h]
        })
        .collect()
}

fn cmd_count(path: &std::path::Path, json: bool) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let g = parse_graph(&text).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let o = AcyclicOrientation::from_directed_pairs(&g, &directed_pairs(&text))
        .map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let count = Poset::from_orientation(&o)
        .count_linear_extensions()
        .map_err(|e| fail(EXIT_BUDGET, e.to_string()))?;
    if json {
        out!("{}", json!({ "extensions": count.to_string(), "vertices": g.vertex_count() }));
    } else {
        out!("{count}");
    }
    Ok(())
}

fn cmd_verify(
    suite: &str,
    corpus_size: Option<usize>,
    seed: u64,
    json: bool,
) -> Result<(), Failure> {
    let report = run_suite(suite, corpus_size, seed)
        .ok_or_else(|| fail(EXIT_USAGE, format!("unknown suite {suite:?}")))?;
    if json {
        let doc = json!({
            "suite": report.suite,
            "passed": report.passed(),
            "checks": report.checks.iter().map(|c| json!({
                "label": c.label,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        });
        out!("{doc}");
    } else {
        out_raw!("{}", report.render());
    }
    if report.passed() {
        Ok(())
    } else {
        Err(fail(EXIT_VERIFY, String::new()))
    }
}

fn cmd_volume(path: &std::path::Path, samples: u64, seed: u64, json: bool) -> Result<(), Failure> {
    let g = load_graph(path)?;
    if g.vertex_count() > EXACT_LIMIT {
        return Err(fail(
            EXIT_USAGE,
            format!("membership tests need at most {EXACT_LIMIT} vertices"),
        ));
    }
    if samples < 10_000 {
        return Err(fail(EXIT_USAGE, "need at least 10000 samples"));
    }
    let est = mc_volume(|x| in_stable_polytope(&g, x), g.vertex_count(), samples, seed);
    if json {
        out!(
            "{}",
            json!({
                "estimate": est.estimate,
                "std_error": est.std_error,
                "samples": est.samples,
                "seed": est.seed,
            })
        );
    } else {
        out!(
            "volume {:.6} +- {:.6} ({} samples, seed {})",
            est.estimate,
            est.std_error,
            est.samples,
            est.seed
        );
    }
    Ok(())
}

fn cmd_entropy(path: &std::path::Path, tol: f64, json: bool) -> Result<(), Failure> {
    let g = load_graph(path)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(fail(EXIT_USAGE, "tolerance must be positive"));
    }
    let r = graph_entropy(&g, tol).map_err(|e| match e {
        EntropyError::DidNotConverge { .. } => fail(EXIT_BUDGET, e.to_string()),
        other => fail(EXIT_USAGE, other.to_string()),
    })?;
    if json {
        out!(
            "{}",
            json!({
                "H_bits": r.h_bits,
                "gap": r.duality_gap,
                "minimizer": r.minimizer,
            })
        );
    } else {
        out!("H {:.6} bits (gap {:.2e}, {} iterations)", r.h_bits, r.duality_gap, r.iterations);
        out!(
            "minimizer: [{}]",
            r.minimizer.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>().join(", ")
        );
    }
    Ok(())
}

fn parse_grid(spec: &str) -> Result<Vec<(usize, f64)>, Failure> {
    let mut grid = Vec::new();
    for part in spec.split(',') {
        let Some((n, p)) = part.split_once(':') else {
            return Err(fail(EXIT_USAGE, format!("grid entry {part:?} is not n:p")));
        };
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| fail(EXIT_USAGE, format!("grid entry {part:?}: bad vertex count")))?;
        let p: f64 = p
            .trim()
            .parse()
            .map_err(|_| fail(EXIT_USAGE, format!("grid entry {part:?}: bad probability")))?;
        grid.push((n, p));
    }
    if grid.is_empty() {
        return Err(fail(EXIT_USAGE, "empty grid"));
    }
    Ok(grid)
}

fn parse_seeds(spec: &str) -> Result<Vec<u64>, Failure> {
    let seeds: Result<Vec<u64>, _> = spec.split(',').map(|s| s.trim().parse()).collect();
    let seeds = seeds.map_err(|_| fail(EXIT_USAGE, format!("bad seed list {spec:?}")))?;
    if seeds.is_empty() {
        return Err(fail(EXIT_USAGE, "empty seed list"));
    }
    Ok(seeds)
}

fn cmd_experiment(
    grid: &str,
    seeds: &str,
    out: Option<&std::path::Path>,
    budget: u64,
) -> Result<(), Failure> {
    let grid = parse_grid(grid)?;
    let seeds = parse_seeds(seeds)?;
    let rows = linext::experiments::run_experiment(&grid, &seeds, budget)
        .map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    let csv = linext::experiments::rows_to_csv(&rows);
    match out {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?,
        None => out_raw!("{csv}"),
    }
    Ok(())
}
