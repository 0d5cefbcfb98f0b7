//! `unavoid`: command-line driver for the unavoidable-set search.
//!
//! Exit status: 0 unavoidable, 1 counterexample, 2 undecided, 64 usage
//! error, 65 bad input data, 70 internal failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use unavoidable::class::GraphClass;
use unavoidable::containment::{Mode, PatternSet};
use unavoidable::decomposition::{make_hdf, pathwidth_exact, DecompositionJson, PathDecomposition};
use unavoidable::graph::{decode_graph6, encode_graph6, LabeledGraph};
use unavoidable::named;
use unavoidable::search::{
    run_search, run_search_base, Algorithm, Checkpoint, ConfigEcho, Search, SearchConfig, SearchError,
    SearchStats, Verdict,
};

const CHECKPOINT_ENV: &str = "UNAVOID_CHECKPOINT_DIR";
const CHECKPOINT_FILE: &str = "checkpoint.json";

#[derive(Parser)]
#[command(
    name = "unavoid",
    version,
    about = "Decide unavoidable pattern sets for graph classes of bounded path-width"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the search for one pattern set.
    Check(CheckArgs),
    /// Exact path-width of each graph in a graph6 file.
    Pathwidth(PathwidthArgs),
    /// Turn an optimal decomposition of each graph into a high-degree-first one.
    Hdf(HdfArgs),
    /// Compare the base and optimized searches on small configurations.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Base,
    Optimized,
}

#[derive(Args)]
struct CheckArgs {
    /// Path-width bound.
    #[arg(long)]
    k: usize,
    /// Cycle patterns: `a-b` for C_a..C_b, or `a` for C_a alone. Repeatable.
    #[arg(long, value_name = "A-B")]
    cycles: Vec<String>,
    /// File with one graph6 pattern per line. Repeatable.
    #[arg(long, value_name = "FILE")]
    patterns: Vec<PathBuf>,
    #[arg(long, default_value = "subgraph", value_parser = parse_mode)]
    mode: Mode,
    /// `cubic` or `cubic-girth-ge:<g>`.
    #[arg(long, default_value = "cubic")]
    class: String,
    /// Largest graph order to explore [default: 2(k + 1)].
    #[arg(long)]
    max_order: Option<usize>,
    /// Also write the machine-readable report to this file.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value = "optimized")]
    algorithm: AlgorithmArg,
    /// Consider every orbit of leaving vertices instead of the high-degree-first choice.
    #[arg(long)]
    no_hdf: bool,
    /// Continue from a checkpoint written by an earlier run with the same flags.
    #[arg(long, value_name = "FILE")]
    resume: Option<PathBuf>,
    /// No per-phase progress on stderr.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct PathwidthArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Print an optimal smooth decomposition as JSON after each width.
    #[arg(long)]
    decomposition: bool,
}

#[derive(Args)]
struct HdfArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
struct SelftestArgs {
    /// Largest order budget in the grid.
    #[arg(long, default_value_t = 10)]
    max_order: usize,
}

enum Failure {
    Usage(String),
    Data(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Data(_) => 65,
            Failure::Internal(_) => 70,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::InvalidConfig(_) => Failure::Usage(e.to_string()),
            SearchError::Checkpoint(_) => Failure::Data(e.to_string()),
            SearchError::GroupTooLarge { .. } => Failure::Internal(e.to_string()),
        }
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    let res = match cli.command {
        Command::Check(a) => check(a),
        Command::Pathwidth(a) => pathwidth(a),
        Command::Hdf(a) => hdf(a),
        Command::Selftest(a) => selftest(a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("unavoid: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

/// Graphs of a graph6 file, one per non-empty line; an optional `>>graph6<<` header is skipped.
fn read_graphs(path: &Path) -> Result<Vec<LabeledGraph>, Failure> {
    let text = read(path)?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g =
            decode_graph6(line).map_err(|e| Failure::Data(format!("{}:{}: {e}", path.display(), i + 1)))?;
        out.push(g);
    }
    Ok(out)
}

fn parse_cycles(spec: &str) -> Result<(usize, usize), Failure> {
    let bad = || {
        Failure::Data(format!(
            "bad cycle range {spec:?} (expected a-b or a, with 3 <= a <= b)"
        ))
    };
    let (a, b) = match spec.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let a = spec.trim().parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if a < 3 || b < a || b > unavoidable::graph::MAX_ORDER {
        return Err(bad());
    }
    Ok((a, b))
}

fn load_patterns(a: &CheckArgs) -> Result<PatternSet, Failure> {
    let mut patterns = Vec::new();
    for spec in &a.cycles {
        let (lo, hi) = parse_cycles(spec)?;
        patterns.extend((lo..=hi).map(named::cycle));
    }
    for path in &a.patterns {
        patterns.extend(read_graphs(path)?);
    }
    Ok(PatternSet::new(patterns, a.mode))
}

fn build_config(a: &CheckArgs) -> Result<SearchConfig, Failure> {
    let class = GraphClass::parse(&a.class).map_err(Failure::Usage)?;
    let mut cfg = SearchConfig::new(a.k, load_patterns(a)?, class)
        .with_workers(a.workers)
        .with_hdf_shortcut(!a.no_hdf)
        .with_algorithm(match a.algorithm {
            AlgorithmArg::Base => Algorithm::Base,
            AlgorithmArg::Optimized => Algorithm::Optimized,
        });
    if let Some(n) = a.max_order {
        cfg = cfg.with_max_order(n);
    }
    cfg.validate()?;
    Ok(cfg)
}

#[derive(Serialize)]
struct Adjacency {
    vertex: String,
    neighbours: Vec<String>,
}

#[derive(Serialize)]
struct CounterexampleReport {
    graph6: String,
    order: usize,
    size: usize,
    phase: i64,
    adjacency: Vec<Adjacency>,
}

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    version: &'static str,
    config: ConfigEcho,
    workers: usize,
    verdict: &'static str,
    counterexample: Option<CounterexampleReport>,
    /// Budget reached, for undecided runs.
    max_order: Option<usize>,
    stats: SearchStats,
    duration_seconds: f64,
}

fn report(cfg: &SearchConfig, verdict: &Verdict, stats: SearchStats, secs: f64) -> RunReport {
    let counterexample = match verdict {
        Verdict::Counterexample { graph, phase } => Some(CounterexampleReport {
            graph6: encode_graph6(graph),
            order: graph.order(),
            size: graph.size(),
            phase: *phase,
            adjacency: graph
                .adjacency_list()
                .into_iter()
                .map(|(vertex, neighbours)| Adjacency { vertex, neighbours })
                .collect(),
        }),
        _ => None,
    };
    RunReport {
        schema: 1,
        version: env!("CARGO_PKG_VERSION"),
        config: ConfigEcho::of(cfg),
        workers: cfg.workers,
        verdict: verdict.name(),
        counterexample,
        max_order: match verdict {
            Verdict::Undecided { max_order } => Some(*max_order),
            _ => None,
        },
        stats,
        duration_seconds: secs,
    }
}

fn print_human(r: &RunReport) {
    println!("verdict: {}", r.verdict);
    if let Some(c) = &r.counterexample {
        println!("order: {} (phase {})", c.order, c.phase);
        println!("graph6: {}", c.graph6);
        for a in &c.adjacency {
            println!("  {}: {}", a.vertex, a.neighbours.join(" "));
        }
    }
    if let Some(n) = r.max_order {
        println!("max order: {n}");
    }
    println!("pairs expanded: {}", r.stats.pairs_expanded());
    println!("duration: {:.3}s", r.duration_seconds);
}

fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn check(a: CheckArgs) -> Result<u8, Failure> {
    let cfg = build_config(&a)?;
    let mut search = match &a.resume {
        Some(path) => {
            let cp = Checkpoint::from_json(&read(path)?)
                .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
            Search::from_checkpoint(cfg.clone(), &cp)?
        }
        None => Search::new(cfg.clone())?,
    };
    let checkpoint_dir = std::env::var_os(CHECKPOINT_ENV).map(PathBuf::from);
    if let Some(dir) = &checkpoint_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Internal(format!("{}: {e}", dir.display())))?;
    }
    let quiet = a.quiet;
    let start = Instant::now();
    let mut io_error = None;
    let outcome = search.run_with(|s| {
        if !quiet {
            if let Some(p) = s.stats().phases.last() {
                eprintln!(
                    "phase {} (order {}): frontier {}, completions {}, pruned good {} / infeasible {} / duplicate {}, next {}",
                    p.phase, p.order, p.frontier, p.completions_tested, p.pruned_good, p.pruned_infeasible, p.pruned_duplicate, p.enqueued
                );
            }
        }
        if let (Some(dir), Some(cp)) = (&checkpoint_dir, s.checkpoint()) {
            if let Err(e) = write_atomic(&dir.join(CHECKPOINT_FILE), &cp.to_json()) {
                io_error.get_or_insert(e);
            }
        }
        Ok(())
    })?;
    if let Some(e) = io_error {
        return Err(e);
    }
    let r = report(
        &cfg,
        &outcome.verdict,
        outcome.stats,
        start.elapsed().as_secs_f64(),
    );
    print_human(&r);
    if let Some(path) = &a.json {
        let text = serde_json::to_string_pretty(&r).expect("serialisable");
        fs::write(path, text + "\n").map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
    }
    Ok(match outcome.verdict {
        Verdict::Unavoidable => 0,
        Verdict::Counterexample { .. } => 1,
        Verdict::Undecided { .. } => 2,
    })
}

fn optimal(g: &LabeledGraph) -> Result<(usize, PathDecomposition), Failure> {
    pathwidth_exact(g).map_err(|e| Failure::Data(e.to_string()))
}

fn decomposition_json(g: &LabeledGraph, d: &PathDecomposition) -> String {
    let j: DecompositionJson = d.to_json(g);
    serde_json::to_string(&j).expect("serialisable")
}

fn pathwidth(a: PathwidthArgs) -> Result<u8, Failure> {
    for g in read_graphs(&a.input)? {
        let (w, d) = optimal(&g)?;
        println!("{w}");
        if a.decomposition {
            println!("{}", decomposition_json(&g, &d));
        }
    }
    Ok(0)
}

fn hdf(a: HdfArgs) -> Result<u8, Failure> {
    for g in read_graphs(&a.input)? {
        let (_, d) = optimal(&g)?;
        let h = make_hdf(&g, &d).map_err(|e| Failure::Data(e.to_string()))?;
        println!("{}", decomposition_json(&g, &h));
    }
    Ok(0)
}

fn selftest(a: SelftestArgs) -> Result<u8, Failure> {
    let sets = [
        ("{}", PatternSet::empty(Mode::Subgraph)),
        ("{C3}", PatternSet::cycles(3, 3)),
        ("{C3,C4}", PatternSet::cycles(3, 4)),
    ];
    let mut failures = 0;
    for k in [3, 4] {
        for (name, ps) in &sets {
            for budget in k + 1..=a.max_order {
                let cfg = SearchConfig::new(k, ps.clone(), GraphClass::cubic()).with_max_order(budget);
                let opt = run_search(cfg.clone())?.verdict;
                let base = run_search_base(cfg.clone())?.verdict;
                let no_hdf = run_search(cfg.with_hdf_shortcut(false))?.verdict;
                let ok = agree(&opt, &base) && agree(&opt, &no_hdf);
                if !ok {
                    failures += 1;
                }
                println!(
                    "{} k={k} {name} max-order={budget}: {}",
                    if ok { "PASS" } else { "FAIL" },
                    opt.name()
                );
            }
        }
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

fn agree(a: &Verdict, b: &Verdict) -> bool {
    match (a, b) {
        (Verdict::Counterexample { graph: g, phase: p }, Verdict::Counterexample { graph: h, phase: q }) => {
            p == q && unavoidable::symmetry::is_isomorphic(g, h)
        }
        _ => a == b,
    }
}
