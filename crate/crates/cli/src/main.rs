//! `indpoly`: independence polynomials and W_p classes from the command line.
//!
//! Exit codes: 0 success (or every check true, or no violations), 1 some
//! check false, 2 operational error, 3 violations found.

mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use indpoly::census::{self, Filter};
use indpoly::expr::parse_expr;
use indpoly::inequalities::{is_log_concave, is_unimodal};
use indpoly::verify::{self, OrderOptions, RunOptions, VerifyReport};
use indpoly::{Analyzer, Graph, Rational};
use rayon::prelude::*;
use serde_json::json;

use input::Format;

const OK: u8 = 0;
const SOME_FALSE: u8 = 1;
const FAILURE: u8 = 2;
const FINDINGS: u8 = 3;

#[derive(Parser)]
#[command(name = "indpoly", version, about = "Independence polynomials, well-covered graphs and W_p classes")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Input file; standard input when absent.
    #[arg(short, long, global = true, conflicts_with = "expr")]
    input: Option<PathBuf>,
    /// A single construction expression as the input.
    #[arg(short, long, global = true)]
    expr: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "graph6")]
    format: Format,
    /// Worker threads for stream commands.
    #[arg(long, global = true, env = "INDPOLY_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Per-graph time budget in milliseconds.
    #[arg(long, global = true, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: u64,
    /// Output file; standard output when absent.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// JSON output instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Independence polynomial of each input graph.
    Poly,
    /// Decide a property for each graph: wellcovered, 1wc, wp(P),
    /// quasireg(NUM/DEN), logconcave, unimodal.
    Check { property: String },
    /// Full per-graph report as JSON lines.
    Classify,
    /// Run a statement harness over the input stream.
    Verify(VerifyArgs),
    /// Search the connected W_2 graphs of the stream for graphs where
    /// 2-quasi-regularizability and n >= 3*alpha disagree.
    Hunt {
        /// Per-graph JSON lines.
        #[arg(long)]
        detail: Option<PathBuf>,
    },
    /// Emit all graphs of the given orders up to isomorphism, as graph6.
    Gen {
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: GenFilter,
    },
    /// Build a construction expression and print its graph6.
    Construct { expression: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFilter {
    All,
    Connected,
    IsolateFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Statement {
    Mthm,
    Components,
    Th4,
    Log2,
    Coeffs,
    Vwc,
    Corona,
    Example,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    statement: Statement,
    /// Comma-separated p values (mthm, log2).
    #[arg(long, value_delimiter = ',', default_value = "1,3,4")]
    p: Vec<usize>,
    /// Largest p (coeffs, corona).
    #[arg(long, default_value_t = 3)]
    p_max: usize,
    /// Run mthm with p = 2 in the set.
    #[arg(long)]
    allow_p2: bool,
    /// Do not skip disconnected graphs in mthm.
    #[arg(long)]
    include_disconnected: bool,
    /// Clique count m (example).
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Part count n (example).
    #[arg(long, default_value_t = 24)]
    n: usize,
    /// Per-graph JSON lines.
    #[arg(long)]
    detail: Option<PathBuf>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("indpoly: {msg}");
            ExitCode::from(FAILURE)
        }
    }
}

fn execute(cli: &Cli) -> Result<u8, Failure> {
    let cfg = &cli.run;
    match &cli.command {
        Command::Gen { min_n, max_n, filter } => {
            let filter = match filter {
                GenFilter::All => Filter::All,
                GenFilter::Connected => Filter::Connected,
                GenFilter::IsolateFree => Filter::IsolateFree,
            };
            let gs = census::graphs_in_range(min_n.unwrap_or(*max_n), *max_n, filter)?;
            let lines: Vec<String> = gs.iter().map(Graph::to_graph6).collect();
            emit(cfg, &lines)?;
            Ok(OK)
        }
        Command::Construct { expression } => {
            let g = parse_expr(expression)?;
            let line = if cfg.json {
                json!({
                    "graph6": g.to_graph6(),
                    "n": g.n(),
                    "m": g.m(),
                    "edges": g.edges().collect::<Vec<_>>(),
                    "labels": g.labels(),
                })
                .to_string()
            } else {
                g.to_graph6()
            };
            emit(cfg, &[line])?;
            Ok(OK)
        }
        Command::Verify(args) if matches!(args.statement, Statement::Example) => {
            let report = verify::verify_lexicographic_example(args.m, args.n)?;
            finish_report(cfg, &report, None)
        }
        _ => {
            let records = read_records(cfg)?;
            match &cli.command {
                Command::Classify => classify(cfg, records),
                Command::Poly => poly(cfg, input::graphs(records)?),
                Command::Check { property } => check(cfg, property, input::graphs(records)?),
                Command::Verify(args) => run_statement(cfg, args, input::graphs(records)?),
                Command::Hunt { detail } => hunt(cfg, input::graphs(records)?, detail.as_ref()),
                Command::Gen { .. } | Command::Construct { .. } => unreachable!("handled above"),
            }
        }
    }
}

fn read_records(cfg: &RunConfig) -> Result<Vec<input::Record>, Failure> {
    if let Some(e) = &cfg.expr {
        return Ok(vec![input::Record { line: 1, graph: parse_expr(e).map_err(|e| e.to_string()) }]);
    }
    let text = input::read_text(cfg.input.as_deref())?;
    Ok(input::records(&text, cfg.format)?)
}

fn writer(cfg: &RunConfig) -> Result<Box<dyn Write>, Failure> {
    Ok(match &cfg.output {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| format!("{}: {e}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(cfg: &RunConfig, lines: &[String]) -> Result<(), Failure> {
    let mut w = writer(cfg)?;
    for l in lines {
        writeln!(w, "{l}")?;
    }
    w.flush()?;
    Ok(())
}

fn pool(cfg: &RunConfig) -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        b = b.num_threads(w as usize);
    }
    Ok(b.build()?)
}

fn analyzer(cfg: &RunConfig, g: &Graph) -> Analyzer {
    Analyzer::with_deadline(g, Instant::now() + Duration::from_millis(cfg.budget_ms))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn poly(cfg: &RunConfig, graphs: Vec<Graph>) -> Result<u8, Failure> {
    let rows: Vec<Result<String, String>> = pool(cfg)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let mut a = analyzer(cfg, g);
                let p = a.polynomial().map_err(|e| format!("{}: {e}", g.to_graph6()))?;
                let (lc, um) = (is_log_concave(&p), is_unimodal(&p));
                Ok(if cfg.json {
                    json!({"graph6": g.to_graph6(), "n": g.n(), "poly": p.to_string(), "alpha": p.degree(),
                           "log_concave": lc, "unimodal": um})
                    .to_string()
                } else {
                    format!("{} {p} alpha={} lc={} um={}", g.to_graph6(), p.degree(), yes(lc), yes(um))
                })
            })
            .collect()
    });
    let lines = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    emit(cfg, &lines)?;
    Ok(OK)
}

enum Property {
    WellCovered,
    OneWellCovered,
    Wp(usize),
    QuasiReg(Rational),
    LogConcave,
    Unimodal,
}

fn parse_property(s: &str) -> Result<Property, Failure> {
    let s = s.trim();
    let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    Ok(match s {
        "wellcovered" => Property::WellCovered,
        "1wc" => Property::OneWellCovered,
        "logconcave" => Property::LogConcave,
        "unimodal" => Property::Unimodal,
        _ => {
            if let Some(p) = inner("wp(") {
                Property::Wp(p.trim().parse().map_err(|_| format!("bad p in '{s}'"))?)
            } else if let Some(l) = inner("quasireg(") {
                Property::QuasiReg(l.trim().parse().map_err(|e| format!("bad lambda in '{s}': {e}"))?)
            } else {
                return Err(Failure(format!(
                    "unknown property '{s}' (wellcovered, 1wc, wp(P), quasireg(NUM/DEN), logconcave, unimodal)"
                )));
            }
        }
    })
}

fn check(cfg: &RunConfig, property: &str, graphs: Vec<Graph>) -> Result<u8, Failure> {
    let prop = parse_property(property)?;
    let verdicts: Vec<Result<bool, String>> = pool(cfg)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let mut a = analyzer(cfg, g);
                let v = match &prop {
                    Property::WellCovered => a.is_well_covered(),
                    Property::OneWellCovered => a.is_one_well_covered(),
                    Property::Wp(p) => a.is_wp(*p),
                    Property::QuasiReg(l) => a.is_quasi_regularizable(l),
                    Property::LogConcave => a.polynomial().map(|p| is_log_concave(&p)),
                    Property::Unimodal => a.polynomial().map(|p| is_unimodal(&p)),
                };
                v.map_err(|e| format!("{}: {e}", g.to_graph6()))
            })
            .collect()
    });
    let verdicts = verdicts.into_iter().collect::<Result<Vec<_>, _>>()?;
    let lines: Vec<String> = graphs
        .iter()
        .zip(&verdicts)
        .map(|(g, v)| {
            if cfg.json {
                json!({"graph6": g.to_graph6(), "property": property, "value": v}).to_string()
            } else {
                format!("{} {property}={v}", g.to_graph6())
            }
        })
        .collect();
    emit(cfg, &lines)?;
    Ok(if verdicts.iter().all(|&v| v) { OK } else { SOME_FALSE })
}

fn classify(cfg: &RunConfig, records: Vec<input::Record>) -> Result<u8, Failure> {
    let lines: Vec<String> = pool(cfg)?.install(|| {
        records
            .par_iter()
            .enumerate()
            .map(|(i, r)| {
                let g = match &r.graph {
                    Ok(g) => g,
                    Err(e) => return json!({"index": i, "line": r.line, "error": e}).to_string(),
                };
                match analyzer(cfg, g).classify() {
                    Ok(rep) => {
                        let mut v = serde_json::to_value(&rep).expect("report serializes");
                        let obj = v.as_object_mut().expect("object");
                        obj.insert("index".into(), json!(i));
                        obj.insert("graph6".into(), json!(g.to_graph6()));
                        obj.insert("n".into(), json!(g.n()));
                        v.to_string()
                    }
                    Err(e) => json!({"index": i, "line": r.line, "graph6": g.to_graph6(), "error": e.to_string()}).to_string(),
                }
            })
            .collect()
    });
    emit(cfg, &lines)?;
    Ok(OK)
}

fn run_options(cfg: &RunConfig, detail: bool) -> RunOptions {
    RunOptions {
        workers: cfg.workers.map(|w| w as usize),
        budget: Some(Duration::from_millis(cfg.budget_ms)),
        detail,
    }
}

fn run_statement(cfg: &RunConfig, args: &VerifyArgs, graphs: Vec<Graph>) -> Result<u8, Failure> {
    let opts = run_options(cfg, args.detail.is_some());
    let report = match args.statement {
        Statement::Mthm => {
            let order = OrderOptions { allow_p2: args.allow_p2, require_connected: !args.include_disconnected };
            verify::verify_quasi_regular_order(graphs, &args.p, order, &opts)?
        }
        Statement::Components => verify::verify_components_law(graphs, &opts)?,
        Statement::Th4 => verify::verify_one_well_covered_equivalence(graphs, &opts)?,
        Statement::Log2 => verify::verify_interval_log_concavity(graphs, &args.p, &opts)?,
        Statement::Coeffs => verify::verify_coefficient_bounds(graphs, args.p_max, &opts)?,
        Statement::Vwc => verify::verify_very_well_covered_lc(graphs, &opts)?,
        Statement::Corona => verify::verify_clique_corona(graphs, args.p_max, &opts)?,
        Statement::Example => unreachable!("handled without input"),
    };
    finish_report(cfg, &report, args.detail.as_ref())
}

fn hunt(cfg: &RunConfig, graphs: Vec<Graph>, detail: Option<&PathBuf>) -> Result<u8, Failure> {
    let mut report = verify::hunt_conjecture(graphs, &run_options(cfg, detail.is_some()))?;
    let mut confirmed = 0;
    for v in &report.violations {
        if verify::recheck_hunt(&Graph::from_graph6(&v.graph)?)? {
            confirmed += 1;
        }
    }
    if !report.violations.is_empty() {
        report.notes.push(format!("{confirmed} of {} violations re-verified in isolation", report.violations.len()));
    }
    finish_report(cfg, &report, detail)
}

fn finish_report(cfg: &RunConfig, report: &VerifyReport, detail: Option<&PathBuf>) -> Result<u8, Failure> {
    if let Some(path) = detail {
        let mut w = BufWriter::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?);
        for row in &report.details {
            writeln!(w, "{}", serde_json::to_string(row)?)?;
        }
        w.flush()?;
    }
    let json_text = serde_json::to_string_pretty(report)?;
    let summary = summary(report);
    match (&cfg.output, cfg.json) {
        (Some(_), _) => {
            emit(cfg, &[json_text])?;
            println!("{summary}");
        }
        (None, true) => emit(cfg, &[json_text])?,
        (None, false) => emit(cfg, &[summary])?,
    }
    Ok(if report.is_clean() { OK } else { FINDINGS })
}

fn summary(r: &VerifyReport) -> String {
    let mut s = format!(
        "{}: scanned={} hypothesis={} violations={} budget_exceeded={} errors={} elapsed_ms={}",
        r.statement,
        r.graphs_scanned,
        r.hypothesis_satisfied,
        r.violations.len(),
        r.budget_exceeded.len(),
        r.errors.len(),
        r.elapsed_ms
    );
    for (k, v) in &r.counters {
        s.push_str(&format!("\n  {k}={v}"));
    }
    for n in &r.notes {
        s.push_str(&format!("\n  {n}"));
    }
    for v in r.violations.iter().take(20) {
        s.push_str(&format!("\n  violation {}: {}", v.graph, v.detail));
    }
    s
}
