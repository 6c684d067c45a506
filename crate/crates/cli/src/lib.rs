//! Command-line front end: argument parsing, verb dispatch and report
//! rendering. [`run`] is the whole program minus process setup, so tests can
//! drive it with in-memory streams.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use alphak::bounds::{bound_report_with, format_ratio, BoundReport, Direction};
use alphak::coloring::{chi_k_exact, chi_k_greedy, ColoringResult};
use alphak::constructions::{verify_construction, Certificate, FamilyParams, Status};
use alphak::io::{parse_edge_list, parse_graph6, parse_graph_auto, to_dot, write_edge_list, write_graph6};
use alphak::power::{alpha_k_bruteforce, alpha_k_exact_with, alpha_k_greedy, graph_power, SolveResult, SolverOptions};
use alphak::{random_connected_graph, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

mod batch;

pub use batch::{parse_grid, BatchEntry, BatchReport, BatchSummary, GridLine};

/// Bumped on any change to the JSON report layout.
pub const SCHEMA_VERSION: &str = "1.0.0";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SOLVER_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "alphak", version, about = "k-independence numbers: solve, bound, color, construct and certify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Compute α_k.
    Solve(SolveArgs),
    /// Emit the power graph G^k.
    Power(PowerArgs),
    /// Evaluate every bound on α_k and χ_k.
    Bounds(BoundsArgs),
    /// Compute χ_k, the chromatic number of G^k.
    Chroma(ChromaArgs),
    /// Generate a family instance and certify its claimed profile.
    Verify(VerifyArgs),
    /// Verify every family instance listed in a key=value grid file.
    Batch(BatchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Graph6,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Exact,
    BruteForce,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorMethod {
    Exact,
    Greedy,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Read the graph from a file instead of stdin.
    #[arg(long, conflicts_with = "graph6")]
    pub input: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// join_chain, comb, subdivided_comb, star, subdivided_star, g1, g4, g5
    /// (gen also accepts random).
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, visible_alias = "ell")]
    pub l: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub spine: Option<usize>,
    #[arg(long)]
    pub legs: Option<usize>,
    /// Comma-separated inner block sizes of a join chain.
    #[arg(long)]
    pub sizes: Option<String>,
}

impl FamilyArgs {
    fn params(&self) -> alphak::Result<FamilyParams> {
        let mut pairs = BTreeMap::new();
        pairs.insert("family".to_string(), self.family.clone());
        let numeric = [("r", self.r), ("l", self.l), ("t", self.t), ("n", self.n), ("k", self.k), ("spine", self.spine), ("legs", self.legs)];
        for (key, value) in numeric {
            if let Some(v) = value {
                pairs.insert(key.to_string(), v.to_string());
            }
        }
        if let Some(s) = &self.sizes {
            pairs.insert("sizes".to_string(), s.clone());
        }
        FamilyParams::from_pairs(&pairs)
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Edge probability for the random family.
    #[arg(long)]
    pub p: Option<f64>,
    /// Seed for the random family (required there).
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = SolveMethod::Exact)]
    pub method: SolveMethod,
    /// Abort the exact search after this many nodes (exit 3).
    #[arg(long)]
    pub node_limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
    /// Skip the exact α_k solve and the tightness list.
    #[arg(long)]
    pub no_exact: bool,
    #[arg(long)]
    pub node_limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ChromaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = ColorMethod::Exact)]
    pub method: ColorMethod,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub node_limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Grid file: one `key=value …` family instance per line, `#` comments.
    pub grid: PathBuf,
    #[arg(long)]
    pub node_limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Serialize)]
struct Report<'a, P: Serialize> {
    schema_version: &'static str,
    command: CommandEcho<'a>,
    payload: P,
    timing_ms: f64,
}

#[derive(Debug, Serialize)]
struct CommandEcho<'a> {
    verb: &'static str,
    argv: &'a [String],
}

#[derive(Debug, Serialize)]
pub struct GraphPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
}

impl GraphPayload {
    fn new(g: &Graph, family: Option<Value>, k: Option<usize>) -> Self {
        GraphPayload { family, k, n: g.vertex_count(), m: g.edge_count(), graph6: write_graph6(g), edges: g.edges().collect() }
    }
}

#[derive(Debug, Serialize)]
pub struct SolvePayload {
    pub k: usize,
    pub n: usize,
    #[serde(flatten)]
    pub result: SolveResult,
}

#[derive(Debug, Serialize)]
pub struct ChromaPayload {
    pub k: usize,
    pub n: usize,
    #[serde(flatten)]
    pub result: ColoringResult,
}

/// Outcome of a verb: rendered output plus exit status.
struct Outcome {
    stdout: String,
    code: i32,
}

/// A failure that prints a message to stderr and maps to an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<alphak::Error> for Failure {
    fn from(e: alphak::Error) -> Self {
        let code = if e.is_solver_cap() { EXIT_SOLVER_CAP } else { EXIT_DOMAIN };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure { code: EXIT_DOMAIN, message: format!("{what}: {e}") }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(&cli.command, &argv, stdin) {
        Ok(outcome) => {
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return EXIT_DOMAIN;
            }
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn verb_name(command: &Command) -> &'static str {
    match command {
        Command::Gen(_) => "gen",
        Command::Solve(_) => "solve",
        Command::Power(_) => "power",
        Command::Bounds(_) => "bounds",
        Command::Chroma(_) => "chroma",
        Command::Verify(_) => "verify",
        Command::Batch(_) => "batch",
    }
}

fn json_report<P: Serialize>(verb: &'static str, argv: &[String], payload: P, started: Instant) -> String {
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command: CommandEcho { verb, argv },
        payload,
        timing_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
    s.push('\n');
    s
}

fn read_graph(input: &InputArgs, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let text = match (&input.graph6, &input.input) {
        (Some(g6), _) => g6.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| io_failure(&format!("reading {}", path.display()), e))?,
        (None, None) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| io_failure("reading stdin", e))?;
            s
        }
    };
    let graph = match input.input_format {
        InputFormat::Auto => parse_graph_auto(&text),
        InputFormat::Graph6 => parse_graph6(text.trim()),
        InputFormat::Edgelist => parse_edge_list(&text),
    };
    Ok(graph?)
}

fn reject_format(verb: &str, format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
        Err(usage(format!("{verb} supports --format {}", names.join(", "))))
    }
}

fn options(node_limit: Option<u64>) -> SolverOptions {
    SolverOptions { node_limit }
}

fn render_graph(g: &Graph, format: Format, payload: impl FnOnce() -> GraphPayload, verb: &'static str, argv: &[String], started: Instant) -> String {
    match format {
        Format::Graph6 => format!("{}\n", write_graph6(g)),
        Format::Dot => to_dot(g, None),
        Format::Text => write_edge_list(g),
        Format::Json => json_report(verb, argv, payload(), started),
    }
}

fn dispatch(command: &Command, argv: &[String], stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    let started = Instant::now();
    let verb = verb_name(command);
    let ok = |stdout: String| Outcome { stdout, code: EXIT_OK };
    match command {
        Command::Gen(a) => {
            if a.family.family.eq_ignore_ascii_case("random") {
                let seed = a.seed.ok_or_else(|| usage("gen --family random requires --seed"))?;
                let n = a.family.n.ok_or_else(|| usage("gen --family random requires --n"))?;
                let p = a.p.ok_or_else(|| usage("gen --family random requires --p"))?;
                let g = random_connected_graph(n, p, seed)?;
                let family = serde_json::json!({"family": "random", "n": n, "p": p, "seed": seed});
                return Ok(ok(render_graph(&g, a.format, || GraphPayload::new(&g, Some(family), None), verb, argv, started)));
            }
            if a.p.is_some() || a.seed.is_some() {
                return Err(usage("--p and --seed apply only to --family random"));
            }
            let params = a.family.params()?;
            let g = params.build()?;
            let family = serde_json::to_value(&params).expect("params serialize");
            Ok(ok(render_graph(&g, a.format, || GraphPayload::new(&g, Some(family), None), verb, argv, started)))
        }
        Command::Solve(a) => {
            reject_format(verb, a.format, &[Format::Json, Format::Text])?;
            if a.node_limit.is_some() && a.method != SolveMethod::Exact {
                return Err(usage("--node-limit applies only to --method exact"));
            }
            let g = read_graph(&a.input, stdin)?;
            let result = match a.method {
                SolveMethod::Exact => alpha_k_exact_with(&g, a.k, &options(a.node_limit))?,
                SolveMethod::BruteForce => alpha_k_bruteforce(&g, a.k)?,
                SolveMethod::Greedy => alpha_k_greedy(&g, a.k)?,
            };
            let payload = SolvePayload { k: a.k, n: g.vertex_count(), result };
            Ok(ok(match a.format {
                Format::Text => solve_text(&payload),
                _ => json_report(verb, argv, payload, started),
            }))
        }
        Command::Power(a) => {
            let g = read_graph(&a.input, stdin)?;
            let p = graph_power(&g, a.k)?;
            Ok(ok(render_graph(&p, a.format, || GraphPayload::new(&p, None, Some(a.k)), verb, argv, started)))
        }
        Command::Bounds(a) => {
            reject_format(verb, a.format, &[Format::Json, Format::Text])?;
            let g = read_graph(&a.input, stdin)?;
            let report = bound_report_with(&g, a.k, !a.no_exact, &options(a.node_limit))?;
            Ok(ok(match a.format {
                Format::Text => bounds_text(&report),
                _ => json_report(verb, argv, report, started),
            }))
        }
        Command::Chroma(a) => {
            reject_format(verb, a.format, &[Format::Json, Format::Text])?;
            let g = read_graph(&a.input, stdin)?;
            let result = match a.method {
                ColorMethod::Exact => chi_k_exact(&g, a.k)?,
                ColorMethod::Greedy => chi_k_greedy(&g, a.k)?,
            };
            let payload = ChromaPayload { k: a.k, n: g.vertex_count(), result };
            Ok(ok(match a.format {
                Format::Text => chroma_text(&payload),
                _ => json_report(verb, argv, payload, started),
            }))
        }
        Command::Verify(a) => {
            reject_format(verb, a.format, &[Format::Json, Format::Text])?;
            let params = a.family.params()?;
            let g = params.build()?;
            let cert = verify_construction(&g, &params, &options(a.node_limit))?;
            let code = status_code(cert.status);
            let stdout = match a.format {
                Format::Text => certificate_text(&cert),
                _ => json_report(verb, argv, &cert, started),
            };
            Ok(Outcome { stdout, code })
        }
        Command::Batch(a) => {
            reject_format(verb, a.format, &[Format::Json, Format::Text])?;
            let text = std::fs::read_to_string(&a.grid).map_err(|e| io_failure(&format!("reading {}", a.grid.display()), e))?;
            let report = batch::run_batch(&text, &options(a.node_limit));
            let code = report.exit_code();
            let stdout = match a.format {
                Format::Text => report.to_text(),
                _ => json_report(verb, argv, &report, started),
            };
            Ok(Outcome { stdout, code })
        }
    }
}

pub fn status_code(status: Status) -> i32 {
    match status {
        Status::Passed => EXIT_OK,
        Status::Failed => EXIT_DOMAIN,
        Status::Indeterminate => EXIT_SOLVER_CAP,
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn solve_text(p: &SolvePayload) -> String {
    let method = serde_json::to_value(p.result.method).unwrap();
    format!(
        "alpha_{k} = {a}  (n = {n}, method {m})\nwitness: {w}\nnodes explored: {nodes}\n",
        k = p.k,
        a = p.result.alpha,
        n = p.n,
        m = method.as_str().unwrap_or("?"),
        w = join(&p.result.witness),
        nodes = p.result.nodes_explored
    )
}

fn chroma_text(p: &ChromaPayload) -> String {
    let kind = if p.result.exact { "exact" } else { "greedy upper bound" };
    format!("chi_{} = {}  (n = {}, {kind})\ncolors: {}\n", p.k, p.result.num_colors, p.n, join(&p.result.assignment))
}

/// Aligned table of every bound with an applicability marker.
pub fn bounds_text(r: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n = {}, k = {}, min degree = {}, max degree = {}, diameter = {}, chi_k = {}{}",
        r.n,
        r.k,
        r.min_degree,
        r.max_degree,
        r.diameter,
        r.chi.num_colors,
        if r.chi.exact { "" } else { " (greedy)" }
    );
    if let Some(alpha) = r.exact_alpha {
        let _ = writeln!(out, "exact alpha_k = {alpha}");
    }
    let rows: Vec<[String; 7]> = r
        .bounds
        .iter()
        .map(|b| {
            let id = b.case_id.as_str().to_string();
            let q = serde_json::to_value(b.quantity).unwrap().as_str().unwrap().to_string();
            let dir = if b.direction == Direction::Upper { "<=" } else { ">=" };
            let tight = r.tight.as_ref().is_some_and(|t| t.contains(&b.case_id));
            let mark = match (b.applicable, tight) {
                (true, true) => "[tight]",
                (true, false) => "[ok]",
                (false, _) => "[n/a]",
            };
            let note = if b.applicable { b.subcase.unwrap_or("").to_string() } else { b.violated.join("; ") };
            [id, q, dir.to_string(), format_ratio(&b.value), b.floor_value.to_string(), mark.to_string(), note]
        })
        .collect();
    let header = ["case", "of", "dir", "value", "floor", "status", "notes"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    for s in &r.skipped {
        let id = s.case_id.as_str();
        let _ = writeln!(out, "skipped {id}: {}", s.reason);
    }
    out
}

pub fn certificate_text(c: &Certificate) -> String {
    let mut out = String::new();
    let status = serde_json::to_value(c.status).unwrap();
    let _ = writeln!(out, "{}  k = {}  status: {}", c.params, c.k, status.as_str().unwrap());
    for check in &c.checks {
        let _ = writeln!(out, "  [{}] {:<12} {}", if check.passed { "pass" } else { "FAIL" }, check.name, check.detail);
    }
    if !c.witness.is_empty() {
        let _ = writeln!(out, "  witness: {}", join(&c.witness));
    }
    out
}
