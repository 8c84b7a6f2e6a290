//! The `fallkit` command line.
//!
//! Exit codes: 0 when the answer is feasible or the certificate valid, 1 when
//! it is infeasible or invalid, 2 for usage, IO, guard and timeout errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fallkit_core::graph::{
    complete, cycle, edgeless, f_k, path, petersen, random_chordal_ktree, random_gnp,
    random_maximal_outerplanar, random_regular,
};
use fallkit_core::reduce::{
    lift_assignment_to_ids, lift_coloring_to_fall, lift_edge_coloring_to_fall,
    lift_fall_to_coloring, lift_fall_to_edge_coloring, lift_ids_to_assignment,
    reduce_3col_to_fall3, reduce_edgecol_to_fallk, reduce_kcol_to_fallk, reduce_sat_to_2ids,
    Family, HarnessConfig, HarnessReport, ReductionKind, ReductionTrace,
};
use fallkit_core::solve::{
    fall_count_incexc, fall_decide_backtrack, fall_decide_polyspace, fall_probe, oracle_fall,
    FallResult, FallSet, Limits,
};
use fallkit_core::verify::{is_fall_coloring, Violation, VerifyReport};
use fallkit_core::{Error, Graph};

use crate::formats::{self, FormatError};
use crate::schema::{method_name, to_json, FallSetJson, SolveJson, TraceJson};
use crate::{parallel, write_atomic};

#[derive(Debug, Parser)]
#[command(name = "fallkit", version, about = "Exact solvers and reductions for fall coloring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a graph has a fall k-coloring.
    Solve(SolveArgs),
    /// Compute the fall set of a graph.
    Fallset(FallsetArgs),
    /// Check a coloring file against a graph.
    Verify(VerifyArgs),
    /// Write a generated graph.
    Generate(GenerateArgs),
    /// Reduce an instance and write the target graph and its trace.
    Reduce(ReduceArgs),
    /// Move a certificate across a reduction.
    Lift(LiftArgs),
    /// Run the reduction equivalence harness.
    Harness(HarnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dimacs,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Oracle,
    Backtrack,
    Incexc,
    Polyspace,
}

#[derive(Debug, Clone, Args)]
pub struct Guards {
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 2000)]
    pub max_n: usize,
    /// Give up after this many seconds; 0 waits forever.
    #[arg(long, default_value_t = 600.0)]
    pub timeout: f64,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph file (DIMACS or JSON); `-` reads stdin.
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    pub algorithm: Algorithm,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the witness as a coloring file.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
    /// Report wall time. Off by default so output is reproducible.
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub guards: Guards,
}

#[derive(Debug, Args)]
pub struct FallsetArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub guards: Guards,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    /// Coloring file with `vertex color` lines.
    pub coloring: PathBuf,
    /// Number of colors; defaults to the largest color in the file.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Cycle,
    Path,
    Complete,
    Edgeless,
    Fk,
    Petersen,
    Regular,
    Ktree,
    Outerplanar,
    Gnp,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: GraphKind,
    #[arg(long)]
    pub n: Option<usize>,
    /// `k` of F_k, the degree of a regular graph or the clique size of a
    /// k-tree.
    #[arg(long)]
    pub k: Option<usize>,
    /// Edge probability for `gnp`.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dimacs)]
    pub graph_format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// One of 3col-fall3, kcol-fallk, edgecol-fallk, edgecol-fallk-box, sat-2ids.
    pub kind: String,
    /// Source graph, or a DIMACS CNF file for sat-2ids.
    pub input: PathBuf,
    #[arg(long)]
    pub k: Option<usize>,
    /// Target graph file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Trace file; defaults to `<out>.trace.json`, or `trace.json` when the
    /// target goes to stdout.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dimacs)]
    pub graph_format: GraphFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// From a certificate of the reduced instance to one of the source.
    ToSource,
    /// From a certificate of the source to one of the reduced instance.
    ToTarget,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[arg(value_enum)]
    pub direction: Direction,
    #[arg(long)]
    pub trace: PathBuf,
    /// The reduced graph the trace belongs to.
    #[arg(long)]
    pub target: PathBuf,
    /// Coloring, edge coloring, assignment or set-pair file, by reduction
    /// and direction.
    #[arg(long)]
    pub cert: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HarnessArgs {
    /// One of 3col-fall3, kcol-fallk, edgecol-fallk, edgecol-fallk-box, sat-2ids.
    pub family: String,
    /// Colors for kcol-fallk (default 4) and the edge families (default 3).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 25)]
    pub trials: usize,
    /// Largest source size: vertices, or variables and clauses for SAT.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("timed out after {0} s")]
    Timeout(f64),
    /// A certificate that fails verification; exit 1 rather than 2.
    #[error("{0}")]
    Rejected(Error),
    #[error("{0}")]
    Core(Error),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Rejected(_) => 1,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

/// Everything one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(0, text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut warnings = String::new();
    let result = match cli.command {
        Command::Solve(a) => solve(a, &mut warnings),
        Command::Fallset(a) => fallset(a, &mut warnings),
        Command::Verify(a) => verify(a, &mut warnings),
        Command::Generate(a) => generate(a),
        Command::Reduce(a) => reduce(a, &mut warnings),
        Command::Lift(a) => lift(a, &mut warnings),
        Command::Harness(a) => harness(a),
    };
    match result {
        Ok(mut out) => {
            out.stderr.insert_str(0, &warnings);
            out
        }
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("{warnings}error: {e}\n"),
        },
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    write_atomic(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn format_err(path: &Path) -> impl FnOnce(FormatError) -> CliError + '_ {
    move |source| CliError::Format {
        path: path.display().to_string(),
        source,
    }
}

fn read_graph(path: &Path, warnings: &mut String) -> Result<Graph, CliError> {
    let parsed = formats::parse_graph(&read_text(path)?).map_err(format_err(path))?;
    for w in parsed.warnings {
        writeln!(warnings, "warning: {}: {w}", path.display()).unwrap();
    }
    Ok(parsed.value)
}

fn guard(g: &Graph, guards: &Guards) -> Result<(), CliError> {
    if g.n() > guards.max_n {
        return Err(CliError::Guard(format!(
            "graph has {} vertices, --max-n is {}",
            g.n(),
            guards.max_n
        )));
    }
    Ok(())
}

/// Runs `work` on a helper thread and stops waiting after `secs` seconds.
/// A timed-out computation is abandoned, not cancelled; the process is
/// expected to exit soon after.
fn with_timeout<T, F>(secs: f64, work: F) -> Result<T, CliError>
where
    T: Send + 'static,
    F: FnOnce() -> T + Send + 'static,
{
    if secs <= 0.0 {
        return Ok(work());
    }
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(work());
    });
    rx.recv_timeout(Duration::from_secs_f64(secs))
        .map_err(|_| CliError::Timeout(secs))
}

fn solve(a: SolveArgs, warnings: &mut String) -> Result<Outcome, CliError> {
    let g = read_graph(&a.graph, warnings)?;
    guard(&g, &a.guards)?;
    let (k, algorithm) = (a.k, a.algorithm);
    let started = Instant::now();
    let mut result = with_timeout(a.guards.timeout, move || -> Result<FallResult, Error> {
        let limits = Limits::default();
        match algorithm {
            Algorithm::Auto => fall_probe(&g, k, &limits),
            Algorithm::Oracle => oracle_fall(&g, k, &limits),
            Algorithm::Backtrack => fall_decide_backtrack(&g, k),
            Algorithm::Incexc => fall_count_incexc(&g, k, &limits),
            Algorithm::Polyspace => fall_decide_polyspace(&g, k),
        }
    })??;
    if a.timing {
        result.stats.elapsed_micros = Some(started.elapsed().as_micros() as u64);
    }
    if let (Some(path), Some(w)) = (&a.witness_out, &result.witness) {
        write_file(path, &formats::write_coloring(w))?;
    }
    let code = if result.feasible { 0 } else { 1 };
    let stdout = match a.format {
        Format::Json => to_json(&SolveJson::from(&result)),
        Format::Text => solve_text(&result),
    };
    Ok(Outcome::ok(code, stdout))
}

fn solve_text(r: &FallResult) -> String {
    let mut out = format!(
        "fall {}-coloring: {} ({}, {} nodes",
        r.k,
        if r.feasible { "feasible" } else { "infeasible" },
        method_name(r.method),
        r.stats.nodes
    );
    if let Some(us) = r.stats.elapsed_micros {
        write!(out, ", {us} us").unwrap();
    }
    out.push_str(")\n");
    if let Some(c) = r.count {
        writeln!(out, "count: {c}").unwrap();
    }
    if let Some(w) = &r.witness {
        out.push_str("witness:\n");
        out.push_str(&formats::write_coloring(w));
    }
    out
}

fn fallset(a: FallsetArgs, warnings: &mut String) -> Result<Outcome, CliError> {
    let g = read_graph(&a.graph, warnings)?;
    guard(&g, &a.guards)?;
    let fs: FallSet = with_timeout(a.guards.timeout, move || parallel::fall_set(&g, &Limits::default()))??;
    let code = if fs.members.is_empty() { 1 } else { 0 };
    let stdout = match a.format {
        Format::Json => to_json(&FallSetJson::from(&fs)),
        Format::Text => {
            let members: Vec<String> = fs.members.iter().map(|k| k.to_string()).collect();
            let mut out = format!("fall set: {{{}}}\n", members.join(", "));
            if let (Some(lo), Some(hi)) = (fs.chi_fall(), fs.psi_fall()) {
                writeln!(out, "chi_fall: {lo}\npsi_fall: {hi}").unwrap();
            }
            writeln!(out, "probed: {}..={}", fs.probed.0, fs.probed.1).unwrap();
            out
        }
    };
    Ok(Outcome::ok(code, stdout))
}

fn verify(a: VerifyArgs, warnings: &mut String) -> Result<Outcome, CliError> {
    let g = read_graph(&a.graph, warnings)?;
    let c = formats::parse_coloring(&read_text(&a.coloring)?, g.n(), a.k)
        .map_err(format_err(&a.coloring))?;
    let report = is_fall_coloring(&g, &c)?;
    let code = if report.valid { 0 } else { 1 };
    let stdout = match a.format {
        Format::Json => to_json(&report),
        Format::Text => verify_text(&report),
    };
    Ok(Outcome::ok(code, stdout))
}

fn verify_text(r: &VerifyReport) -> String {
    let mut out = format!(
        "{} fall {}-coloring\n",
        if r.valid { "valid" } else { "invalid" },
        r.k
    );
    for v in &r.violations {
        match v {
            Violation::EmptyClass { color } => writeln!(out, "  color {color} is unused"),
            Violation::Monochromatic { u, v, color } => {
                writeln!(out, "  edge {u}-{v} has both ends colored {color}")
            }
            Violation::MissingColor { vertex, color } => {
                writeln!(out, "  vertex {vertex} has no neighbor colored {color}")
            }
        }
        .unwrap();
    }
    out
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{kind} needs --{flag}")))
}

fn generate(a: GenerateArgs) -> Result<Outcome, CliError> {
    let name = format!("{:?}", a.kind).to_lowercase();
    let n = || need(a.n, "n", &name);
    let k = || need(a.k, "k", &name);
    let g = match a.kind {
        GraphKind::Cycle => cycle(n()?)?,
        GraphKind::Path => path(n()?)?,
        GraphKind::Complete => complete(n()?)?,
        GraphKind::Edgeless => edgeless(n()?),
        GraphKind::Fk => f_k(k()?)?,
        GraphKind::Petersen => petersen(),
        GraphKind::Regular => random_regular(n()?, k()?, a.seed)?,
        GraphKind::Ktree => random_chordal_ktree(n()?, k()?, a.seed)?,
        GraphKind::Outerplanar => random_maximal_outerplanar(n()?, a.seed)?,
        GraphKind::Gnp => {
            let p = a.p.ok_or_else(|| CliError::Usage("gnp needs --p".into()))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}")));
            }
            random_gnp(n()?, p, a.seed)
        }
    };
    let text = match a.graph_format {
        GraphFormat::Dimacs => formats::write_dimacs(&g),
        GraphFormat::Json => formats::write_graph_json(&g),
    };
    Ok(match a.out {
        Some(path) => {
            write_file(&path, &text)?;
            Outcome {
                code: 0,
                stdout: String::new(),
                stderr: format!("{name}: {} vertices, {} edges -> {}\n", g.n(), g.m(), path.display()),
            }
        }
        None => Outcome::ok(0, text),
    })
}

fn parse_kind(s: &str) -> Result<ReductionKind, CliError> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = ReductionKind::ALL.iter().map(|k| k.name()).collect();
        CliError::Usage(format!("unknown reduction `{s}`; expected one of {}", names.join(", ")))
    })
}

fn reduce(a: ReduceArgs, warnings: &mut String) -> Result<Outcome, CliError> {
    let kind = parse_kind(&a.kind)?;
    let (target, trace) = match kind {
        ReductionKind::SatToTwoIds => {
            let parsed = formats::parse_cnf(&read_text(&a.input)?).map_err(format_err(&a.input))?;
            for w in parsed.warnings {
                writeln!(warnings, "warning: {}: {w}", a.input.display()).unwrap();
            }
            reduce_sat_to_2ids(&parsed.value)?
        }
        _ => {
            let g = read_graph(&a.input, warnings)?;
            match kind {
                ReductionKind::ThreeColToFall3 => reduce_3col_to_fall3(&g)?,
                ReductionKind::KColToFallK => reduce_kcol_to_fallk(&g, need(a.k, "k", "kcol-fallk")?)?,
                _ => {
                    let k = match a.k.or(g.regular_degree()) {
                        Some(k) => k,
                        None => return Err(CliError::Usage("edge reductions need a regular source graph".into())),
                    };
                    reduce_edgecol_to_fallk(&g, k, kind == ReductionKind::EdgeColToFallKBox)?
                }
            }
        }
    };
    let text = match a.graph_format {
        GraphFormat::Dimacs => formats::write_dimacs(&target),
        GraphFormat::Json => formats::write_graph_json(&target),
    };
    let trace_path = a.trace.clone().unwrap_or_else(|| match &a.out {
        Some(out) => {
            let mut name = out.as_os_str().to_owned();
            name.push(".trace.json");
            PathBuf::from(name)
        }
        None => PathBuf::from("trace.json"),
    });
    write_file(&trace_path, &to_json(&TraceJson::from(&trace)))?;
    let summary = format!(
        "{kind}: {} vertices, {} edges; trace -> {}\n",
        target.n(),
        target.m(),
        trace_path.display()
    );
    Ok(match &a.out {
        Some(out) => {
            write_file(out, &text)?;
            Outcome {
                code: 0,
                stdout: String::new(),
                stderr: summary,
            }
        }
        None => Outcome {
            code: 0,
            stdout: text,
            stderr: summary,
        },
    })
}

fn rejected(e: Error) -> CliError {
    match e {
        Error::InvalidCertificate(_) | Error::MalformedColoring(_) => CliError::Rejected(e),
        other => other.into(),
    }
}

fn lift(a: LiftArgs, warnings: &mut String) -> Result<Outcome, CliError> {
    let trace_text = read_text(&a.trace)?;
    let trace: ReductionTrace = serde_json::from_str::<TraceJson>(&trace_text)
        .map_err(|e| CliError::Format {
            path: a.trace.display().to_string(),
            source: e.into(),
        })?
        .into();
    let target = read_graph(&a.target, warnings)?;
    let cert = read_text(&a.cert)?;
    let cert_err = format_err(&a.cert);
    let (n, m) = trace.source_size;
    let k = trace.k;
    let text = match (trace.kind, a.direction) {
        (ReductionKind::ThreeColToFall3 | ReductionKind::KColToFallK, Direction::ToSource) => {
            let c = formats::parse_coloring(&cert, target.n(), k).map_err(cert_err)?;
            formats::write_coloring(&lift_fall_to_coloring(&trace, &target, &c).map_err(rejected)?)
        }
        (ReductionKind::ThreeColToFall3 | ReductionKind::KColToFallK, Direction::ToTarget) => {
            let c = formats::parse_coloring(&cert, n, k).map_err(cert_err)?;
            formats::write_coloring(&lift_coloring_to_fall(&trace, &target, &c).map_err(rejected)?)
        }
        (ReductionKind::EdgeColToFallK | ReductionKind::EdgeColToFallKBox, Direction::ToSource) => {
            let c = formats::parse_coloring(&cert, target.n(), k).map_err(cert_err)?;
            formats::write_edge_coloring(&lift_fall_to_edge_coloring(&trace, &target, &c).map_err(rejected)?)
        }
        (ReductionKind::EdgeColToFallK | ReductionKind::EdgeColToFallKBox, Direction::ToTarget) => {
            let h = formats::parse_edge_coloring(&cert, m, k).map_err(cert_err)?;
            formats::write_coloring(&lift_edge_coloring_to_fall(&trace, &target, &h).map_err(rejected)?)
        }
        (ReductionKind::SatToTwoIds, Direction::ToSource) => {
            let (s1, s2) = formats::parse_set_pair(&cert, target.n()).map_err(cert_err)?;
            formats::write_assignment(&lift_ids_to_assignment(&trace, &target, &s1, &s2).map_err(rejected)?)
        }
        (ReductionKind::SatToTwoIds, Direction::ToTarget) => {
            let tau = formats::parse_assignment(&cert, n).map_err(cert_err)?;
            let (s1, s2) = lift_assignment_to_ids(&trace, &target, &tau).map_err(rejected)?;
            formats::write_set_pair(&s1, &s2)
        }
    };
    Ok(match a.out {
        Some(path) => {
            write_file(&path, &text)?;
            Outcome {
                code: 0,
                stdout: String::new(),
                stderr: format!("lifted certificate verified -> {}\n", path.display()),
            }
        }
        None => Outcome::ok(0, text),
    })
}

fn harness(a: HarnessArgs) -> Result<Outcome, CliError> {
    let kind = parse_kind(&a.family)?;
    let default_k = match kind {
        ReductionKind::KColToFallK => 4,
        _ => 3,
    };
    let family = Family::from_kind(kind, a.k.unwrap_or(default_k));
    let config = HarnessConfig::new(family, a.trials, a.max_n, a.seed);
    let report = parallel::harness(&config);
    let code = if report.passed() { 0 } else { 1 };
    let stdout = match a.format {
        Format::Json => to_json(&report),
        Format::Text => harness_text(&report),
    };
    Ok(Outcome::ok(code, stdout))
}

fn harness_text(r: &HarnessReport) -> String {
    let mut out = format!(
        "{}: {} trials (max_n {}, seed {}), {} yes-instances, {} failures\n",
        r.family,
        r.trials,
        r.max_n,
        r.seed,
        r.feasible,
        r.failures.len()
    );
    for f in &r.failures {
        writeln!(out, "  trial {}: {}\n    instance: {}", f.trial, f.reason, f.instance).unwrap();
    }
    out
}
