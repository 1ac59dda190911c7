//! `edom`: compute domination-type parameters, run statement checks and
//! searches, reduce trees, and play the guard game in the terminal.

mod input;
mod play;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use edom_core::eternal::{Limits, Model};
use edom_core::harness::{self, Kind, RunOptions, Status, Universe};
use edom_core::params::clique_cover_number;
use edom_core::reduction::{r2_reduces_to_small_star, reduce_tree, tree_clique_cover, Terminal};
use edom_core::SolveError;
use serde::Serialize;

use crate::input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "edom", version, about = "Exact domination, eternal domination and clique cover solvers for small graphs")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Wall-clock budget in seconds for fixed-point solvers
    #[arg(long, global = true, value_parser = positive_seconds)]
    time_budget: Option<f64>,

    /// Worker threads for sweeps and checks
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every parameter of one graph, with witnesses
    Params(InputArgs),
    /// Sweep a registered theorem over enumerated graphs
    Check(StatementArgs),
    /// Search for a graph answering an open question
    Search(StatementArgs),
    /// Parameters of many graphs as a table
    Sweep(SweepArgs),
    /// Reduce a tree with R1/R2 and report the trace
    Tree(InputArgs),
    /// Play the guard game: you attack, the solver defends
    Play(PlayArgs),
}

#[derive(Args, Debug)]
struct StatementArgs {
    /// Registry id, e.g. FACT1_CHAIN or Q_MAIN1
    id: String,
    /// Largest order examined (the registry's default when omitted)
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UniverseKind {
    All,
    Connected,
    Trees,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// File with one graph6 string per line; otherwise graphs are enumerated
    #[arg(long, conflicts_with_all = ["n_max", "universe"])]
    g6: Option<std::path::PathBuf>,
    /// Enumerate graphs with 1 <= n <= N
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = UniverseKind::All)]
    universe: UniverseKind,
}

#[derive(Args, Debug)]
struct PlayArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of guards (defaults to the smallest number that wins)
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModelArg::AllGuards)]
    model: ModelArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    /// one guard moves per attack (eternal domination)
    OneGuard,
    /// every guard may move per attack (m-eternal domination)
    AllGuards,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::OneGuard => Model::OneGuard,
            ModelArg::AllGuards => Model::AllGuards,
        }
    }
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number of seconds, got {s:?}")),
    }
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

pub(crate) fn usage(msg: impl Into<String>) -> anyhow::Error {
    Exit(2, msg.into()).into()
}

fn exit_code_of(err: &anyhow::Error) -> u8 {
    if let Some(Exit(code, _)) = err.downcast_ref::<Exit>() {
        return *code;
    }
    match err.downcast_ref::<SolveError>() {
        Some(e) if e.is_resource_limit() => 3,
        _ => 2,
    }
}

fn emit(out: &mut impl Write, format: Format, text: &str, json: &impl Serialize) -> Result<()> {
    match format {
        Format::Text => write!(out, "{text}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(json)?)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = exit_code_of(&err);
            eprintln!("edom: {err:#}");
            if code == 3 {
                eprintln!("edom: stopped at a resource limit; no partial answer is reported");
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8> {
    let limits = match cli.time_budget {
        Some(secs) => Limits::with_budget(Duration::from_secs_f64(secs)),
        None => Limits::default(),
    };
    let opts = RunOptions { jobs: cli.jobs as usize, limits };
    match cli.command {
        Command::Params(input) => {
            let g = input.load()?;
            let report = harness::param_report(&g, &limits);
            emit(out, cli.format, &harness::render_param_report(&report), &report)?;
            Ok(if report.errors.is_empty() { 0 } else { 3 })
        }
        Command::Check(args) => statement(args, Kind::Proven, &opts, cli.format, out),
        Command::Search(args) => statement(args, Kind::Open, &opts, cli.format, out),
        Command::Sweep(args) => {
            let universe = match &args.g6 {
                Some(path) => Universe::from_graphs(path.display().to_string(), input::read_graph6_file(path)?),
                None => match args.universe {
                    UniverseKind::All => Universe::all_graphs(1, args.n_max)?,
                    UniverseKind::Connected => Universe::connected_graphs(1, args.n_max)?,
                    UniverseKind::Trees => Universe::trees(1, args.n_max)?,
                },
            };
            let rows = harness::parameter_sweep(&universe, &opts);
            emit(out, cli.format, &harness::render_param_table(&rows), &rows)?;
            Ok(if rows.iter().all(|r| r.errors.is_empty()) { 0 } else { 3 })
        }
        Command::Tree(input) => tree(&input.load()?, cli.format, out),
        Command::Play(args) => {
            let g = args.input.load()?;
            let stdin = io::stdin();
            play::session(&g, args.k, args.model.into(), &limits, &mut stdin.lock(), out)
        }
    }
}

fn statement(args: StatementArgs, kind: Kind, opts: &RunOptions, format: Format, out: &mut impl Write) -> Result<u8> {
    let entry = harness::lookup(&args.id).filter(|e| e.kind == kind).ok_or_else(|| {
        usage(format!("unknown id {:?}; known ids: {}", args.id, harness::registry_ids(kind)))
    })?;
    let n_max = args.n_max.unwrap_or(entry.default_n_max);
    if n_max == 0 {
        return Err(usage("--n-max must be positive"));
    }
    let report = match kind {
        Kind::Proven => harness::check(entry.id, &Universe::default_for(entry.id, n_max)?, opts)?,
        Kind::Open => harness::search_counterexample(entry.id, n_max, opts)?,
    };
    emit(out, format, &report.render_text(), &report)?;
    Ok(if report.status == Status::Counterexample { 1 } else { 0 })
}

#[derive(Serialize)]
struct TreeReport {
    graph6: String,
    value: usize,
    theta: usize,
    r2_reducible: bool,
    trace: edom_core::reduction::ReductionTrace,
    r2_trace: Option<edom_core::reduction::ReductionTrace>,
}

fn tree(g: &edom_core::Graph, format: Format, out: &mut impl Write) -> Result<u8> {
    if !g.is_tree() {
        return Err(usage("input is not a tree"));
    }
    let (value, trace) = reduce_tree(g)?;
    let theta = tree_clique_cover(g)?;
    debug_assert_eq!(theta, clique_cover_number(g).0);
    let (r2_reducible, r2_trace) = if g.n() >= 2 { r2_reduces_to_small_star(g)? } else { (false, None) };
    let mut text = format!("{trace}\ngamma_m_inf = {value}\ntheta = {theta}\n");
    let verdict = match (&r2_trace, g.n()) {
        (_, 0..=1) => "n/a (single vertex)".to_string(),
        (Some(t), _) if t.terminal == Terminal::K2 => "yes".to_string(),
        (Some(t), _) => format!("yes (→ {})", t.terminal),
        (None, _) => "no".to_string(),
    };
    text.push_str(&format!("R2-reduces to K2 or K1,2: {verdict}\n"));
    if let Some(t) = &r2_trace {
        for step in &t.steps {
            text.push_str(&format!("  {step}\n"));
        }
    }
    let report = TreeReport { graph6: edom_core::to_graph6(g), value, theta, r2_reducible, trace, r2_trace };
    emit(out, format, &text, &report)?;
    Ok(0)
}
