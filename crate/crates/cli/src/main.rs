use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use burning_core::bench::{run_benchmark, solve, to_markdown, write_csv, Algorithm, BenchConfig, SolveOptions};
use burning_core::burning::{burn_graph, is_valid_burning_sequence, BurningSequence, DEFAULT_EXACT_CAP};
use burning_core::cbrh::{cbrh_estimate, MemoTable};
use burning_core::fixtures::fixture;
use burning_core::generate::{generate_graph, Model};
use burning_core::heuristics::{Bbgh, Icch};
use burning_core::io::{load_graph, write_graph, Format};
use burning_core::{Error, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_INVALID: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(name = "burn", version, about = "Graph burning heuristics, baselines and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the burning number of a graph.
    Solve(SolveArgs),
    /// Check a burning sequence against a graph.
    Validate(ValidateArgs),
    /// Generate a random graph.
    Gen(GenArgs),
    /// Run a benchmark matrix from a TOML config.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Graph file.
    #[arg(long, required_unless_present = "fixture", conflicts_with = "fixture")]
    input: Option<PathBuf>,
    /// Built-in graph by name (FIG3, FIG4, FIG5, FIG6, T1, c-fat200-1, ...).
    #[arg(long)]
    fixture: Option<String>,
    /// File format; guessed from the extension when omitted.
    #[arg(long)]
    format: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Graph, Error> {
        match (&self.input, &self.fixture) {
            (Some(path), _) => {
                let format = match &self.format {
                    Some(f) => f.parse()?,
                    None => Format::from_path(path),
                };
                load_graph(path, format)
            }
            (None, Some(name)) => fixture(name),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Search {
    Binary,
    Linear,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_parser = ["bbgh", "icch", "cbrh", "aprx3", "aprx2", "exact"])]
    algo: String,
    /// Run a single burn with this budget instead of estimating.
    #[arg(long)]
    budget: Option<usize>,
    /// Also check that no source was already burning when chosen.
    #[arg(long)]
    strict_validate: bool,
    /// Budget search for bbgh and icch.
    #[arg(long, value_enum, default_value = "binary")]
    search: Search,
    /// Largest graph the exact solver accepts.
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Comma-separated source labels in burning order.
    #[arg(long)]
    sequence: String,
    /// Number of burning steps; defaults to the sequence length.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    Er,
    Ba,
    Tree,
    Cfat,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    model: ModelKind,
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Edge count (er) or edges per new vertex (ba).
    #[arg(long)]
    m: Option<usize>,
    /// Density parameter for cfat.
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "edgelist")]
    format: String,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    config: PathBuf,
    /// CSV output file.
    #[arg(long)]
    out: PathBuf,
    /// Also write the markdown table here.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

enum Failure {
    Error(Error),
    Exit(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Exit(code)) => ExitCode::from(code),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownFormat(_)
        | Error::UnknownLabel(_)
        | Error::UnknownAlgorithm(_)
        | Error::UnknownFixture(_)
        | Error::Config(_)
        | Error::Io(_)
        | Error::ZeroBudget
        | Error::InvalidParameters(_) => EXIT_INPUT,
        _ => 1,
    }
}

fn cmd_solve(args: SolveArgs) -> Result<(), Failure> {
    let g = args.source.load()?;
    let algo: Algorithm = match (args.algo.as_str(), args.search) {
        ("bbgh", Search::Linear) => Algorithm::BbghLinear,
        ("icch", Search::Linear) => Algorithm::IcchLinear,
        (name, _) => name.parse()?,
    };
    let mut calls = None;
    let (estimate, sequence) = match args.budget {
        None => {
            let sol = solve(&g, algo, SolveOptions { exact_cap: args.exact_cap })?;
            calls = sol.calls;
            (sol.estimate, sol.sequence)
        }
        Some(b) => match fixed_budget(&g, algo, b, args.exact_cap, &mut calls)? {
            Some(seq) => (b, seq),
            None => {
                println!("infeasible: {algo} found no burning sequence with budget {b}");
                return Err(Failure::Exit(EXIT_INFEASIBLE));
            }
        },
    };
    println!("algorithm: {algo}");
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    println!("estimate: {estimate}");
    println!("sequence: {sequence}");
    if let Some(c) = calls {
        println!("calls: {c}");
    }
    if args.strict_validate {
        let strict = is_valid_burning_sequence(&g, &sequence, true)?;
        println!("strict: {}", if strict { "valid" } else { "invalid" });
        if !strict {
            return Err(Failure::Exit(EXIT_INVALID));
        }
    }
    Ok(())
}

/// One run at budget `b`; `None` when the algorithm cannot burn the graph in
/// `b` steps.
fn fixed_budget(
    g: &Graph,
    algo: Algorithm,
    b: usize,
    exact_cap: usize,
    calls: &mut Option<usize>,
) -> Result<Option<BurningSequence>, Error> {
    if b == 0 {
        return Err(Error::ZeroBudget);
    }
    match algo {
        Algorithm::Bbgh | Algorithm::BbghLinear => burn_graph(g, b, &Bbgh::default()),
        Algorithm::Icch | Algorithm::IcchLinear => burn_graph(g, b, &Icch),
        Algorithm::Cbrh => {
            let out = cbrh_estimate(g, b, &mut MemoTable::new())?;
            *calls = Some(out.recursive_calls);
            Ok(out.estimate.map(|_| out.sequence))
        }
        Algorithm::Aprx3 | Algorithm::Aprx2 | Algorithm::Exact => {
            let sol = solve(g, algo, SolveOptions { exact_cap })?;
            Ok((sol.estimate <= b).then_some(sol.sequence))
        }
    }
}

fn cmd_validate(args: ValidateArgs) -> Result<(), Failure> {
    let g = args.source.load()?;
    let labels: Vec<&str> = args.sequence.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let budget = args.budget.unwrap_or(labels.len());
    if labels.len() > budget {
        return Err(Error::InvalidParameters(format!("{} sources exceed budget {budget}", labels.len())).into());
    }
    let seq = BurningSequence::with_budget(labels.iter().map(|&l| l.into()).collect(), budget);
    let valid = is_valid_burning_sequence(&g, &seq, args.strict)?;
    println!("{}", if valid { "valid" } else { "invalid" });
    if valid {
        Ok(())
    } else {
        Err(Failure::Exit(EXIT_INVALID))
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let need_m = || args.m.ok_or_else(|| Error::InvalidParameters("--m is required for this model".into()));
    let model = match args.model {
        ModelKind::Er => Model::ErdosRenyi { n: args.n, m: need_m()? },
        ModelKind::Ba => Model::BarabasiAlbert { n: args.n, m: need_m()? },
        ModelKind::Tree => Model::RandomTree { n: args.n },
        ModelKind::Cfat => Model::CFat {
            n: args.n,
            c: args.c.ok_or_else(|| Error::InvalidParameters("--c is required for cfat".into()))?,
        },
    };
    let format: Format = args.format.parse()?;
    let text = write_graph(&generate_graph(model, args.seed)?, format);
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    let config = BenchConfig::load(&args.config)?;
    let results = run_benchmark(&config)?;
    write_csv(&results, fs::File::create(&args.out)?)?;
    let table = to_markdown(&results);
    if let Some(path) = &args.markdown {
        fs::write(path, &table)?;
    }
    print!("{table}");
    Ok(())
}
