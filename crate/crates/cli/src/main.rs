//! `fairpath`: solve fair shortest path queries and generate instances.

mod query;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fairpath::format::{parse_mcc, write_graph, write_mcc, QueryHint};
use fairpath::testkit::{
    figure_one, figure_two, random_clique, random_instance, reduce_eth, reduce_w1, BoundsProfile, GeneratorConfig,
};

use query::{QueryArgs, SolverChoice};

#[derive(Parser)]
#[command(name = "fairpath", version, about = "Fair shortest paths in vertex-colored digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a fair path exists. Exit code 0 = yes, 1 = no, 2 = error.
    Solve(SolveArgs),
    /// Write a generated instance to standard output.
    #[command(subcommand)]
    Generate(Generate),
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file.
    file: PathBuf,
    /// Source vertex (1-based); defaults to the file's query comment.
    #[arg(long)]
    source: Option<usize>,
    /// Target vertex (1-based); defaults to the file's query comment.
    #[arg(long)]
    target: Option<usize>,
    /// Length budget; defaults to the file's query comment, then to dist(s, t).
    #[arg(long)]
    ell: Option<u64>,
    /// balance | bounds | maxmin:<slack>:<diff|quot> | proportional:<slack> | mov:<slack>
    #[arg(long)]
    variant: Option<String>,
    /// Per-color bound `i:alpha:beta` (1-based color); repeatable.
    #[arg(long = "bounds", value_name = "I:ALPHA:BETA")]
    bounds: Vec<String>,
    #[arg(long, value_enum, default_value_t = SolverChoice::Auto)]
    solver: SolverChoice,
    /// Failure probability of the randomized solver.
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, env = "FAIRPATH_SEED", default_value_t = 0)]
    seed: u64,
    /// Print `time_ms=-` so output is byte-stable.
    #[arg(long)]
    no_time: bool,
}

#[derive(Subcommand)]
enum Generate {
    /// Random graph with a planted path; the query is stored in comments.
    Random(RandomArgs),
    /// Random multicolored clique instance in the mcc format.
    Clique(CliqueArgs),
    /// Parameterized reduction of an mcc file to a balance-fair shortest path instance.
    ReduceW1 { file: PathBuf },
    /// Reduction with 2k + 1 colors of an mcc file.
    ReduceEth { file: PathBuf },
    /// The two-color layered example with a balanced shortest path.
    FigureOne,
    /// The three-partition clique example in the mcc format.
    FigureTwo,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Witness,
    Random,
    Loose,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, env = "FAIRPATH_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    c: usize,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = 3)]
    max_weight: u64,
    #[arg(long, default_value_t = 6)]
    max_backbone: usize,
    #[arg(long, value_enum, default_value_t = Profile::Random)]
    profile: Profile,
}

#[derive(Args)]
struct CliqueArgs {
    #[arg(long, env = "FAIRPATH_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 4)]
    eta: usize,
    #[arg(long, default_value_t = 0.4)]
    density: f64,
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn generate(command: Generate) -> Result<String> {
    Ok(match command {
        Generate::Random(args) => {
            if args.n < 2 || args.c < 1 {
                anyhow::bail!("need --n >= 2 and --c >= 1");
            }
            let inst = random_instance(&GeneratorConfig {
                seed: args.seed,
                n: args.n,
                c: args.c,
                density: args.density,
                max_weight: args.max_weight,
                max_backbone: args.max_backbone,
                profile: match args.profile {
                    Profile::Witness => BoundsProfile::Witness,
                    Profile::Random => BoundsProfile::Random,
                    Profile::Loose => BoundsProfile::Loose,
                },
            });
            let hint = QueryHint {
                source: Some(inst.source),
                target: Some(inst.target),
                ell: Some(inst.ell),
                bounds: (0..args.c)
                    .map(|i| (i, inst.bounds.alphas()[i], inst.bounds.betas()[i]))
                    .collect(),
            };
            write_graph(&inst.graph, &hint)
        }
        Generate::Clique(args) => write_mcc(&random_clique(args.seed, args.k, args.eta, args.density)),
        Generate::ReduceW1 { file } => reduction_output(&file, reduce_w1)?,
        Generate::ReduceEth { file } => reduction_output(&file, reduce_eth)?,
        Generate::FigureOne => {
            let (graph, s, t) = figure_one();
            let hint = QueryHint {
                source: Some(s),
                target: Some(t),
                ..QueryHint::default()
            };
            write_graph(&graph, &hint)
        }
        Generate::FigureTwo => write_mcc(&figure_two()),
    })
}

fn reduction_output(
    file: &PathBuf,
    reduce: fn(
        &fairpath::testkit::CliqueInstance,
    ) -> Result<fairpath::testkit::Reduction, fairpath::testkit::CliqueError>,
) -> Result<String> {
    let instance = parse_mcc(&read(file)?).with_context(|| format!("parsing {}", file.display()))?;
    let red = reduce(&instance)?;
    let hint = QueryHint {
        source: Some(red.source),
        target: Some(red.target),
        ..QueryHint::default()
    };
    Ok(write_graph(&red.graph, &hint))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve(args) => {
            let text = read(&args.file)?;
            let query = QueryArgs {
                source: args.source,
                target: args.target,
                ell: args.ell,
                variant: args.variant,
                bounds: args.bounds,
                solver: args.solver,
                epsilon: args.epsilon,
                seed: args.seed,
            };
            let started = std::time::Instant::now();
            let result = query::run_solve(&text, &query)?;
            let elapsed = (!args.no_time).then(|| started.elapsed().as_millis());
            print!("{}", fairpath::format::render_result(&result, elapsed));
            Ok(ExitCode::from(if result.decision { 0 } else { 1 }))
        }
        Command::Generate(command) => {
            print!("{}", generate(command)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
