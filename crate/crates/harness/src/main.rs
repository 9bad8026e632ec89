use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use famv::problems::problem_names;
use famv_harness::output::{COUNTS_FILE, RESULTS_FILE};
use famv_harness::{
    build_spec, compare_dir, run_experiment, ConfigFile, ExperimentSpec, HarnessError, ProblemReport, RunOptions,
    ALGORITHM_NAMES,
};

#[derive(Parser)]
#[command(name = "famv", version, about = "Mixed-variable firefly experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm × problem × seed grid and write CSV results
    Run(RunArgs),
    /// Recompute comparison tables from an existing summary.csv
    Compare {
        #[arg(long = "in", value_name = "DIR")]
        input: PathBuf,
    },
    /// List registered problems and algorithms
    List,
}

#[derive(Args)]
struct RunArgs {
    /// Problem name, comma-separated list, or `all`
    #[arg(long, value_delimiter = ',')]
    problem: Vec<String>,
    /// Algorithm name, comma-separated list, or `all`
    #[arg(long, value_delimiter = ',')]
    algo: Vec<String>,
    #[arg(long)]
    runs: Option<usize>,
    /// Evaluation budget for every problem (default 100000 synthetic, 10000 engineering)
    #[arg(long)]
    budget: Option<u64>,
    /// Base seed; run r uses seed + r
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Trace sampling stride in evaluations
    #[arg(long)]
    stride: Option<u64>,
    /// Dimension of synthetic problems
    #[arg(long)]
    dim: Option<usize>,
}

fn build(args: RunArgs) -> famv_harness::Result<ExperimentSpec> {
    let file = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let flags = RunOptions {
        problems: args.problem,
        algorithms: args.algo,
        runs: args.runs,
        budget: args.budget,
        seed: args.seed,
        stride: args.stride,
        dim: args.dim,
        out: args.out,
    };
    build_spec(flags, file)
}

fn print_reports(reports: &[ProblemReport]) {
    for pr in reports {
        println!("{}", pr.problem);
        for (g, s) in pr.report.groups.iter().enumerate() {
            let mark = match (g == pr.report.best, pr.report.is_similar_to_best(g)) {
                (true, _) => "best",
                (false, true) => "similar",
                _ => "",
            };
            println!("  {:<18} {:>12.4e} ± {:<12.4e} {mark}", s.name, s.mean, s.std);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::List => {
            println!("problems:");
            for p in problem_names() {
                println!("  {p}");
            }
            println!("algorithms:");
            for a in ALGORITHM_NAMES {
                println!("  {a}");
            }
        }
        Command::Run(args) => {
            let spec = build(args)?;
            let outcome = run_experiment(&spec)?;
            print_reports(&outcome.reports);
            println!(
                "{} runs written to {}",
                outcome.summary.len(),
                spec.out_dir.display()
            );
        }
        Command::Compare { input } => {
            let reports = compare_dir(&input).with_context(|| format!("comparing {}", input.display()))?;
            print_reports(&reports);
            println!("wrote {} and {} in {}", RESULTS_FILE, COUNTS_FILE, input.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let config = e.downcast_ref::<HarnessError>().is_some_and(|h| {
                matches!(h, HarnessError::Config(_) | HarnessError::ConfigFile { .. })
            });
            ExitCode::from(if config { 2 } else { 1 })
        }
    }
}
