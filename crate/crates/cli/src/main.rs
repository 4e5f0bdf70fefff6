//! `reluctant`: run, benchmark, verify and fit the reluctant sorts.
//!
//! Exit codes: 0 on success, 1 on usage, parse and guard errors or failed
//! verification, 2 when a run exceeds its budget.

mod bench;
mod commands;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "reluctant",
    version,
    about = "A laboratory for deliberately slow sorting algorithms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sort whitespace-separated integers and print the outcome as JSON.
    Run(SortArgs),
    /// Print the swap trace of one sort as JSON.
    Trace(SortArgs),
    /// Sweep n and print operation counts as CSV.
    Bench(BenchArgs),
    /// Run the property suites and print a pass/fail table.
    Verify(VerifyArgs),
    /// Fit growth models to a bench CSV and print the report as JSON.
    Fit(FitArgs),
}

#[derive(Debug, Args)]
struct SeedArg {
    /// Seed for BogoSort shuffles and random inputs.
    #[arg(long, env = "RELUCTANT_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SortArgs {
    #[arg(long = "alg")]
    alg: String,
    /// Comparison cap (shuffle cap for bogosort).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[command(flatten)]
    seed: SeedArg,
    /// Allow exposort beyond its default size guard.
    #[arg(long = "i-have-time")]
    i_have_time: bool,
    /// Input file; standard input when omitted.
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchCase {
    Sorted,
    Reverse,
    Random,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long = "alg")]
    alg: String,
    #[arg(long = "case", value_enum, default_value = "random")]
    case: BenchCase,
    #[arg(long = "n-min")]
    n_min: usize,
    #[arg(long = "n-max")]
    n_max: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long = "i-have-time")]
    i_have_time: bool,
    /// Write 0 in the elapsed_ns column so output is reproducible.
    #[arg(long = "no-timing")]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,
    /// Largest n for the exhaustive bogosort sweep (default: min(max-n, 7)).
    #[arg(long = "bogo-max-n")]
    bogo_max_n: Option<usize>,
    #[command(flatten)]
    seed: SeedArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Comparisons,
    Swaps,
    Invocations,
    Shuffles,
}

#[derive(Debug, Args)]
struct FitArgs {
    /// Bench CSV; `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "comparisons")]
    metric: Metric,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Run(args) => commands::run(&args, true),
        Command::Trace(args) => commands::run(&args, false),
        Command::Bench(args) => bench::bench(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Fit(args) => commands::fit(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("reluctant: {e}");
            e.exit_code()
        }
    }
}
