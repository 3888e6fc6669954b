mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Failure, Report};

#[derive(Parser)]
#[command(
    name = "cylchroma",
    version,
    about = "Verify P-cylindric Schur identities and chromatic e-expansions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a poset for an induced 3-chain plus an incomparable point.
    Check31(RunConfig),
    /// e- and m-expansions of the chromatic symmetric function of inc(P).
    Chromatic(RunConfig),
    /// Compare the cylindric determinant with the cylindric P-tableau sum.
    VerifyMain(RunConfig),
    /// Both sides of the standard-tableau corollary for a shape of size |P|.
    Corollary(RunConfig),
    /// Sink histogram of acyclic orientations against e-coefficient sums.
    Sinks(RunConfig),
    /// Gessel–Krattenthaler and Postnikov–McNamara forms of a shape.
    Convert(RunConfig),
    /// One audit line per triple on which the involution acts.
    InvolutionTrace(RunConfig),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    #[default]
    Text,
    Tsv,
    Json,
}

#[derive(Args, Debug)]
pub struct RunConfig {
    /// Poset file: element count on the first line, then `a < b` lines.
    #[arg(long)]
    pub poset: Option<PathBuf>,
    /// Cylindric shape `λ/μ/d`, e.g. `3,2/1/2`.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
    /// Seed for sampled runs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest |k_i| enumerated by involution-trace.
    #[arg(long, default_value_t = 2)]
    pub kbound: i64,
    /// Number of triples to trace, chosen with `--seed`; all when absent.
    #[arg(long)]
    pub sample: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check31(cfg) => commands::check31(cfg),
        Command::Chromatic(cfg) => commands::chromatic(cfg),
        Command::VerifyMain(cfg) => commands::verify_main(cfg),
        Command::Corollary(cfg) => commands::corollary(cfg),
        Command::Sinks(cfg) => commands::sinks(cfg),
        Command::Convert(cfg) => commands::convert(cfg),
        Command::InvolutionTrace(cfg) => commands::involution_trace(cfg),
    };
    let emit = match &cli.command {
        Command::Check31(c)
        | Command::Chromatic(c)
        | Command::VerifyMain(c)
        | Command::Corollary(c)
        | Command::Sinks(c)
        | Command::Convert(c)
        | Command::InvolutionTrace(c) => c.emit,
    };
    match result {
        Ok(report) => print_report(&report, emit),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn print_report(report: &Report, emit: Emit) -> ExitCode {
    match emit {
        Emit::Text => print!("{}", report.text),
        Emit::Tsv => print!("{}", report.tsv),
        Emit::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.json).expect("json value")
        ),
    }
    if report.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(Failure::MISMATCH)
    }
}
