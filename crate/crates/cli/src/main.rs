//! `rankweight`: weight enumerators, MacWilliams transforms and identity
//! checks for linear codes over GF(q^m).

mod commands;
mod job;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use job::{Command, Format, Job, JobArgs};

#[derive(Parser)]
#[command(name = "rankweight", version, about = "Rank and Hamming weight enumerators of codes over GF(q^m)")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Rank and/or Hamming weight enumerators by exhaustive enumeration
    Enumerate(JobArgs),
    /// Dual code generator and its enumerators
    Dual(JobArgs),
    /// Analytic dual enumerator from the code's own enumerator
    Macwilliams(JobArgs),
    /// Both sides of the rank moment identities
    Moments(JobArgs),
    /// Rank distribution of an MRD code with the given parameters
    Mrd(JobArgs),
    /// Run every identity check on a code
    Verify(JobArgs),
    /// Run the command named in a job file
    Run(JobArgs),
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Core(rankweight::Error),
}

impl From<rankweight::Error> for CliError {
    fn from(e: rankweight::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(rankweight::Error::GuardExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

fn execute(cli: Cli) -> Result<(commands::Report, Format), CliError> {
    let (named, args) = match cli.command {
        Sub::Enumerate(a) => (Some(Command::Enumerate), a),
        Sub::Dual(a) => (Some(Command::Dual), a),
        Sub::Macwilliams(a) => (Some(Command::Macwilliams), a),
        Sub::Moments(a) => (Some(Command::Moments), a),
        Sub::Mrd(a) => (Some(Command::Mrd), a),
        Sub::Verify(a) => (Some(Command::Verify), a),
        Sub::Run(a) => (None, a),
    };
    let spec = args.into_spec()?;
    let command = named
        .or(spec.command)
        .ok_or_else(|| CliError::Parse("the job file does not name a command".into()))?;
    let job = Job::resolve(spec, command)?;
    let report = commands::run(&job)?;
    Ok((report, job.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((report, format)) => {
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("report serializes"),
                Format::Text => report.text.join("\n"),
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
