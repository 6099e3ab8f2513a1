//! Command-line front end for `fracosc`.
//!
//! Every subcommand builds one document (CSV or JSON) in memory and writes
//! it in a single step. Exit status: 0 on success, 1 on numerical failure
//! or a failed verification, 2 on invalid arguments.

pub mod args;
pub mod commands;
pub mod output;
pub mod parallel;

use args::{Cli, Command};

/// Failure categories, mapped to exit codes by [`CliError::exit_code`].
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numerical(#[from] fracosc::Error),
    #[error("refusing to emit a non-finite number")]
    NonFinite,
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// A rendered document and whether the command's own checks passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: String,
    pub success: bool,
}

/// Runs the command and returns its document without writing it.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let threads = parallel::resolve_threads(cli.threads);
    match &cli.command {
        Command::Table(a) => commands::table(a),
        Command::Decompose(a) => commands::decompose(a),
        Command::Zeros(a) => commands::zeros(a),
        Command::Verify(a) => commands::verify(a),
        Command::Mc(a) => commands::mc(a, threads),
    }
}

/// Runs the command and writes its document to the requested destination.
pub fn execute(cli: &Cli) -> Result<bool, CliError> {
    let outcome = run(cli)?;
    let path = match &cli.command {
        Command::Table(a) => &a.out.output_path,
        Command::Decompose(a) => &a.out.output_path,
        Command::Zeros(a) => &a.out.output_path,
        Command::Verify(a) => &a.out.output_path,
        Command::Mc(a) => &a.out.output_path,
    };
    output::emit(&outcome.document, path.as_deref())?;
    Ok(outcome.success)
}
