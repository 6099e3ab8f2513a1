use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use fracosc_cli::args::Cli;
use fracosc_cli::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match fracosc_cli::execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(CliError::Usage(msg)) => Cli::command().error(ErrorKind::ValueValidation, msg).exit(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
