//! `tconj`: exact twisted-conjugacy computations from the command line.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{heis, rep, twisted, wreath};
use output::{CliError, CommandOutput};

#[derive(Parser)]
#[command(
    name = "tconj",
    version,
    about = "Exact twisted conjugacy classes, Reidemeister numbers, Heisenberg representations and wreath products",
    propagate_version = true
)]
struct Cli {
    /// Emit one JSON document (command, inputs, result, version) on stdout
    #[arg(long, global = true)]
    json: bool,

    /// Write the result to a file: JSON, or CSV when the path ends in .csv
    /// (tables only)
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discrete Heisenberg group arithmetic
    #[command(subcommand)]
    Heis(heis::HeisCmd),
    /// Twisted conjugacy classes and Reidemeister numbers
    #[command(subcommand)]
    Twisted(twisted::TwistedCmd),
    /// Irreducible unitary representations and characters
    #[command(subcommand)]
    Rep(rep::RepCmd),
    /// Wreath products of abelian groups with Z
    #[command(subcommand)]
    Wreath(wreath::WreathCmd),
}

fn run(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Heis(cmd) => heis::run(cmd),
        Command::Twisted(cmd) => twisted::run(cmd),
        Command::Rep(cmd) => rep::run(cmd),
        Command::Wreath(cmd) => wreath::run(cmd),
    }
}

/// Prints without panicking when the reader closes the pipe early.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                emit(&out.envelope_json());
            } else {
                emit(out.human());
            }
            if let Some(path) = &cli.out {
                if let Err(e) = out.write_to(path) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Diagnostic(msg)) => {
            eprintln!("diagnostic: {msg}");
            ExitCode::from(3)
        }
    }
}
