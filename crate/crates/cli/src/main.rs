mod cli;
mod commands;
mod export;
mod pipeline;
mod report;

use std::process::ExitCode;

use clap::Parser;

use crate::cli::{Cli, Command};

fn main() -> ExitCode {
    let args = Cli::parse();
    let outcome = match &args.command {
        Command::Analyze(a) => commands::cmd_analyze(a),
        Command::Srg(a) => commands::cmd_srg(a),
        Command::Scheme(a) => commands::cmd_scheme(a),
        Command::Rank(a) => commands::cmd_rank(a),
        Command::ReproduceTables(a) => commands::cmd_tables(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(usage) => {
            eprintln!("error: {usage}");
            ExitCode::from(2)
        }
    }
}
