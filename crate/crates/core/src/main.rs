use std::process::ExitCode;

use clap::Parser;
use staircase::cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(result) => {
            print!("{}", render(&result, cli.json));
            for note in &result.diagnostics {
                eprintln!("{note}");
            }
            ExitCode::from(result.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
