use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qcweights::cli::{execute, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let outcome = match Cli::try_parse_from(&args) {
        Ok(cli) => {
            let outcome = execute(&cli);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &outcome.stdout) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_INVALID as u8);
                }
                eprint!("{}", outcome.stderr);
                return ExitCode::from(outcome.code as u8);
            }
            outcome
        }
        Err(_) => qcweights::cli::run(&args),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
