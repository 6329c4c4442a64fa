use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use dual_artin_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(3);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout();
            if stdout.write_all(outcome.output.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, outcome.output.as_bytes()) {
                    eprintln!("error writing {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
