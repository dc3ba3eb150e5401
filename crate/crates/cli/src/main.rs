use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use susy_fisheye_cli::{run, Cli, CliError, Outcome};

fn write(outcome: &Outcome) -> Result<(), CliError> {
    match &outcome.output {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(outcome.text.as_bytes())
            .map_err(|e| CliError::Runtime(format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap already prefixes its diagnostics with `error:`
            let _ = e.print();
            return ExitCode::from(susy_fisheye_cli::EXIT_CONFIG as u8);
        }
    };
    let result = run(&cli).and_then(|outcome| write(&outcome).map(|()| outcome));
    match result {
        Ok(outcome) => {
            if !outcome.passed {
                eprintln!("error: verification failed");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
