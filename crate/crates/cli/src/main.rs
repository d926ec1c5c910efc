use std::io::Write;
use std::process::ExitCode;

use dcl_cli::{run, Config};

fn main() -> ExitCode {
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(dcl_cli::exit::PARAMS as u8);
        }
    };
    let outcome = run(std::env::args_os(), &config);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
