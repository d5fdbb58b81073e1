use std::io;
use std::process::ExitCode;

use clap::Parser;

use qca::app::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli, &mut io::stdout().lock(), &mut io::stderr()).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    });
    ExitCode::from(code as u8)
}
