use std::io;
use std::process::ExitCode;

use clap::Parser;
use cobweb::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let mut out = io::stdout().lock();
    match run(&cli, &mut stdin.lock(), &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cobweb: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
