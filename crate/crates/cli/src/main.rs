use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coulombkit::commands::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("COULOMBKIT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let outcome = execute(&cli);
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    ExitCode::from(outcome.code)
}
