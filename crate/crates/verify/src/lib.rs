//! Reports for the second-largest maximal cliques of Paley graphs `P(q^2)`:
//! census, orbit classification and checks of the named constructions.

pub mod census;
pub mod cli;
pub mod formats;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::cli::{Cli, RunConfig};
use crate::report::{run_command, RunError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs a configured command and writes its report. Returns the exit code.
pub fn run(cfg: &RunConfig) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let out = match pool.install(|| run_command(cfg)) {
        Ok(out) => out,
        Err(RunError::Usage(m)) => {
            eprintln!("error: {m}");
            return EXIT_USAGE;
        }
        Err(RunError::Check(m)) => {
            eprintln!("check failed: {m}");
            return EXIT_MISMATCH;
        }
        Err(RunError::Io(e)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &out.body),
        None => std::io::stdout().lock().write_all(out.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    for m in &out.mismatches {
        eprintln!("mismatch: {m}");
    }
    if out.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Parses arguments (including the program name) and runs.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.config() {
        Ok(cfg) => run(&cfg),
        Err(m) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
    }
}
