//! Command-line front end for `srg-core`.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 I/O failure.

pub mod args;
pub mod documents;
pub mod error;
pub mod iterate;
pub mod json;
pub mod parallel;
pub mod rates;
pub mod region;
pub mod suites;
pub mod svg;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command, CoeffArgs, Common};
use documents::params;
use error::CliResult;
use srg_core::srg::tight_composition_coeff;
use srg_core::DiskRegion;

/// `v` to 12 significant digits, in positional notation.
pub fn significant12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let decimals = (11 - v.abs().log10().floor() as i32).max(0) as usize;
    format!("{v:.decimals$}")
}

fn coeff(args: &CoeffArgs, _common: &Common) -> CliResult<i32> {
    let theta = tight_composition_coeff(args.theta1, args.theta2)?;
    let disk = DiskRegion::averaged(theta)?;
    if args.json {
        let doc = params([
            ("theta1", args.theta1),
            ("theta2", args.theta2),
            ("theta", theta),
            ("center", disk.center),
            ("radius", disk.radius),
        ]);
        json::emit(None, &json::to_string(&doc))?;
    } else {
        println!("theta {}", significant12(theta));
        println!("disk center {} radius {}", significant12(disk.center), significant12(disk.radius));
    }
    Ok(0)
}

pub fn dispatch(cli: &Cli) -> CliResult<i32> {
    let common = &cli.common;
    match &cli.command {
        Command::Coeff(a) => coeff(a, common),
        Command::Region(a) => region::run(a, common),
        Command::Verify(a) => suites::run(a, common),
        Command::Iterate(a) => iterate::run(a, common),
    }
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
