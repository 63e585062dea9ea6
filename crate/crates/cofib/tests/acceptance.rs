//! Runs the nine acceptance checks, one line each, and fails if any does.

use std::process::ExitCode;

use cofib::suite::{run_criterion, DEFAULT_SEED};

fn main() -> ExitCode {
    let mut failed = 0;
    println!("\nacceptance criteria");
    for id in 1..=9 {
        let r = run_criterion(id, DEFAULT_SEED);
        println!("{}", r.line());
        failed += !r.passed as usize;
    }
    println!("{} passed, {failed} failed\n", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
