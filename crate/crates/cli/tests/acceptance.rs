//! Runs every acceptance criterion and prints one line each. Built without
//! the libtest harness so the lines are never captured.

use std::process::ExitCode;

use lensgeom_cli::suite::{run, summary_line};

fn main() -> ExitCode {
    let mut results = run(0, &[]);
    assert_eq!(results.len(), 12);
    // the sampled geometry criterion again, with other seeds
    for seed in [1, 2] {
        let mut r = run(seed, &[12]).remove(0);
        r.detail = format!("seed {seed}: {}", r.detail);
        results.push(r);
    }
    for r in &results {
        println!("{}", summary_line(r));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
