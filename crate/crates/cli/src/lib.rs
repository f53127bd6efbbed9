//! Command-line front end for `lensgeom`.
//!
//! [`run`] parses arguments, executes one subcommand and renders a report;
//! the binary only prints the result. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error |
//! | 2 | precondition violated |
//! | 3 | cannot decide at the requested accuracy |
//! | 4 | an acceptance criterion failed |

pub mod commands;
pub mod report;
pub mod suite;

use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use lensgeom::Error;

use crate::commands::{Cli, Command, Format};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;
pub const EXIT_SUITE_FAILED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) | Error::Neighbourhood { .. } | Error::Overflow(_) => EXIT_PRECONDITION,
        Error::Indeterminate { .. } | Error::Quadrature { .. } => EXIT_INDETERMINATE,
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };

    let start = Instant::now();
    let (inputs, output) = match commands::execute(&cli.command, &cli.config) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: exit_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let elapsed = start.elapsed().as_secs_f64();

    let mut code = EXIT_OK;
    let mut stderr = String::new();
    if let Command::Suite(_) = cli.command {
        if output.fields.map().get("all_passed").and_then(|v| v.as_bool()) != Some(true) {
            code = EXIT_SUITE_FAILED;
            stderr.push_str("error: acceptance suite failed\n");
        }
    }

    let report = Report {
        command: cli.command.name().to_string(),
        argv: argv.iter().skip(1).cloned().collect(),
        config: cli.config.fields(),
        inputs,
        output,
        wall_time: cli.config.timing.then_some(elapsed),
    };
    let text = match cli.config.format {
        Format::Json => report.render_json(),
        Format::Csv => report.render_csv(),
    };
    match &cli.config.out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: text, stderr },
    }
}
