//! Command-line front end for `hyperlift-core`.
//!
//! [`cmd_run`] parses an argument vector, runs one subcommand and returns
//! the exit code together with the rendered report, so the binary is a thin
//! wrapper and tests can drive the whole pipeline in process.

mod args;
mod commands;
mod dto;
mod parse;

use std::fs;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use thiserror::Error;

use hyperlift_core::Error as CoreError;

pub use args::{Cli, Command};
pub use dto::ErrorRecord;
pub use parse::{parse_curve, parse_lambdas, parse_quad, CurvePayload};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource_bound() => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => dto::core_error_kind(e),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A finished run: what to print on standard output and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// A rendered subcommand result.
pub(crate) struct Rendered {
    pub json: serde_json::Value,
    pub text: String,
}

impl Rendered {
    pub fn new<T: Serialize>(value: &T, text: String) -> Self {
        Rendered {
            json: serde_json::to_value(value).expect("report serializes"),
            text,
        }
    }
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn cmd_run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                };
            }
            let err = CliError::Usage(e.to_string().trim().to_string());
            return failure(&err, false);
        }
    };
    let text = cli.text;
    let started = Instant::now();
    let rendered = match commands::dispatch(&cli) {
        Ok(r) => r,
        Err(e) => return failure(&e, text),
    };
    let body = if text {
        format!(
            "{}elapsed: {:.3} s\n",
            rendered.text,
            started.elapsed().as_secs_f64()
        )
    } else {
        to_json(&rendered.json)
    };
    match &cli.out {
        Some(path) => match fs::write(path, &body) {
            Ok(()) => Outcome {
                code: EXIT_OK,
                stdout: String::new(),
            },
            Err(e) => failure(
                &CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                },
                text,
            ),
        },
        None => Outcome {
            code: EXIT_OK,
            stdout: body,
        },
    }
}

fn failure(err: &CliError, text: bool) -> Outcome {
    let code = err.exit_code();
    let stdout = if text {
        format!("error ({}): {err}\n", err.kind())
    } else {
        to_json(&serde_json::to_value(ErrorRecord::new(err)).expect("record serializes"))
    };
    Outcome { code, stdout }
}
