//! Command-line front end for `k3lattice`.
//!
//! Every subcommand reads JSON (a file path, inline JSON, or stdin) and
//! writes JSON to stdout. Exit codes: 0 on success, 1 when the library
//! reports a domain error, 2 for usage or malformed input.

mod args;
pub mod codec;
mod commands;
mod table;

use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files or malformed documents.
    Input(String),
    Domain(k3lattice::Error),
}

impl From<k3lattice::Error> for CliError {
    fn from(e: k3lattice::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

/// Output of a successful command.
pub enum Output {
    Json(serde_json::Value),
    Text(String),
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match commands::dispatch(&cli, stdin) {
        Ok(Output::Json(v)) => {
            let text = if cli.table {
                table::to_table(&v)
            } else {
                format!("{v}\n")
            };
            let _ = write!(stdout, "{text}");
            0
        }
        Ok(Output::Text(t)) => {
            let _ = write!(stdout, "{t}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
