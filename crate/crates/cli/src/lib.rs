//! Command-line front end for the `peakalg` library.

pub mod commands;
pub mod config;
pub mod literal;
pub mod output;
pub mod report;
pub mod suites;

/// Anything that aborts a command before it produces a result. All of these
/// exit with status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] peakalg::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
