//! File format, reports and commands behind the `ternalg` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{fixture, run, Cli, FIXTURE_NAMES};
pub use error::CliError;
pub use format::{parse, serialize, Structure};
