//! Library half of the `fdpi` command-line tool.

mod commands;
pub mod format;

pub use commands::{exit_code, run, Cli, Usage};
