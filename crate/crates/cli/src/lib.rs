//! Command-line front end for `stabcode`.
//!
//! [`execute`] runs one parsed command and returns a [`Report`]; the binary
//! prints it as text or JSON and maps failures to exit codes.

pub mod args;
pub mod report;
mod run;

pub use args::{Cli, Command};
pub use report::{CodeSummary, Payload, Report};
pub use run::{execute, CliError, EXIT_BUDGET, EXIT_INVALID, EXIT_OK};
