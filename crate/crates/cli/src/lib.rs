//! Command-line front end for `liftcode`: argument parsing, file formats and
//! the commands themselves. `main` only parses, runs and maps the exit code.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod stats;

pub use cli::Cli;
pub use commands::{run, Outcome};
pub use error::{CliError, CliResult};
