//! File formats and command implementations behind the `rootminor` binary.

pub mod commands;
pub mod document;
pub mod instance;

pub use commands::{run, run_args, Cli, Outcome};
