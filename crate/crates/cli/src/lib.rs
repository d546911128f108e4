//! Library side of the `kf` command: wire formats and the commands, kept
//! free of process I/O so they can be tested directly.

pub mod commands;
pub mod error;
pub mod wire;

pub use commands::{classify, decide, export, locus, semigroup, sweep, Response, SweepGrid};
pub use error::{CliError, CliResult};
