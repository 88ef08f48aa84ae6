//! File formats and commands behind the `fdim` binary.

pub mod commands;
pub mod document;
pub mod dot;
pub mod error;
pub mod graph_io;

pub use commands::{run, Cli};
pub use error::{CliError, Result};

/// Version tag carried by every document.
pub const VERSION: &str = "fdim/1";
