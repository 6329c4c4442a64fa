//! Library surface of the CLI: file formats, the artifact cache, and the
//! subcommand implementations. The binary in `main.rs` is a thin wrapper,
//! so integration tests can drive everything in-process as well.

pub mod cache;
pub mod commands;
pub mod formats;

pub use commands::{execute, Cli, Command, Outcome};
