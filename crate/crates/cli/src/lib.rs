//! Library side of the `quasiorth` command-line tool: the JSON document
//! format, text/PBM/PPM exports, the generation benchmark and the command
//! implementations.

pub mod bench;
pub mod commands;
pub mod document;
pub mod error;
pub mod render;

pub use commands::{run, Cli, Status};
pub use document::{Kind, Matrix, MatrixDocument};
pub use error::CliError;
