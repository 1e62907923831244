//! Library side of the `plucker` binary: variety files, suites, reports and
//! the single-computation commands.

pub mod commands;
pub mod error;
pub mod report;
pub mod suite;
pub mod variety;

pub use error::CliError;
