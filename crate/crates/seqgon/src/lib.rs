//! Std companion to `seqgon-core`: parallel grid runs, report and table
//! serialization, seeded property checks and the `seqgon` command line.

pub mod cli;
mod error;
pub mod output;
pub mod parallel;
pub mod parse;
pub mod props;

pub use error::CliError;
