//! Command-line front end for `morita-core`: a JSON document format,
//! validation reports and the `check`, `build`, `verify-morita` and
//! `oracle` commands.

pub mod cli;
pub mod commands;
pub mod doc;
pub mod error;
pub mod export;
pub mod load;
pub mod report;

pub use cli::{run, Cli};
pub use commands::{Output, Settings};
pub use error::CliError;
