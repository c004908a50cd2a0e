//! Command-line front end: argument parsing, dispatch and JSON reports.

pub mod app;
pub mod report;

pub use app::{run, Cli, Outcome};
