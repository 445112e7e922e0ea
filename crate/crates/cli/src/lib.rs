//! File format, command dispatch and reporting for the `taumap` binary.

pub mod commands;
pub mod file;
pub mod report;

pub use commands::{load, run_command, run_path, Command, InputError, Outcome, Rendered};
pub use file::{parse_algebra_file, AlgebraFile, ParseError};
pub use report::{emit_report, Format, Report};
