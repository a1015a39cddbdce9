//! Batch front end: JSON ideal documents in, reports out.

pub mod commands;
pub mod document;
pub mod error;

pub use commands::{parse_field, run, BettiSource, Command, DegreeTarget, Flags, Report};
pub use document::{parse_document, IdealDocument, Payload};
pub use error::CliError;
