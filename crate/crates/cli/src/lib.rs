//! File formats, reports and command implementations for the `tlz` tool.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use error::{CliError, Result};
pub use format::{AlgebraFile, Document, Meta};
pub use report::ReportFile;
