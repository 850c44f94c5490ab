//! Command-line reports over the `chowquot` library: one section per
//! acceptance criterion, canonical JSON output and golden-file comparison.

pub mod cli;
pub mod report;
pub mod sections;

pub use cli::{build_report, execute, run, Cli, EXIT_INVALID, EXIT_MISMATCH, EXIT_PASS};
pub use report::{compare_golden, CheckRecord, Discrepancy, ReportDocument, Section};
pub use sections::Params;
