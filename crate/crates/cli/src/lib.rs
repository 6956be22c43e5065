//! File formats and reports for the `hopfcalc` command-line tool.

pub mod files;
pub mod report;
