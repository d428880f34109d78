//! Library surface of the CLI: the algebra file format, JSON report
//! builder, and the verify-paper scenario suite.

pub mod format;
pub mod report;
pub mod scenarios;
