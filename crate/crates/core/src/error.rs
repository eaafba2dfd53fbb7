use thiserror::Error;

use crate::parser::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown component symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unknown level of expressiveness `{0}` (expected core, extended or logico)")]
    UnknownLevel(String),
    #[error("{0}")]
    InvalidId(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("statement expands into {count} variants, more than the limit of {limit}")]
    ExpansionLimit { count: u64, limit: u64 },
}

/// Input failed validation. Carries the full report.
#[derive(Debug, Clone, Error)]
#[error("{}", .report.summary())]
pub struct ParseError {
    pub report: ValidationReport,
}
