//! Validation, tokenization, parsing and canonical serialization of IG Script.
//!
//! All positions are byte offsets into the UTF-8 input.

mod grammar;
mod lexer;
mod report;
mod serialize;

pub use lexer::{tokenize, Token, TokenKind, TokenizeError};
pub use report::{Issue, IssueKind, Severity, ValidationReport};
pub use serialize::{serialize, serialize_content};

use crate::error::ParseError;
use crate::model::{ContentFragment, StatementTree};

/// Checks `input` for syntactic problems. Accepts any string and never
/// panics; problems are returned as data.
pub fn validate(input: &str) -> ValidationReport {
    grammar::analyze(input).1
}

/// Parses `input` into a statement tree, or returns the validation report
/// explaining why it cannot.
pub fn parse(input: &str) -> Result<StatementTree, ParseError> {
    match grammar::analyze(input) {
        (Some(tree), _) => Ok(tree),
        (None, report) => Err(ParseError { report }),
    }
}

/// Like [`parse`], but also hands back warnings for valid input.
pub fn parse_with_report(input: &str) -> Result<(StatementTree, ValidationReport), ParseError> {
    match grammar::analyze(input) {
        (Some(tree), report) => Ok((tree, report)),
        (None, report) => Err(ParseError { report }),
    }
}

/// Splits the interior of a parenthesized component body into literal text
/// and inline combination groups. Issue positions refer to `body`.
pub fn parse_content(body: &str) -> Result<Vec<ContentFragment>, ParseError> {
    match grammar::analyze_content(body) {
        (Some(content), _) => Ok(content.fragments),
        (None, report) => Err(ParseError { report }),
    }
}
