use std::fmt;

use serde::Serialize;

use crate::model::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IssueKind {
    /// Input is empty or whitespace only.
    EmptyInput,
    /// `(`, `{` or `[` without its partner, or a closer of the wrong kind.
    UnbalancedBracket,
    /// A word directly followed by `(` or `{` that is not a component symbol.
    UnknownSymbol,
    /// `A()` or a combination alternative with nothing in it.
    EmptyContent,
    /// Different operators side by side without parentheses/braces.
    AmbiguousPrecedence,
    /// Operator with no operand on one side.
    DanglingOperator,
    /// Brace group without the operator a combination needs.
    MissingOperator,
    /// Operator outside of any combination group.
    UnexpectedOperator,
    /// Nested component combination mixing component kinds.
    SymbolMismatch,
    /// Annotation where only content or an operator may appear.
    UnexpectedAnnotation,
    /// Brace inside parenthesized component content.
    UnexpectedBrace,
    /// Statement (or nested statement) without any coded component.
    NoComponentsFound,
    /// Property component with a nested body; accepted with a warning.
    NestedProperty,
}

impl IssueKind {
    pub fn severity(self) -> Severity {
        match self {
            IssueKind::NestedProperty => Severity::Warning,
            _ => Severity::Error,
        }
    }
}

impl fmt::Display for IssueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub kind: IssueKind,
    pub severity: Severity,
    pub message: String,
    /// Byte offset into the input.
    pub position: usize,
    /// Length in bytes of the offending slice.
    pub length: usize,
}

impl Issue {
    pub fn new(kind: IssueKind, span: Span, message: impl Into<String>) -> Self {
        Issue { kind, severity: kind.severity(), message: message.into(), position: span.start, length: span.len() }
    }

    pub fn span(&self) -> Span {
        Span::new(self.position, self.position + self.length)
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}: {}", self.kind, self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub(crate) fn from_issues(mut issues: Vec<Issue>) -> Self {
        issues.sort_by_key(|i| (i.position, i.length));
        issues.dedup();
        ValidationReport { ok: !issues.iter().any(Issue::is_error), issues }
    }

    pub fn errors(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| i.is_error())
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| !i.is_error())
    }

    pub fn first_error(&self) -> Option<&Issue> {
        self.errors().next()
    }

    pub fn summary(&self) -> String {
        match self.first_error() {
            Some(issue) => {
                let more = self.errors().count() - 1;
                if more > 0 {
                    format!("{issue} (and {more} more)")
                } else {
                    issue.to_string()
                }
            }
            None => "valid".to_string(),
        }
    }
}
