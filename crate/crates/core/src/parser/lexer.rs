use thiserror::Error;

use crate::model::{ComponentSymbol, LogicalOperator, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Symbol(ComponentSymbol),
    OpenParen,
    CloseParen,
    OpenBrace,
    CloseBrace,
    Operator(LogicalOperator),
    /// `[...]` that is not an operator; holds the trimmed inner text.
    Annotation(String),
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

impl Token {
    pub fn text<'a>(&self, input: &'a str) -> &'a str {
        &input[self.span.start..self.span.end]
    }

    pub(crate) fn is_blank_text(&self, input: &str) -> bool {
        self.kind == TokenKind::Text && self.text(input).trim().is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TokenizeError {
    #[error("unterminated `[` at byte {0}")]
    UnterminatedBracket(usize),
}

/// Splits `input` into tokens whose spans tile the input exactly.
///
/// A component symbol is only recognized when it starts a word and is
/// directly followed by `(`, `{`, or an annotation and then `(`/`{`.
/// Everything else that is not a bracket is text.
pub fn tokenize(input: &str) -> Result<Vec<Token>, TokenizeError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut text_start: Option<usize> = None;
    let mut i = 0;

    let flush = |tokens: &mut Vec<Token>, text_start: &mut Option<usize>, end: usize| {
        if let Some(start) = text_start.take() {
            tokens.push(Token { kind: TokenKind::Text, span: Span::new(start, end) });
        }
    };

    while i < bytes.len() {
        let single = match bytes[i] {
            b'(' => Some(TokenKind::OpenParen),
            b')' => Some(TokenKind::CloseParen),
            b'{' => Some(TokenKind::OpenBrace),
            b'}' => Some(TokenKind::CloseBrace),
            _ => None,
        };
        if let Some(kind) = single {
            flush(&mut tokens, &mut text_start, i);
            tokens.push(Token { kind, span: Span::new(i, i + 1) });
            i += 1;
            continue;
        }
        if bytes[i] == b'[' {
            flush(&mut tokens, &mut text_start, i);
            let close = matching_square(bytes, i).ok_or(TokenizeError::UnterminatedBracket(i))?;
            let inner = input[i + 1..close].trim();
            let kind = match LogicalOperator::from_token(inner) {
                Some(op) => TokenKind::Operator(op),
                None => TokenKind::Annotation(inner.to_string()),
            };
            tokens.push(Token { kind, span: Span::new(i, close + 1) });
            i = close + 1;
            continue;
        }
        if let Some(symbol) = symbol_at(input, i) {
            flush(&mut tokens, &mut text_start, i);
            let end = i + symbol.code().len();
            tokens.push(Token { kind: TokenKind::Symbol(symbol), span: Span::new(i, end) });
            i = end;
            continue;
        }
        text_start.get_or_insert(i);
        // Advance a whole character so spans stay on UTF-8 boundaries.
        i += input[i..].chars().next().map_or(1, char::len_utf8);
    }
    flush(&mut tokens, &mut text_start, bytes.len());
    Ok(tokens)
}

/// Index of the `]` closing the `[` at `open`, honoring nested brackets.
pub(crate) fn matching_square(bytes: &[u8], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (offset, &b) in bytes[open..].iter().enumerate() {
        match b {
            b'[' => depth += 1,
            b']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + offset);
                }
            }
            _ => {}
        }
    }
    None
}

pub(crate) fn is_word_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

fn symbol_at(input: &str, i: usize) -> Option<ComponentSymbol> {
    let bytes = input.as_bytes();
    if i > 0 && (is_word_byte(bytes[i - 1]) || !input.is_char_boundary(i)) {
        return None;
    }
    // Non-ASCII word characters also glue onto a following code.
    if i > 0 && input[..i].chars().next_back().is_some_and(char::is_alphanumeric) {
        return None;
    }
    let rest = &input[i..];
    ComponentSymbol::BY_CODE_LENGTH
        .iter()
        .copied()
        .find(|s| rest.starts_with(s.code()) && opens_body(bytes, i + s.code().len()))
}

fn opens_body(bytes: &[u8], at: usize) -> bool {
    match bytes.get(at) {
        Some(b'(' | b'{') => true,
        Some(b'[') => matching_square(bytes, at).is_some_and(|close| matches!(bytes.get(close + 1), Some(b'(' | b'{'))),
        _ => false,
    }
}
