//! Recursive construction of the statement tree from tokens.
//!
//! The parser never stops at the first problem: it records an [`Issue`]
//! and carries on with the next sibling so one run reports as much as
//! possible. A tree is only handed out when no error was recorded.

use crate::model::{
    Annotation, AnnotationScope, ComponentBody, ComponentNode, ComponentSymbol, Content, ContentCombination,
    ContentFragment, Element, LogicalOperator, NestedBody, NestedChild, NestedCombination, PairCombination, Span,
    StatementTree,
};

use super::lexer::{is_word_byte, matching_square, tokenize, Token, TokenKind};
use super::report::{Issue, IssueKind, ValidationReport};

/// Validates and, when valid, parses `input`.
pub(crate) fn analyze(input: &str) -> (Option<StatementTree>, ValidationReport) {
    if input.trim().is_empty() {
        let issue = Issue::new(IssueKind::EmptyInput, Span::new(0, input.len()), "no IG Script input given");
        return (None, ValidationReport::from_issues(vec![issue]));
    }
    let bracket_issues = bracket_issues(input);
    if !bracket_issues.is_empty() {
        return (None, ValidationReport::from_issues(bracket_issues));
    }
    // Brackets are balanced, so tokenizing cannot fail.
    let tokens = match tokenize(input) {
        Ok(tokens) => tokens,
        Err(e) => {
            let super::lexer::TokenizeError::UnterminatedBracket(at) = e;
            let issue = Issue::new(IssueKind::UnbalancedBracket, Span::new(at, at + 1), e.to_string());
            return (None, ValidationReport::from_issues(vec![issue]));
        }
    };
    let mut parser = Parser::new(input, tokens);
    let mut tree = parser.statement(0, parser.tokens.len());
    tree.span = Span::new(0, input.len());
    if !tree.has_components() && !parser.issues.iter().any(Issue::is_error) {
        let trimmed_start = input.len() - input.trim_start().len();
        let span = Span::new(trimmed_start, input.trim_end().len());
        parser.issue(IssueKind::NoComponentsFound, span, "no coded component found in statement");
    }
    let report = ValidationReport::from_issues(parser.issues);
    if report.ok {
        (Some(tree), report)
    } else {
        (None, report)
    }
}

/// Validates and parses the interior of a `(...)` component body.
pub(crate) fn analyze_content(body: &str) -> (Option<Content>, ValidationReport) {
    let issues = bracket_issues(body);
    if !issues.is_empty() {
        return (None, ValidationReport::from_issues(issues));
    }
    let tokens = match tokenize(body) {
        Ok(tokens) => tokens,
        Err(e) => {
            let super::lexer::TokenizeError::UnterminatedBracket(at) = e;
            let issue = Issue::new(IssueKind::UnbalancedBracket, Span::new(at, at + 1), e.to_string());
            return (None, ValidationReport::from_issues(vec![issue]));
        }
    };
    let mut parser = Parser::new(body, tokens);
    let content = parser.content(Range { lo: 0, hi: parser.tokens.len() });
    if content.is_empty() && !parser.issues.iter().any(Issue::is_error) {
        parser.issue(IssueKind::EmptyContent, Span::new(0, body.len()), "component content is empty");
    }
    let report = ValidationReport::from_issues(parser.issues);
    if report.ok {
        (Some(content), report)
    } else {
        (None, report)
    }
}

/// Bracket balance sweep. `[...]` contents are opaque.
fn bracket_issues(input: &str) -> Vec<Issue> {
    let bytes = input.as_bytes();
    let mut issues = Vec::new();
    let mut stack: Vec<(u8, usize)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'[' => match matching_square(bytes, i) {
                Some(close) => {
                    i = close + 1;
                    continue;
                }
                None => {
                    issues.push(Issue::new(IssueKind::UnbalancedBracket, Span::new(i, i + 1), "`[` is never closed"))
                }
            },
            b']' => {
                issues.push(Issue::new(IssueKind::UnbalancedBracket, Span::new(i, i + 1), "`]` has no matching `[`"))
            }
            open @ (b'(' | b'{') => stack.push((open, i)),
            close @ (b')' | b'}') => {
                let want = if close == b')' { b'(' } else { b'{' };
                match stack.last() {
                    Some(&(open, _)) if open == want => {
                        stack.pop();
                    }
                    Some(&(open, at)) => issues.push(Issue::new(
                        IssueKind::UnbalancedBracket,
                        Span::new(i, i + 1),
                        format!("`{}` closes `{}` opened at byte {at}", close as char, open as char),
                    )),
                    None => issues.push(Issue::new(
                        IssueKind::UnbalancedBracket,
                        Span::new(i, i + 1),
                        format!("`{}` has no matching opening bracket", close as char),
                    )),
                }
            }
            _ => {}
        }
        i += 1;
    }
    for (open, at) in stack {
        issues.push(Issue::new(
            IssueKind::UnbalancedBracket,
            Span::new(at, at + 1),
            format!("`{}` is never closed", open as char),
        ));
    }
    issues
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<Token>,
    /// For every opening paren/brace token, the index of its closer.
    partner: Vec<usize>,
    issues: Vec<Issue>,
}

/// A run of tokens `lo..hi`.
#[derive(Clone, Copy, Debug)]
struct Range {
    lo: usize,
    hi: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, tokens: Vec<Token>) -> Self {
        let mut partner = vec![usize::MAX; tokens.len()];
        let mut stack = Vec::new();
        for (i, t) in tokens.iter().enumerate() {
            match t.kind {
                TokenKind::OpenParen | TokenKind::OpenBrace => stack.push(i),
                TokenKind::CloseParen | TokenKind::CloseBrace => {
                    if let Some(open) = stack.pop() {
                        partner[open] = i;
                        partner[i] = open;
                    }
                }
                _ => {}
            }
        }
        Parser { input, tokens, partner, issues: Vec::new() }
    }

    fn issue(&mut self, kind: IssueKind, span: Span, message: impl Into<String>) {
        self.issues.push(Issue::new(kind, span, message));
    }

    fn kind(&self, i: usize) -> &TokenKind {
        &self.tokens[i].kind
    }

    fn span(&self, i: usize) -> Span {
        self.tokens[i].span
    }

    fn text(&self, i: usize) -> &'a str {
        self.tokens[i].text(self.input)
    }

    fn range_span(&self, r: Range) -> Option<Span> {
        (r.lo < r.hi).then(|| self.span(r.lo).to(self.span(r.hi - 1)))
    }

    fn is_blank(&self, r: Range) -> bool {
        (r.lo..r.hi).all(|i| self.tokens[i].is_blank_text(self.input))
    }

    /// Index just past the group opened at `i`, or `i + 1` for other tokens.
    fn skip(&self, i: usize) -> usize {
        match self.kind(i) {
            TokenKind::OpenParen | TokenKind::OpenBrace => self.partner[i] + 1,
            _ => i + 1,
        }
    }

    /// Operators at the top level of `r` (not inside any paren/brace group).
    fn top_level_operators(&self, r: Range) -> Vec<(usize, LogicalOperator)> {
        let mut ops = Vec::new();
        let mut i = r.lo;
        while i < r.hi {
            if let TokenKind::Operator(op) = self.kind(i) {
                ops.push((i, *op));
            }
            i = self.skip(i);
        }
        ops
    }

    /// Splits `r` at top-level operators, reporting mixed operators and
    /// empty operands. Returns `None` when `r` holds no operator.
    fn split_on_operators(&mut self, r: Range) -> Option<(LogicalOperator, Vec<Range>)> {
        let ops = self.top_level_operators(r);
        let &(_, first) = ops.first()?;
        if let Some(&(at, other)) = ops.iter().find(|(_, op)| *op != first) {
            self.issue(
                IssueKind::AmbiguousPrecedence,
                self.span(at),
                format!("`[{first}]` and `[{other}]` combined without parentheses or braces indicating precedence"),
            );
        }
        let mut segments = Vec::with_capacity(ops.len() + 1);
        let mut lo = r.lo;
        for &(at, _) in &ops {
            segments.push(Range { lo, hi: at });
            lo = at + 1;
        }
        segments.push(Range { lo, hi: r.hi });
        for (n, seg) in segments.iter().enumerate() {
            if self.is_blank(*seg) {
                let at = if n < ops.len() { ops[n].0 } else { ops[n - 1].0 };
                self.issue(IssueKind::DanglingOperator, self.span(at), "operator is missing an operand");
            }
        }
        Some((first, segments))
    }

    /// Trailing identifier of a text token directly followed by `next`.
    fn glued_word(&self, text_idx: usize, next: usize) -> Option<Span> {
        if self.tokens[text_idx].kind != TokenKind::Text || self.span(text_idx).end != self.span(next).start {
            return None;
        }
        let text = self.text(text_idx);
        let bytes = text.as_bytes();
        let mut start = bytes.len();
        while start > 0 && (is_word_byte(bytes[start - 1]) || bytes[start - 1] == b',') {
            start -= 1;
        }
        while start < bytes.len() && bytes[start] == b',' {
            start += 1;
        }
        (start < bytes.len()).then(|| {
            let base = self.span(text_idx).start;
            Span::new(base + start, base + bytes.len())
        })
    }

    /// `Word(` / `Word{` / `Word[..](` where `Word` is not a symbol.
    /// Returns the span of the word and the index of the opening bracket.
    fn unknown_symbol_at(&self, i: usize) -> Option<(Span, usize)> {
        if i == 0 {
            return None;
        }
        let open = match self.kind(i) {
            TokenKind::OpenParen | TokenKind::OpenBrace => i,
            TokenKind::Annotation(_)
                if i + 1 < self.tokens.len()
                    && matches!(self.kind(i + 1), TokenKind::OpenParen | TokenKind::OpenBrace)
                    && self.span(i).end == self.span(i + 1).start =>
            {
                i + 1
            }
            _ => return None,
        };
        self.glued_word(i - 1, i).map(|span| (span, open))
    }

    fn statement(&mut self, lo: usize, hi: usize) -> StatementTree {
        let mut elements = Vec::new();
        let mut free = String::new();
        let flush = |free: &mut String, elements: &mut Vec<Element>| {
            let text = free.split_whitespace().collect::<Vec<_>>().join(" ");
            if !text.is_empty() {
                elements.push(Element::FreeText(text));
            }
            free.clear();
        };
        let mut i = lo;
        while i < hi {
            if let Some((word, open)) = self.unknown_symbol_at(i) {
                let code = &self.input[word.start..word.end];
                self.issue(IssueKind::UnknownSymbol, word, format!("`{code}` is not a component symbol"));
                i = self.skip(open);
                continue;
            }
            match self.kind(i).clone() {
                TokenKind::Text => {
                    free.push_str(self.text(i));
                    i += 1;
                }
                TokenKind::Symbol(_) => {
                    flush(&mut free, &mut elements);
                    let (component, next) = self.component(i);
                    if let Some(c) = component {
                        elements.push(Element::Component(c));
                    }
                    i = next;
                }
                TokenKind::Annotation(text) => {
                    flush(&mut free, &mut elements);
                    elements.push(Element::Annotation(Annotation::new(text, AnnotationScope::Statement)));
                    i += 1;
                }
                TokenKind::Operator(op) => {
                    self.issue(
                        IssueKind::UnexpectedOperator,
                        self.span(i),
                        format!("`[{op}]` outside of a combination; wrap the combined parts in parentheses or braces"),
                    );
                    i += 1;
                }
                TokenKind::OpenBrace => {
                    flush(&mut free, &mut elements);
                    if let Some(pair) = self.pair(i) {
                        elements.push(Element::Pair(pair));
                    }
                    i = self.skip(i);
                }
                TokenKind::OpenParen => {
                    // Uncoded parenthetical prose. It must stay plain text
                    // so it can be folded into component content later.
                    let close = self.partner[i];
                    self.check_prose(Range { lo: i + 1, hi: close });
                    free.push_str(&self.input[self.span(i).start..self.span(close).end]);
                    i = close + 1;
                }
                TokenKind::CloseParen | TokenKind::CloseBrace => i += 1,
            }
        }
        flush(&mut free, &mut elements);
        let span =
            Span::new(self.tokens.get(lo).map_or(0, |t| t.span.start), if hi > lo { self.span(hi - 1).end } else { 0 });
        StatementTree { elements, span }
    }

    /// Reports coding syntax inside uncoded parenthetical prose.
    fn check_prose(&mut self, r: Range) {
        for i in r.lo..r.hi {
            let (kind, message) = match self.kind(i) {
                TokenKind::Operator(_) => (IssueKind::UnexpectedOperator, "operator inside uncoded parentheses"),
                TokenKind::Annotation(_) => (IssueKind::UnexpectedAnnotation, "annotation inside uncoded parentheses"),
                TokenKind::OpenBrace => (IssueKind::UnexpectedBrace, "brace inside uncoded parentheses"),
                _ => continue,
            };
            self.issue(kind, self.span(i), message);
        }
    }

    /// Parses the component starting with the symbol token at `i`.
    /// Returns the node (if well-formed) and the index after it.
    fn component(&mut self, i: usize) -> (Option<ComponentNode>, usize) {
        let TokenKind::Symbol(symbol) = *self.kind(i) else {
            unreachable!("component() called on non-symbol token");
        };
        let mut open = i + 1;
        let annotation = match self.kind(open) {
            TokenKind::Annotation(text) => {
                let text = text.clone();
                open += 1;
                Some(text)
            }
            _ => None,
        };
        let close = self.partner[open];
        let whole = self.span(i).to(self.span(close));
        let inner = Range { lo: open + 1, hi: close };
        let (body, scope) = match self.kind(open) {
            TokenKind::OpenParen => {
                let content = self.content(inner);
                if content.is_empty() {
                    self.issue(IssueKind::EmptyContent, whole, format!("component `{symbol}` has no content"));
                    return (None, close + 1);
                }
                (ComponentBody::Content(content), AnnotationScope::Component)
            }
            TokenKind::OpenBrace => {
                if symbol.is_property() {
                    self.issue(
                        IssueKind::NestedProperty,
                        self.span(i),
                        format!("property component `{symbol}` holds a nested statement"),
                    );
                }
                let Some(body) = self.nested_body(symbol, inner, self.span(open).to(self.span(close))) else {
                    return (None, close + 1);
                };
                let scope = match body {
                    NestedBody::Statement(_) => AnnotationScope::NestedComponent,
                    NestedBody::Combination(_) => AnnotationScope::Combination,
                };
                (ComponentBody::Nested(body), scope)
            }
            _ => unreachable!("lexer only emits symbols followed by a body"),
        };
        let annotation = annotation.map(|text| Annotation::new(text, scope));
        (Some(ComponentNode { symbol, annotation, body }), close + 1)
    }

    /// Body of `(...)`: text, inline groups and top-level operators.
    fn content(&mut self, r: Range) -> Content {
        match self.split_on_operators(r) {
            None => self.sequence(r),
            Some((operator, segments)) => {
                let mut alternatives = Vec::with_capacity(segments.len());
                for seg in segments {
                    let alt = self.sequence(seg);
                    if alt.is_empty() {
                        if !self.is_blank(seg) {
                            let span = self.range_span(seg).unwrap_or_default();
                            self.issue(IssueKind::EmptyContent, span, "combination alternative has no content");
                        }
                        continue;
                    }
                    alternatives.push(alt);
                }
                Content::group(ContentCombination { operator, alternatives })
            }
        }
    }

    /// Operator-free run of content: text and parenthesized groups.
    fn sequence(&mut self, r: Range) -> Content {
        let mut fragments = Vec::new();
        let mut i = r.lo;
        while i < r.hi {
            match self.kind(i).clone() {
                TokenKind::Text | TokenKind::Symbol(_) => {
                    fragments.push(ContentFragment::Text(self.text(i).to_string()));
                    i += 1;
                }
                TokenKind::OpenParen => {
                    let close = self.partner[i];
                    let inner = self.content(Range { lo: i + 1, hi: close });
                    if inner.as_single_group().is_some() {
                        fragments.extend(inner.fragments);
                    } else {
                        // Parentheses without an operator are plain text.
                        fragments.push(ContentFragment::Text("(".into()));
                        fragments.extend(inner.fragments);
                        fragments.push(ContentFragment::Text(")".into()));
                    }
                    i = close + 1;
                }
                TokenKind::OpenBrace => {
                    self.issue(
                        IssueKind::UnexpectedBrace,
                        self.span(i),
                        "braces are not allowed inside parenthesized content; use `symbol{...}` for nesting",
                    );
                    i = self.skip(i);
                }
                TokenKind::Annotation(_) => {
                    self.issue(
                        IssueKind::UnexpectedAnnotation,
                        self.span(i),
                        "annotations go between the component symbol and its bracket, not inside content",
                    );
                    i += 1;
                }
                TokenKind::Operator(_) => {
                    // Only reachable through split segments, which hold none.
                    i += 1;
                }
                TokenKind::CloseParen | TokenKind::CloseBrace => i += 1,
            }
        }
        Content::normalized(fragments)
    }

    /// Body of `symbol{...}`: nested statement, same-kind nested component
    /// combination, or component pair combination.
    fn nested_body(&mut self, symbol: ComponentSymbol, r: Range, braces: Span) -> Option<NestedBody> {
        let ops = self.top_level_operators(r);
        if ops.is_empty() {
            let statement = self.statement(r.lo, r.hi);
            if !statement.has_components() {
                self.issue(
                    IssueKind::NoComponentsFound,
                    braces,
                    format!("nested `{symbol}` statement contains no coded component"),
                );
                return None;
            }
            return Some(NestedBody::Statement(statement));
        }
        let segments: Vec<Range> = self.plain_segments(r);
        let shapes: Option<Vec<Vec<(ComponentSymbol, Span)>>> =
            segments.iter().map(|s| self.combination_symbols(*s)).collect();
        if let Some(shapes) = shapes {
            let symbols: Vec<_> = shapes.into_iter().flatten().collect();
            let matching = symbols.iter().filter(|(s, _)| *s == symbol).count();
            if matching == symbols.len() {
                return self.nested_combination(r).map(NestedBody::Combination);
            }
            if matching > 0 {
                let (other, span) = symbols.iter().find(|(s, _)| *s != symbol).copied().unwrap_or((symbol, braces));
                self.issue(
                    IssueKind::SymbolMismatch,
                    span,
                    format!("`{other}` inside a combination of nested `{symbol}` components"),
                );
                return None;
            }
        }
        self.pair_branches(r, braces).map(|pair| NestedBody::Statement(StatementTree::new(vec![Element::Pair(pair)])))
    }

    /// Splits at top-level operators without reporting anything.
    fn plain_segments(&self, r: Range) -> Vec<Range> {
        let mut segments = Vec::new();
        let mut lo = r.lo;
        for (at, _) in self.top_level_operators(r) {
            segments.push(Range { lo, hi: at });
            lo = at + 1;
        }
        segments.push(Range { lo, hi: r.hi });
        segments
    }

    /// If `r` is exactly one component, or one brace group made only of
    /// such components, returns the symbols involved.
    fn combination_symbols(&self, r: Range) -> Option<Vec<(ComponentSymbol, Span)>> {
        let significant: Vec<usize> = {
            let mut v = Vec::new();
            let mut i = r.lo;
            while i < r.hi {
                if !self.tokens[i].is_blank_text(self.input) {
                    v.push(i);
                }
                i = match self.kind(i) {
                    TokenKind::Symbol(_) => {
                        let open = if matches!(self.kind(i + 1), TokenKind::Annotation(_)) { i + 2 } else { i + 1 };
                        self.partner[open] + 1
                    }
                    _ => self.skip(i),
                };
            }
            v
        };
        let [only] = significant.as_slice() else {
            return None;
        };
        match self.kind(*only) {
            TokenKind::Symbol(s) => Some(vec![(*s, self.span(*only))]),
            TokenKind::OpenBrace => {
                let inner = Range { lo: only + 1, hi: self.partner[*only] };
                if self.top_level_operators(inner).is_empty() {
                    return None;
                }
                let parts: Option<Vec<_>> =
                    self.plain_segments(inner).into_iter().map(|s| self.combination_symbols(s)).collect();
                parts.map(|p| p.into_iter().flatten().collect())
            }
            _ => None,
        }
    }

    fn nested_combination(&mut self, r: Range) -> Option<NestedCombination> {
        let (operator, segments) = self.split_on_operators(r)?;
        let mut children = Vec::with_capacity(segments.len());
        for seg in segments {
            let Some(at) = (seg.lo..seg.hi).find(|&i| !self.tokens[i].is_blank_text(self.input)) else {
                continue;
            };
            match self.kind(at) {
                TokenKind::Symbol(_) => {
                    if let (Some(c), _) = self.component(at) {
                        children.push(NestedChild::Component(c));
                    }
                }
                TokenKind::OpenBrace => {
                    let inner = Range { lo: at + 1, hi: self.partner[at] };
                    if let Some(nc) = self.nested_combination(inner) {
                        children.push(NestedChild::Combination(nc));
                    }
                }
                _ => {}
            }
        }
        Some(NestedCombination { operator, children })
    }

    /// Statement-level `{...}` at token `open`.
    fn pair(&mut self, open: usize) -> Option<PairCombination> {
        let close = self.partner[open];
        let braces = self.span(open).to(self.span(close));
        self.pair_branches(Range { lo: open + 1, hi: close }, braces)
    }

    fn pair_branches(&mut self, r: Range, braces: Span) -> Option<PairCombination> {
        let Some((operator, segments)) = self.split_on_operators(r) else {
            self.issue(
                IssueKind::MissingOperator,
                braces,
                "brace group without a logical operator; component pairs must be linked by [AND], [OR] or [XOR]",
            );
            return None;
        };
        let mut branches = Vec::with_capacity(segments.len());
        for seg in segments {
            if self.is_blank(seg) {
                continue;
            }
            let branch = self.statement(seg.lo, seg.hi);
            if !branch.has_components() {
                let span = self.range_span(seg).unwrap_or(braces);
                self.issue(IssueKind::NoComponentsFound, span, "combined component group contains no coded component");
                continue;
            }
            branches.push(branch);
        }
        Some(PairCombination { operator, branches })
    }
}
