//! The statement tree produced by the parser.
//!
//! Trees carry no source positions below the root, so two trees compare
//! equal whenever they encode the same statement, regardless of spacing
//! in the text they were parsed from.

use serde::Serialize;

use super::symbol::{ComponentSymbol, Level, LogicalOperator};

/// Byte range into the parsed input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

/// Where an annotation is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum AnnotationScope {
    Component,
    NestedComponent,
    Combination,
    Statement,
}

/// Contents of a `[...]` label, without the brackets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Annotation {
    pub text: String,
    pub scope: AnnotationScope,
}

impl Annotation {
    pub fn new(text: impl Into<String>, scope: AnnotationScope) -> Self {
        Annotation { text: text.into(), scope }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ContentFragment {
    Text(String),
    Group(ContentCombination),
}

/// Operator-linked alternatives inside a component's parentheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentCombination {
    pub operator: LogicalOperator,
    pub alternatives: Vec<Content>,
}

/// Body of an atomic component: literal text interleaved with inline
/// combination groups.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Content {
    pub fragments: Vec<ContentFragment>,
}

impl Content {
    pub fn text(text: impl Into<String>) -> Self {
        Content::normalized(vec![ContentFragment::Text(text.into())])
    }

    pub fn group(combination: ContentCombination) -> Self {
        Content { fragments: vec![ContentFragment::Group(combination)] }
    }

    /// Canonical form: adjacent text merged, whitespace runs collapsed to a
    /// single space, outer ends trimmed, empty text dropped.
    pub fn normalized(fragments: Vec<ContentFragment>) -> Self {
        let mut out: Vec<ContentFragment> = Vec::with_capacity(fragments.len());
        for fragment in fragments {
            match fragment {
                ContentFragment::Text(t) => {
                    if let Some(ContentFragment::Text(prev)) = out.last_mut() {
                        prev.push_str(&t);
                    } else {
                        out.push(ContentFragment::Text(t));
                    }
                }
                group => out.push(group),
            }
        }
        let last = out.len().saturating_sub(1);
        for (i, fragment) in out.iter_mut().enumerate() {
            if let ContentFragment::Text(t) = fragment {
                let mut collapsed = collapse_whitespace(t);
                if i == 0 {
                    collapsed = collapsed.trim_start().to_string();
                }
                if i == last {
                    collapsed = collapsed.trim_end().to_string();
                }
                *t = collapsed;
            }
        }
        out.retain(|f| !matches!(f, ContentFragment::Text(t) if t.is_empty()));
        Content { fragments: out }
    }

    pub fn is_empty(&self) -> bool {
        self.fragments.is_empty()
    }

    /// The content when it is nothing but one combination (`fine [AND] report`).
    pub fn as_single_group(&self) -> Option<&ContentCombination> {
        match self.fragments.as_slice() {
            [ContentFragment::Group(g)] => Some(g),
            _ => None,
        }
    }

    pub fn has_combination(&self) -> bool {
        self.fragments.iter().any(|f| matches!(f, ContentFragment::Group(_)))
    }
}

/// Collapses every run of whitespace into one ASCII space, keeping a single
/// leading or trailing space if one was present.
pub(crate) fn collapse_whitespace(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_space = false;
    for c in text.chars() {
        if c.is_whitespace() {
            if !in_space {
                out.push(' ');
            }
            in_space = true;
        } else {
            out.push(c);
            in_space = false;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentNode {
    pub symbol: ComponentSymbol,
    pub annotation: Option<Annotation>,
    pub body: ComponentBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ComponentBody {
    /// `cSymbol(content)`
    Content(Content),
    /// `cSymbol{...}`
    Nested(NestedBody),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum NestedBody {
    Statement(StatementTree),
    Combination(NestedCombination),
}

/// `Cac{Cac{...} [AND] Cac{...}}`: same-kind nested components linked by
/// one operator. Every child carries the host symbol.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedCombination {
    pub operator: LogicalOperator,
    pub children: Vec<NestedChild>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum NestedChild {
    Component(ComponentNode),
    /// Brace-delimited subgroup giving precedence.
    Combination(NestedCombination),
}

/// `{I(fine) Bdir(violator) [AND] I(file) Bdir(report)}`: operator-linked
/// groups of components, each group a statement fragment of its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCombination {
    pub operator: LogicalOperator,
    pub branches: Vec<StatementTree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Element {
    Component(ComponentNode),
    Pair(PairCombination),
    Annotation(Annotation),
    /// Uncoded prose between components. Kept for round-tripping only.
    FreeText(String),
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct StatementTree {
    pub elements: Vec<Element>,
    /// Range of the input this tree was parsed from; ignored by equality.
    #[serde(skip)]
    pub span: Span,
}

impl PartialEq for StatementTree {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for StatementTree {}

impl StatementTree {
    pub fn new(elements: Vec<Element>) -> Self {
        StatementTree { elements, span: Span::default() }
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = &ComponentNode> {
        self.elements.iter().filter_map(|e| match e {
            Element::Component(c) => Some(c),
            _ => None,
        })
    }

    pub fn statement_annotations(&self) -> impl Iterator<Item = &Annotation> {
        self.elements.iter().filter_map(|e| match e {
            Element::Annotation(a) => Some(a),
            _ => None,
        })
    }

    /// True when the statement encodes at least one component, directly or
    /// inside a pair combination.
    pub fn has_components(&self) -> bool {
        self.elements.iter().any(|e| match e {
            Element::Component(_) => true,
            Element::Pair(p) => p.branches.iter().any(StatementTree::has_components),
            _ => false,
        })
    }

    /// The lowest level of expressiveness able to represent this tree.
    pub fn level(&self) -> Level {
        let mut level = Level::Core;
        self.visit(&mut |item| {
            let l = match item {
                Visit::Annotation(_) => Level::Logico,
                Visit::Nested(_) | Visit::Pair(_) => Level::Extended,
                _ => Level::Core,
            };
            level = level.max(l);
        });
        level
    }

    /// Pre-order walk over every structural item of the tree.
    pub fn visit<'a>(&'a self, f: &mut dyn FnMut(Visit<'a>)) {
        for element in &self.elements {
            match element {
                Element::Component(c) => visit_component(c, f),
                Element::Pair(p) => {
                    f(Visit::Pair(p));
                    for b in &p.branches {
                        b.visit(f);
                    }
                }
                Element::Annotation(a) => f(Visit::Annotation(a)),
                Element::FreeText(t) => f(Visit::FreeText(t)),
            }
        }
    }
}

/// Items reported by [`StatementTree::visit`].
#[derive(Debug, Clone, Copy)]
pub enum Visit<'a> {
    Component(&'a ComponentNode),
    Nested(&'a NestedBody),
    Pair(&'a PairCombination),
    ContentGroup(&'a ContentCombination),
    Text(&'a str),
    Annotation(&'a Annotation),
    FreeText(&'a str),
}

fn visit_component<'a>(c: &'a ComponentNode, f: &mut dyn FnMut(Visit<'a>)) {
    f(Visit::Component(c));
    if let Some(a) = &c.annotation {
        f(Visit::Annotation(a));
    }
    match &c.body {
        ComponentBody::Content(content) => visit_content(content, f),
        ComponentBody::Nested(body) => {
            f(Visit::Nested(body));
            match body {
                NestedBody::Statement(s) => s.visit(f),
                NestedBody::Combination(nc) => visit_nested_combination(nc, f),
            }
        }
    }
}

fn visit_nested_combination<'a>(nc: &'a NestedCombination, f: &mut dyn FnMut(Visit<'a>)) {
    for child in &nc.children {
        match child {
            NestedChild::Component(c) => visit_component(c, f),
            NestedChild::Combination(inner) => visit_nested_combination(inner, f),
        }
    }
}

fn visit_content<'a>(content: &'a Content, f: &mut dyn FnMut(Visit<'a>)) {
    for fragment in &content.fragments {
        match fragment {
            ContentFragment::Text(t) => f(Visit::Text(t)),
            ContentFragment::Group(g) => {
                f(Visit::ContentGroup(g));
                for alt in &g.alternatives {
                    visit_content(alt, f);
                }
            }
        }
    }
}
