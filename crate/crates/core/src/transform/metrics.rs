use crate::model::{
    ComponentBody, ComponentNode, Content, ContentFragment, Element, NestedBody, NestedChild, NestedCombination,
    StatementTree,
};

/// Degree of Variability: the number of top-level atomic statements the
/// tree decomposes into at IG Core, i.e. with nested statements read as
/// flat text.
///
/// Computed by counting rather than enumerating: alternatives of one
/// combination add up, independent combinations multiply. Saturates at
/// `u64::MAX`.
pub fn degree_of_variability(tree: &StatementTree) -> u64 {
    statement_count(tree)
}

fn statement_count(tree: &StatementTree) -> u64 {
    tree.elements.iter().fold(1u64, |acc, e| {
        let n = match e {
            Element::Component(c) => component_count(c),
            Element::Pair(p) => sum(p.branches.iter().map(statement_count)),
            Element::Annotation(_) | Element::FreeText(_) => 1,
        };
        acc.saturating_mul(n)
    })
}

fn component_count(c: &ComponentNode) -> u64 {
    match &c.body {
        ComponentBody::Content(content) => content_count(content),
        ComponentBody::Nested(NestedBody::Statement(s)) => statement_count(s),
        ComponentBody::Nested(NestedBody::Combination(nc)) => nested_combination_count(nc),
    }
}

fn nested_combination_count(nc: &NestedCombination) -> u64 {
    sum(nc.children.iter().map(|child| match child {
        NestedChild::Component(c) => component_count(c),
        NestedChild::Combination(inner) => nested_combination_count(inner),
    }))
}

fn content_count(content: &Content) -> u64 {
    content.fragments.iter().fold(1u64, |acc, f| match f {
        ContentFragment::Text(_) => acc,
        ContentFragment::Group(g) => acc.saturating_mul(sum(g.alternatives.iter().map(content_count))),
    })
}

fn sum(counts: impl Iterator<Item = u64>) -> u64 {
    counts.fold(0u64, u64::saturating_add)
}

/// Deepest brace nesting in the canonical IG Script form of `tree`,
/// computed on the structure so braces inside annotation text do not count.
pub fn max_nesting_depth(tree: &StatementTree) -> usize {
    statement_depth(tree)
}

fn statement_depth(tree: &StatementTree) -> usize {
    tree.elements
        .iter()
        .map(|e| match e {
            Element::Component(c) => component_depth(c),
            Element::Pair(p) => 1 + p.branches.iter().map(statement_depth).max().unwrap_or(0),
            Element::Annotation(_) | Element::FreeText(_) => 0,
        })
        .max()
        .unwrap_or(0)
}

fn component_depth(c: &ComponentNode) -> usize {
    match &c.body {
        ComponentBody::Content(_) => 0,
        ComponentBody::Nested(NestedBody::Statement(s)) => 1 + statement_depth(s),
        ComponentBody::Nested(NestedBody::Combination(nc)) => 1 + combination_depth(nc),
    }
}

/// Depth inside the braces that hold `nc`.
fn combination_depth(nc: &NestedCombination) -> usize {
    nc.children
        .iter()
        .map(|child| match child {
            NestedChild::Component(c) => component_depth(c),
            NestedChild::Combination(inner) => 1 + combination_depth(inner),
        })
        .max()
        .unwrap_or(0)
}
