use std::borrow::Cow;

use crate::model::{
    ComponentBody, ComponentNode, ComponentSymbol, Content, ContentCombination, ContentFragment, Element, Level,
    NestedBody, NestedChild, NestedCombination, PairCombination, StatementTree,
};

/// Reduces `tree` to what `level` can express.
///
/// * Logico: unchanged.
/// * Extended: every annotation removed.
/// * Core: additionally, nested components become plain content (symbols
///   elided, free text kept, combinations kept as inline groups) and
///   component pair combinations are distributed into per-component
///   combinations. The result contains no braces.
///
/// Distributing a pair is lossy: `{I(a) Bdir(b) [XOR] I(c) Bdir(d)}` becomes
/// `I(a [XOR] c) Bdir(b [XOR] d)`, which no longer ties `a` to `b`, and free
/// text inside the pair is dropped.
pub fn filter_level(tree: &StatementTree, level: Level) -> StatementTree {
    match level {
        Level::Logico => tree.clone(),
        Level::Extended => strip_annotations(tree),
        Level::Core => distribute_pairs(&flatten_nested(&strip_annotations(tree))),
    }
}

/// Moves activation conditions (`Cac`, atomic or nested) to the front of the
/// statement. Stable: everything else keeps its relative order.
pub fn reorder_conditions(tree: &StatementTree) -> StatementTree {
    let is_condition =
        |e: &Element| matches!(e, Element::Component(c) if c.symbol == ComponentSymbol::ActivationCondition);
    let (mut front, back): (Vec<_>, Vec<_>) = tree.elements.iter().cloned().partition(is_condition);
    front.extend(back);
    StatementTree { elements: front, span: tree.span }
}

/// The tree `expand` works on at `level`: annotations dropped below Logico,
/// nested components flattened at Core. Pairs are kept.
pub(crate) fn prepare(tree: &StatementTree, level: Level) -> Cow<'_, StatementTree> {
    match level {
        Level::Logico => Cow::Borrowed(tree),
        Level::Extended => Cow::Owned(strip_annotations(tree)),
        Level::Core => Cow::Owned(flatten_nested(&strip_annotations(tree))),
    }
}

pub(crate) fn strip_annotations(tree: &StatementTree) -> StatementTree {
    let elements = tree
        .elements
        .iter()
        .filter_map(|e| match e {
            Element::Annotation(_) => None,
            Element::Component(c) => Some(Element::Component(strip_component(c))),
            Element::Pair(p) => Some(Element::Pair(PairCombination {
                operator: p.operator,
                branches: p.branches.iter().map(strip_annotations).collect(),
            })),
            Element::FreeText(t) => Some(Element::FreeText(t.clone())),
        })
        .collect();
    StatementTree { elements, span: tree.span }
}

fn strip_component(c: &ComponentNode) -> ComponentNode {
    let body = match &c.body {
        ComponentBody::Content(content) => ComponentBody::Content(content.clone()),
        ComponentBody::Nested(NestedBody::Statement(s)) => {
            ComponentBody::Nested(NestedBody::Statement(strip_annotations(s)))
        }
        ComponentBody::Nested(NestedBody::Combination(nc)) => {
            ComponentBody::Nested(NestedBody::Combination(strip_nested_combination(nc)))
        }
    };
    ComponentNode { symbol: c.symbol, annotation: None, body }
}

fn strip_nested_combination(nc: &NestedCombination) -> NestedCombination {
    NestedCombination {
        operator: nc.operator,
        children: nc
            .children
            .iter()
            .map(|child| match child {
                NestedChild::Component(c) => NestedChild::Component(strip_component(c)),
                NestedChild::Combination(inner) => NestedChild::Combination(strip_nested_combination(inner)),
            })
            .collect(),
    }
}

/// Replaces every nested component body by flattened content.
pub(crate) fn flatten_nested(tree: &StatementTree) -> StatementTree {
    let elements = tree
        .elements
        .iter()
        .map(|e| match e {
            Element::Component(c) => Element::Component(ComponentNode {
                symbol: c.symbol,
                annotation: c.annotation.clone(),
                body: ComponentBody::Content(component_content(c)),
            }),
            Element::Pair(p) => Element::Pair(PairCombination {
                operator: p.operator,
                branches: p.branches.iter().map(flatten_nested).collect(),
            }),
            other => other.clone(),
        })
        .collect();
    StatementTree { elements, span: tree.span }
}

fn component_content(c: &ComponentNode) -> Content {
    match &c.body {
        ComponentBody::Content(content) => content.clone(),
        ComponentBody::Nested(NestedBody::Statement(s)) => statement_content(s),
        ComponentBody::Nested(NestedBody::Combination(nc)) => nested_combination_content(nc),
    }
}

fn nested_combination_content(nc: &NestedCombination) -> Content {
    let alternatives = nc
        .children
        .iter()
        .map(|child| match child {
            NestedChild::Component(c) => component_content(c),
            NestedChild::Combination(inner) => nested_combination_content(inner),
        })
        .collect();
    Content::group(ContentCombination { operator: nc.operator, alternatives })
}

/// Reading of a statement with symbols, brackets and annotations elided.
fn statement_content(s: &StatementTree) -> Content {
    let mut fragments = Vec::new();
    for element in &s.elements {
        let part = match element {
            Element::Component(c) => component_content(c).fragments,
            Element::Pair(p) => vec![ContentFragment::Group(ContentCombination {
                operator: p.operator,
                alternatives: p.branches.iter().map(statement_content).collect(),
            })],
            Element::FreeText(t) => vec![ContentFragment::Text(t.clone())],
            Element::Annotation(_) => continue,
        };
        if !fragments.is_empty() {
            fragments.push(ContentFragment::Text(" ".into()));
        }
        fragments.extend(part);
    }
    Content::normalized(fragments)
}

/// Turns each pair combination into one component per symbol whose content
/// combines that symbol's values across branches. Expects a tree without
/// nested components.
fn distribute_pairs(tree: &StatementTree) -> StatementTree {
    let mut elements = Vec::with_capacity(tree.elements.len());
    for element in &tree.elements {
        match element {
            Element::Pair(p) => elements.extend(distribute(p)),
            other => elements.push(other.clone()),
        }
    }
    StatementTree { elements, span: tree.span }
}

fn distribute(p: &PairCombination) -> Vec<Element> {
    let branches: Vec<StatementTree> = p.branches.iter().map(distribute_pairs).collect();
    let mut symbols: Vec<ComponentSymbol> = Vec::new();
    for c in branches.iter().flat_map(StatementTree::components) {
        if !symbols.contains(&c.symbol) {
            symbols.push(c.symbol);
        }
    }
    symbols
        .into_iter()
        .map(|symbol| {
            let mut alternatives: Vec<Content> = branches
                .iter()
                .filter_map(|branch| {
                    let mut fragments = Vec::new();
                    for c in branch.components().filter(|c| c.symbol == symbol) {
                        if !fragments.is_empty() {
                            fragments.push(ContentFragment::Text(" ".into()));
                        }
                        fragments.extend(component_content(c).fragments);
                    }
                    (!fragments.is_empty()).then(|| Content::normalized(fragments))
                })
                .collect();
            let content = if alternatives.len() == 1 {
                alternatives.remove(0)
            } else {
                Content::group(ContentCombination { operator: p.operator, alternatives })
            };
            Element::Component(ComponentNode { symbol, annotation: None, body: ComponentBody::Content(content) })
        })
        .collect()
}
