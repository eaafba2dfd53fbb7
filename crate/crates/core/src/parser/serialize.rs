use crate::model::{
    ComponentBody, ComponentNode, Content, ContentCombination, ContentFragment, Element, NestedBody, NestedChild,
    NestedCombination, PairCombination, StatementTree,
};

/// Canonical IG Script for `tree`: elements separated by single spaces,
/// annotations directly between symbol and body.
pub fn serialize(tree: &StatementTree) -> String {
    let mut out = String::new();
    write_statement(tree, &mut out);
    out
}

/// Canonical text of a component body, without the enclosing parentheses.
pub fn serialize_content(content: &Content) -> String {
    let mut out = String::new();
    match content.as_single_group() {
        Some(group) => write_combination(group, &mut out),
        None => write_fragments(content, &mut out),
    }
    out
}

fn write_statement(tree: &StatementTree, out: &mut String) {
    for (i, element) in tree.elements.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        match element {
            Element::Component(c) => write_component(c, out),
            Element::Pair(p) => write_pair(p, out),
            Element::Annotation(a) => {
                out.push('[');
                out.push_str(&a.text);
                out.push(']');
            }
            Element::FreeText(t) => out.push_str(t),
        }
    }
}

fn write_component(c: &ComponentNode, out: &mut String) {
    out.push_str(c.symbol.code());
    if let Some(a) = &c.annotation {
        out.push('[');
        out.push_str(&a.text);
        out.push(']');
    }
    match &c.body {
        ComponentBody::Content(content) => {
            out.push('(');
            out.push_str(&serialize_content(content));
            out.push(')');
        }
        ComponentBody::Nested(NestedBody::Statement(s)) => {
            out.push('{');
            write_statement(s, out);
            out.push('}');
        }
        ComponentBody::Nested(NestedBody::Combination(nc)) => {
            out.push('{');
            write_nested_combination(nc, out);
            out.push('}');
        }
    }
}

fn write_pair(p: &PairCombination, out: &mut String) {
    out.push('{');
    for (i, branch) in p.branches.iter().enumerate() {
        if i > 0 {
            push_operator(p.operator.token(), out);
        }
        write_statement(branch, out);
    }
    out.push('}');
}

fn write_nested_combination(nc: &NestedCombination, out: &mut String) {
    for (i, child) in nc.children.iter().enumerate() {
        if i > 0 {
            push_operator(nc.operator.token(), out);
        }
        match child {
            NestedChild::Component(c) => write_component(c, out),
            NestedChild::Combination(inner) => {
                out.push('{');
                write_nested_combination(inner, out);
                out.push('}');
            }
        }
    }
}

fn write_combination(g: &ContentCombination, out: &mut String) {
    for (i, alt) in g.alternatives.iter().enumerate() {
        if i > 0 {
            push_operator(g.operator.token(), out);
        }
        match alt.as_single_group() {
            Some(inner) => {
                out.push('(');
                write_combination(inner, out);
                out.push(')');
            }
            None => write_fragments(alt, out),
        }
    }
}

fn write_fragments(content: &Content, out: &mut String) {
    for fragment in &content.fragments {
        match fragment {
            ContentFragment::Text(t) => out.push_str(t),
            ContentFragment::Group(g) => {
                out.push('(');
                write_combination(g, out);
                out.push(')');
            }
        }
    }
}

fn push_operator(token: &str, out: &mut String) {
    out.push_str(" [");
    out.push_str(token);
    out.push_str("] ");
}
