//! Hierarchical tree document for visualization.
//!
//! JSON schema (version 1):
//!
//! ```text
//! TreeDoc  = { "version": 1, "root": TreeNode,
//!              "metrics": { "degreeOfVariability": int, "atomCount": int, "maxNestingDepth": int },
//!              "canvas": { "width": int, "height": int } }
//! TreeNode = { "label": string, "symbol"?: code, "annotation"?: string, "operator"?: "AND"|"OR"|"XOR",
//!              "children": [TreeNode], "properties": [TreeNode] }
//! ```
//!
//! The root is labeled with the canonical statement. Below it:
//!
//! * a component with plain content is a leaf labeled with the content;
//! * a component whose content is one combination is an operator node
//!   carrying the symbol, with one child per alternative;
//! * content mixing text and inline groups gets one child per fragment;
//! * a nested component has the children of its inner statement;
//! * a pair combination is an operator node with one child per branch.
//!
//! Free text and, unless requested, annotations are left out. Statement
//! annotations are joined with `; ` on the node of their statement.

use std::borrow::Cow;

use serde::Serialize;

use crate::model::{
    ComponentBody, ComponentNode, Content, ContentCombination, ContentFragment, Element, Level, LogicalOperator,
    NestedBody, NestedChild, NestedCombination, StatementTree, SubStatementId,
};
use crate::parser::{serialize, serialize_content};
use crate::transform::{degree_of_variability, expand, max_nesting_depth, reorder_conditions, strip_annotations};

pub const TREE_DOC_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDoc {
    pub version: u32,
    pub root: TreeNode,
    pub metrics: TreeMetrics,
    pub canvas: Canvas,
}

impl TreeDoc {
    /// Compact JSON form of the document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree documents always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annotation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<LogicalOperator>,
    pub children: Vec<TreeNode>,
    pub properties: Vec<TreeNode>,
}

impl TreeNode {
    fn new(label: impl Into<String>) -> Self {
        TreeNode {
            label: label.into(),
            symbol: None,
            annotation: None,
            operator: None,
            children: Vec::new(),
            properties: Vec::new(),
        }
    }

    /// Nodes in this subtree, including property nodes.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().chain(&self.properties).map(TreeNode::node_count).sum::<usize>()
    }

    /// Nodes without children, including property nodes.
    pub fn leaf_count(&self) -> usize {
        let below: usize = self.children.iter().chain(&self.properties).map(TreeNode::leaf_count).sum();
        if self.children.is_empty() {
            below + 1
        } else {
            below
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TreeMetrics {
    pub degree_of_variability: u64,
    /// All atoms, nested ones included, when expanded at Logico.
    pub atom_count: usize,
    pub max_nesting_depth: usize,
}

/// Size hint for the client; not used for layout here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Canvas {
    pub width: u32,
    pub height: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VisualOptions {
    pub include_annotations: bool,
    /// When false, property components hang off their parent component's
    /// `properties` list instead of appearing as siblings.
    pub include_properties: bool,
    pub conditions_first: bool,
    pub canvas_width: u32,
    pub canvas_height: u32,
}

impl Default for VisualOptions {
    fn default() -> Self {
        VisualOptions {
            include_annotations: false,
            include_properties: true,
            conditions_first: false,
            canvas_width: 1200,
            canvas_height: 800,
        }
    }
}

pub fn to_tree(tree: &StatementTree, opts: &VisualOptions) -> TreeDoc {
    let mut tree = Cow::Borrowed(tree);
    if !opts.include_annotations {
        // Labels are canonical text, which would otherwise show annotations.
        tree = Cow::Owned(strip_annotations(&tree));
    }
    if opts.conditions_first {
        tree = Cow::Owned(reorder_conditions(&tree));
    }
    let tree = tree.as_ref();
    let builder = Builder { opts };
    let mut root = TreeNode::new(serialize(tree));
    root.annotation = builder.statement_annotation(tree);
    root.children = builder.statement_children(tree);

    let base = SubStatementId::new("1").expect("valid base");
    let metrics = TreeMetrics {
        degree_of_variability: degree_of_variability(tree),
        atom_count: expand(tree, &base, Level::Logico).atoms.len(),
        max_nesting_depth: max_nesting_depth(tree),
    };
    TreeDoc {
        version: TREE_DOC_VERSION,
        root,
        metrics,
        canvas: Canvas { width: opts.canvas_width, height: opts.canvas_height },
    }
}

struct Builder<'o> {
    opts: &'o VisualOptions,
}

impl Builder<'_> {
    fn statement_annotation(&self, tree: &StatementTree) -> Option<String> {
        if !self.opts.include_annotations {
            return None;
        }
        let texts: Vec<&str> = tree.statement_annotations().map(|a| a.text.as_str()).collect();
        (!texts.is_empty()).then(|| texts.join("; "))
    }

    fn statement_children(&self, tree: &StatementTree) -> Vec<TreeNode> {
        let nodes: Vec<TreeNode> = tree
            .elements
            .iter()
            .filter_map(|e| match e {
                Element::Component(c) => Some(self.component(c)),
                Element::Pair(p) => {
                    let mut node = TreeNode::new(p.operator.token());
                    node.operator = Some(p.operator);
                    node.children = p.branches.iter().map(|b| self.branch(b)).collect();
                    Some(node)
                }
                Element::Annotation(_) | Element::FreeText(_) => None,
            })
            .collect();
        if self.opts.include_properties {
            nodes
        } else {
            attach_properties(nodes)
        }
    }

    fn branch(&self, tree: &StatementTree) -> TreeNode {
        let mut node = TreeNode::new(serialize(tree));
        node.annotation = self.statement_annotation(tree);
        node.children = self.statement_children(tree);
        node
    }

    fn component(&self, c: &ComponentNode) -> TreeNode {
        let mut node = match &c.body {
            ComponentBody::Content(content) => self.content(content),
            ComponentBody::Nested(NestedBody::Statement(s)) => {
                let mut node = TreeNode::new(c.symbol.name());
                node.annotation = self.statement_annotation(s);
                node.children = self.statement_children(s);
                node
            }
            ComponentBody::Nested(NestedBody::Combination(nc)) => self.nested_combination(nc),
        };
        node.symbol = Some(c.symbol.code().to_string());
        if self.opts.include_annotations {
            if let Some(a) = &c.annotation {
                node.annotation = Some(match node.annotation.take() {
                    Some(inner) => format!("{}; {inner}", a.text),
                    None => a.text.clone(),
                });
            }
        }
        node
    }

    fn nested_combination(&self, nc: &NestedCombination) -> TreeNode {
        let mut node = TreeNode::new(nc.operator.token());
        node.operator = Some(nc.operator);
        node.children = nc
            .children
            .iter()
            .map(|child| match child {
                NestedChild::Component(c) => self.component(c),
                NestedChild::Combination(inner) => self.nested_combination(inner),
            })
            .collect();
        node
    }

    fn content(&self, content: &Content) -> TreeNode {
        if let Some(group) = content.as_single_group() {
            return self.group(group);
        }
        let mut node = TreeNode::new(serialize_content(content));
        if content.has_combination() {
            node.children = content
                .fragments
                .iter()
                .filter_map(|f| match f {
                    ContentFragment::Text(t) if t.trim().is_empty() => None,
                    ContentFragment::Text(t) => Some(TreeNode::new(t.trim())),
                    ContentFragment::Group(g) => Some(self.group(g)),
                })
                .collect();
        }
        node
    }

    fn group(&self, g: &ContentCombination) -> TreeNode {
        let mut node = TreeNode::new(g.operator.token());
        node.operator = Some(g.operator);
        node.children = g.alternatives.iter().map(|alt| self.content(alt)).collect();
        node
    }
}

/// Moves property nodes into the `properties` of the nearest sibling with
/// the parent symbol, preferring the next one. Unmatched properties stay.
fn attach_properties(nodes: Vec<TreeNode>) -> Vec<TreeNode> {
    let parent_code = |n: &TreeNode| -> Option<String> {
        let code = n.symbol.as_deref()?;
        crate::model::ComponentSymbol::from_code(code).ok()?.parent().map(|p| p.code().to_string())
    };
    let targets: Vec<Option<usize>> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let want = parent_code(n)?;
            let is_parent = |j: &usize| nodes[*j].symbol.as_deref() == Some(want.as_str());
            (i + 1..nodes.len()).find(is_parent).or_else(|| (0..i).rev().find(is_parent))
        })
        .collect();
    let mut slots: Vec<Option<TreeNode>> = nodes.into_iter().map(Some).collect();
    for (i, target) in targets.iter().enumerate() {
        if let Some(t) = target {
            let property = slots[i].take().expect("each property moves once");
            slots[*t].as_mut().expect("parents are never moved").properties.push(property);
        }
    }
    slots.into_iter().flatten().collect()
}
