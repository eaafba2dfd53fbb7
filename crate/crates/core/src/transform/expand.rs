//! Expansion of a statement tree into logically linked atomic statements.
//!
//! Every combination alternative and every pair branch becomes its own
//! reading; independent combinations multiply (leftmost varies slowest).
//! Each reading remembers, per combination it passed through, which
//! branch it took (its *sites*). Two readings are linked by an operator
//! when they differ in exactly one combination and agree on everything
//! else they share; anything only one of them has must lie inside that
//! combination.

use std::collections::{BTreeMap, BTreeSet};
use std::num::NonZeroU32;

use serde::Serialize;

use crate::model::tree::collapse_whitespace;
use crate::model::{
    Annotation, AtomicStatement, CellContent, CellValue, ComponentBody, ComponentSymbol, Content, ContentFragment,
    Element, Family, Level, Linkage, LogicalOperator, NestedBody, NestedChild, NestedCombination, StatementTree,
    SubStatementId,
};

use super::filter::prepare;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExpansionResult {
    /// Top-level atoms in expansion order, each directly followed by the
    /// atoms nested in it (depth first).
    pub atoms: Vec<AtomicStatement>,
    pub root_base: String,
    pub warnings: Vec<String>,
}

impl ExpansionResult {
    /// Atoms that are not nested in another atom.
    pub fn top_level(&self) -> impl Iterator<Item = &AtomicStatement> {
        self.atoms.iter().filter(|a| !a.id.is_nested())
    }
}

/// Decomposes `tree` into atomic statements identified under `base`.
///
/// A tree without any variation yields one atom with id `base`; otherwise
/// top-level atoms are `base.1 … base.n` and statements nested in atom `h`
/// are `{h}.1 …`. Below Logico, annotations are dropped. At Core, nested
/// components are read as flat text, so their alternatives multiply into
/// the top-level count; from Extended up they become separate atoms
/// referenced from the host cell.
pub fn expand(tree: &StatementTree, base: &SubStatementId, level: Level) -> ExpansionResult {
    let prepared = prepare(tree, level);
    let variants = statement_variants(&prepared, "");
    let bare = variants.len() == 1 && !variants[0].has_nested();
    let ids: Vec<SubStatementId> =
        if bare { vec![base.clone()] } else { (1..=variants.len()).map(|k| base.child(index(k))).collect() };
    let linkage = linkage(&variants.iter().map(|v| &v.sites).collect::<Vec<_>>(), &ids);

    let mut atoms = Vec::with_capacity(variants.len());
    for ((variant, id), links) in variants.into_iter().zip(ids).zip(linkage) {
        emit(variant, id, links, &mut atoms);
    }
    ExpansionResult { atoms, root_base: base.to_string(), warnings: missing_components(&prepared, base) }
}

fn index(k: usize) -> NonZeroU32 {
    NonZeroU32::new(u32::try_from(k).unwrap_or(u32::MAX)).unwrap_or(NonZeroU32::MIN)
}

type Sites = BTreeMap<String, (LogicalOperator, usize)>;

#[derive(Debug, Clone)]
enum Slot<'t> {
    Value(CellValue),
    Nested { annotations: Vec<Annotation>, body: &'t NestedBody },
}

/// One reading of a statement, before ids are assigned.
#[derive(Debug, Clone, Default)]
struct Variant<'t> {
    cells: Vec<(ComponentSymbol, Slot<'t>)>,
    sites: Sites,
    annotations: Vec<Annotation>,
}

impl Variant<'_> {
    fn has_nested(&self) -> bool {
        self.cells.iter().any(|(_, slot)| matches!(slot, Slot::Nested { .. }))
    }

    fn join(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.cells.extend(other.cells.iter().cloned());
        out.sites.extend(other.sites.iter().map(|(k, v)| (k.clone(), *v)));
        out.annotations.extend(other.annotations.iter().cloned());
        out
    }
}

fn key(prefix: &str, part: &str) -> String {
    if prefix.is_empty() {
        part.to_string()
    } else {
        format!("{prefix}/{part}")
    }
}

fn product<'t>(left: Vec<Variant<'t>>, right: &[Variant<'t>]) -> Vec<Variant<'t>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in &left {
        for r in right {
            out.push(l.join(r));
        }
    }
    out
}

fn statement_variants<'t>(tree: &'t StatementTree, prefix: &str) -> Vec<Variant<'t>> {
    let mut acc = vec![Variant::default()];
    for (j, element) in tree.elements.iter().enumerate() {
        let at = key(prefix, &format!("e{j}"));
        let options = match element {
            Element::Component(c) => {
                let annotations: Vec<Annotation> = c.annotation.iter().cloned().collect();
                match &c.body {
                    ComponentBody::Content(content) => content_variants(content, &at)
                        .into_iter()
                        .map(|(text, sites)| Variant {
                            cells: vec![(
                                c.symbol,
                                Slot::Value(CellValue {
                                    content: CellContent::Text(text),
                                    annotations: annotations.clone(),
                                }),
                            )],
                            sites,
                            annotations: Vec::new(),
                        })
                        .collect(),
                    ComponentBody::Nested(body) => vec![Variant {
                        cells: vec![(c.symbol, Slot::Nested { annotations, body })],
                        ..Variant::default()
                    }],
                }
            }
            Element::Pair(p) => {
                let mut options = Vec::new();
                for (i, branch) in p.branches.iter().enumerate() {
                    for mut v in statement_variants(branch, &key(&at, &format!("b{i}"))) {
                        v.sites.insert(at.clone(), (p.operator, i));
                        options.push(v);
                    }
                }
                options
            }
            Element::Annotation(a) => vec![Variant { annotations: vec![a.clone()], ..Variant::default() }],
            Element::FreeText(_) => continue,
        };
        acc = product(acc, &options);
    }
    acc
}

/// Every reading of `content` with the combination sites it passed through.
fn content_variants(content: &Content, prefix: &str) -> Vec<(String, Sites)> {
    let mut acc = vec![(String::new(), Sites::new())];
    for (n, fragment) in content.fragments.iter().enumerate() {
        match fragment {
            ContentFragment::Text(t) => acc.iter_mut().for_each(|(s, _)| s.push_str(t)),
            ContentFragment::Group(g) => {
                let at = key(prefix, &format!("g{n}"));
                let mut options = Vec::new();
                for (i, alt) in g.alternatives.iter().enumerate() {
                    for (text, mut sites) in content_variants(alt, &key(&at, &format!("a{i}"))) {
                        sites.insert(at.clone(), (g.operator, i));
                        options.push((text, sites));
                    }
                }
                let mut next = Vec::with_capacity(acc.len() * options.len());
                for (s, sites) in &acc {
                    for (t, more) in &options {
                        let mut merged = sites.clone();
                        merged.extend(more.iter().map(|(k, v)| (k.clone(), *v)));
                        next.push((format!("{s}{t}"), merged));
                    }
                }
                acc = next;
            }
        }
    }
    acc.into_iter().map(|(s, sites)| (collapse_whitespace(&s).trim().to_string(), sites)).collect()
}

/// What a nested body contributes: atoms of its own, or plain values when
/// a combined child is atomic (`Cac{Cac(x) [AND] Cac{...}}`).
enum NestedItem<'t> {
    Atom(Variant<'t>, Vec<Annotation>),
    Value(CellValue),
}

fn nested_items<'t>(body: &'t NestedBody, prefix: &str) -> Vec<NestedItem<'t>> {
    match body {
        NestedBody::Statement(s) => {
            statement_variants(s, prefix).into_iter().map(|v| NestedItem::Atom(v, Vec::new())).collect()
        }
        NestedBody::Combination(nc) => combination_items(nc, prefix),
    }
}

fn combination_items<'t>(nc: &'t NestedCombination, prefix: &str) -> Vec<NestedItem<'t>> {
    let at = key(prefix, "n");
    let mut items = Vec::new();
    for (i, child) in nc.children.iter().enumerate() {
        let inner = key(&at, &format!("c{i}"));
        let child_items = match child {
            NestedChild::Component(c) => {
                let own: Vec<Annotation> = c.annotation.iter().cloned().collect();
                match &c.body {
                    ComponentBody::Content(content) => content_variants(content, &inner)
                        .into_iter()
                        .map(|(text, _)| {
                            NestedItem::Value(CellValue { content: CellContent::Text(text), annotations: own.clone() })
                        })
                        .collect(),
                    ComponentBody::Nested(body) => nested_items(body, &inner)
                        .into_iter()
                        .map(|item| match item {
                            NestedItem::Atom(v, mut annotations) => {
                                annotations.splice(0..0, own.iter().cloned());
                                NestedItem::Atom(v, annotations)
                            }
                            NestedItem::Value(mut value) => {
                                value.annotations.splice(0..0, own.iter().cloned());
                                NestedItem::Value(value)
                            }
                        })
                        .collect(),
                }
            }
            NestedChild::Combination(inner_nc) => combination_items(inner_nc, &inner),
        };
        for mut item in child_items {
            if let NestedItem::Atom(v, _) = &mut item {
                v.sites.insert(at.clone(), (nc.operator, i));
            }
            items.push(item);
        }
    }
    items
}

/// Pushes the atom for `variant` followed by everything nested in it.
fn emit(variant: Variant<'_>, id: SubStatementId, links: Vec<Linkage>, out: &mut Vec<AtomicStatement>) {
    let mut cells: BTreeMap<ComponentSymbol, Vec<CellValue>> = BTreeMap::new();
    let mut pending: Vec<(Variant<'_>, SubStatementId, Vec<Linkage>)> = Vec::new();
    let mut k = 0usize;
    for (symbol, slot) in variant.cells {
        match slot {
            Slot::Value(value) => cells.entry(symbol).or_default().push(value),
            Slot::Nested { annotations, body } => {
                let mut atoms = Vec::new();
                for item in nested_items(body, "") {
                    match item {
                        NestedItem::Value(mut value) => {
                            value.annotations.splice(0..0, annotations.iter().cloned());
                            cells.entry(symbol).or_default().push(value);
                        }
                        NestedItem::Atom(v, own) => {
                            k += 1;
                            let nested_id = id.nested(index(k));
                            let mut cell_annotations = annotations.clone();
                            cell_annotations.extend(own);
                            cells.entry(symbol).or_default().push(CellValue {
                                content: CellContent::Reference(nested_id.clone()),
                                annotations: cell_annotations,
                            });
                            atoms.push((v, nested_id));
                        }
                    }
                }
                let ids: Vec<_> = atoms.iter().map(|(_, id)| id.clone()).collect();
                let sites: Vec<_> = atoms.iter().map(|(v, _)| &v.sites).collect();
                let links = linkage(&sites, &ids);
                pending.extend(atoms.into_iter().zip(links).map(|((v, id), l)| (v, id, l)));
            }
        }
    }
    out.push(AtomicStatement { id, cells, logical_linkage: links, statement_annotations: variant.annotations });
    for (v, nested_id, l) in pending {
        emit(v, nested_id, l, out);
    }
}

/// Linkage lists for sibling readings, parallel to `sites`.
fn linkage(sites: &[&Sites], ids: &[SubStatementId]) -> Vec<Vec<Linkage>> {
    let mut links = vec![Vec::new(); sites.len()];
    for a in 0..sites.len() {
        for b in a + 1..sites.len() {
            if let Some(operator) = link(sites[a], sites[b]) {
                links[a].push(Linkage { other: ids[b].clone(), operator });
                links[b].push(Linkage { other: ids[a].clone(), operator });
            }
        }
    }
    links
}

fn link(a: &Sites, b: &Sites) -> Option<LogicalOperator> {
    let mut differing: Option<(&str, LogicalOperator)> = None;
    for (k, (op, branch)) in a {
        if let Some((_, other)) = b.get(k) {
            if branch != other {
                if differing.is_some() {
                    return None;
                }
                differing = Some((k, *op));
            }
        }
    }
    let (site, operator) = differing?;
    let inside = format!("{site}/");
    let exclusive = a.keys().filter(|k| !b.contains_key(*k)).chain(b.keys().filter(|k| !a.contains_key(*k)));
    for k in exclusive {
        if !k.starts_with(&inside) {
            return None;
        }
    }
    Some(operator)
}

/// Warnings for compulsory components absent from the statement. A
/// statement using any constitutive component is checked as constitutive.
fn missing_components(tree: &StatementTree, base: &SubStatementId) -> Vec<String> {
    let mut present = BTreeSet::new();
    collect_symbols(tree, &mut present);
    let constitutive = present.iter().any(|s| s.family() == Family::Constitutive);
    let required: &[ComponentSymbol] = if constitutive {
        &[ComponentSymbol::ConstitutedEntity, ComponentSymbol::ConstitutiveFunction]
    } else {
        &[ComponentSymbol::Attributes, ComponentSymbol::Aim]
    };
    required
        .iter()
        .filter(|s| !present.contains(*s))
        .map(|s| format!("statement {base} has no {} ({}) component", s.name(), s.code()))
        .collect()
}

fn collect_symbols(tree: &StatementTree, present: &mut BTreeSet<ComponentSymbol>) {
    for element in &tree.elements {
        match element {
            Element::Component(c) => {
                present.insert(c.symbol);
            }
            Element::Pair(p) => p.branches.iter().for_each(|b| collect_symbols(b, present)),
            _ => {}
        }
    }
}
