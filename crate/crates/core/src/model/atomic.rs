use std::collections::BTreeMap;

use serde::Serialize;

use super::id::SubStatementId;
use super::symbol::{ComponentSymbol, LogicalOperator};
use super::tree::Annotation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CellContent {
    Text(String),
    /// Reference to a nested atomic statement in the same result.
    Reference(SubStatementId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellValue {
    pub content: CellContent,
    /// Component-level annotations, outermost first.
    pub annotations: Vec<Annotation>,
}

impl CellValue {
    pub fn text(text: impl Into<String>) -> Self {
        CellValue { content: CellContent::Text(text.into()), annotations: Vec::new() }
    }

    pub fn reference(&self) -> Option<&SubStatementId> {
        match &self.content {
            CellContent::Reference(id) => Some(id),
            CellContent::Text(_) => None,
        }
    }

    /// Cell text without annotations.
    pub fn render(&self) -> String {
        match &self.content {
            CellContent::Text(t) => t.clone(),
            CellContent::Reference(id) => id.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Linkage {
    pub other: SubStatementId,
    pub operator: LogicalOperator,
}

/// One fully decomposed statement: a row of tabular output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AtomicStatement {
    pub id: SubStatementId,
    pub cells: BTreeMap<ComponentSymbol, Vec<CellValue>>,
    pub logical_linkage: Vec<Linkage>,
    pub statement_annotations: Vec<Annotation>,
}

impl AtomicStatement {
    pub fn cell(&self, symbol: ComponentSymbol) -> &[CellValue] {
        self.cells.get(&symbol).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Cell values joined with `; `, annotations omitted.
    pub fn cell_text(&self, symbol: ComponentSymbol) -> String {
        self.cell(symbol).iter().map(CellValue::render).collect::<Vec<_>>().join("; ")
    }

    pub fn references(&self) -> impl Iterator<Item = &SubStatementId> {
        self.cells.values().flatten().filter_map(CellValue::reference)
    }
}
