//! Domain vocabulary shared by the parser, transforms and exporters.

pub mod atomic;
pub mod id;
pub mod symbol;
pub mod tree;

pub use atomic::{AtomicStatement, CellContent, CellValue, Linkage};
pub use id::SubStatementId;
pub use symbol::{ComponentSymbol, Family, Level, LogicalOperator};
pub use tree::{
    Annotation, AnnotationScope, ComponentBody, ComponentNode, Content, ContentCombination, ContentFragment, Element,
    NestedBody, NestedChild, NestedCombination, PairCombination, Span, StatementTree, Visit,
};
