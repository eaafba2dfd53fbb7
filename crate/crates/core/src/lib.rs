//! IG Script: parsing and decomposition of coded institutional statements.
//!
//! The pipeline is `validate → parse → transform → export`:
//!
//! * [`parser`] turns IG Script text into a [`StatementTree`] or a
//!   positioned [`ValidationReport`]. Positions are UTF-8 byte offsets.
//! * [`transform`] expands a tree into logically linked atomic statements,
//!   filters by level of expressiveness and computes metrics.
//! * [`export`] renders tabular (CSV, spreadsheet formula) and tree output.
//! * [`pipeline`] bundles the above behind one options struct.
//!
//! ```
//! use igscript::{expand, parse, Level, SubStatementId};
//!
//! let tree = parse("A(officer) D(must) I(fine [AND] report)").unwrap();
//! let atoms = expand(&tree, &SubStatementId::new("650").unwrap(), Level::Logico).atoms;
//! assert_eq!(atoms[1].id.to_string(), "650.2");
//! assert_eq!(atoms[1].cell_text(igscript::ComponentSymbol::Aim), "report");
//! ```

pub mod error;
pub mod export;
pub mod model;
pub mod parser;
pub mod pipeline;
pub mod transform;

pub use error::{Error, ParseError};
pub use model::*;
pub use parser::{parse, parse_content, serialize, tokenize, validate, Issue, IssueKind, ValidationReport};
pub use transform::{degree_of_variability, expand, filter_level, reorder_conditions, ExpansionResult};
