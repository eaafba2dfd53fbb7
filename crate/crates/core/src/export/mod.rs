//! Output renderers: pipe-delimited tables and the hierarchical tree
//! document.

pub mod tabular;
pub mod visual;

pub use tabular::{to_csv, to_sheets, TabularFormat, TabularOptions, COLUMNS};
pub use visual::{to_tree, Canvas, TreeDoc, TreeMetrics, TreeNode, VisualOptions};
