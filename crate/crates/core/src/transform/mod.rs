//! Decomposition of statement trees into atomic statements, level filtering
//! and metrics.

mod expand;
pub(crate) mod filter;
mod metrics;

pub use expand::{expand, ExpansionResult};
pub(crate) use filter::strip_annotations;
pub use filter::{filter_level, reorder_conditions};
pub use metrics::{degree_of_variability, max_nesting_depth};
