//! One-call rendering of IG Script text, as used by the CLI and the service.

use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::export::{to_tree, TabularFormat, TabularOptions, TreeDoc, VisualOptions};
use crate::model::{Level, SubStatementId};
use crate::parser::parse_with_report;
use crate::transform::{degree_of_variability, expand, filter::prepare};

/// Default cap on the Degree of Variability of one statement. Expansion is
/// exponential in the number of combinations, so unbounded input could
/// otherwise exhaust memory.
pub const DEFAULT_MAX_VARIABILITY: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Sheets,
    Tree,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "sheets" => Ok(OutputFormat::Sheets),
            "tree" => Ok(OutputFormat::Tree),
            _ => Err(format!("unknown output format `{s}` (expected csv, sheets or tree)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputOptions {
    pub format: OutputFormat,
    pub stmt_id: String,
    pub level: Level,
    pub include_headers: bool,
    pub include_annotations: bool,
    /// Tree output only: tabular output always has property columns.
    pub include_properties: bool,
    /// Tree output only: tabular columns have a fixed order.
    pub conditions_first: bool,
    pub max_variability: u64,
}

impl Default for OutputOptions {
    fn default() -> Self {
        OutputOptions {
            format: OutputFormat::Csv,
            stmt_id: "1".to_string(),
            level: Level::Logico,
            include_headers: true,
            include_annotations: false,
            include_properties: true,
            conditions_first: false,
            max_variability: DEFAULT_MAX_VARIABILITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Text(String),
    Tree(TreeDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Rendered {
    pub output: Output,
    /// Atoms at the requested level, nested ones included.
    pub atom_count: usize,
    pub degree_of_variability: u64,
    /// Validation warnings followed by expansion warnings.
    pub warnings: Vec<String>,
}

/// Validates, parses, expands and exports `input` according to `opts`.
pub fn render(input: &str, opts: &OutputOptions) -> Result<Rendered, Error> {
    let base = SubStatementId::new(&opts.stmt_id)?;
    let (tree, report) = parse_with_report(input)?;
    let dov = degree_of_variability(&tree);
    if dov > opts.max_variability {
        return Err(Error::ExpansionLimit { count: dov, limit: opts.max_variability });
    }
    let expansion = expand(&tree, &base, opts.level);
    let mut warnings: Vec<String> = report.warnings().map(ToString::to_string).collect();
    warnings.extend(expansion.warnings.iter().cloned());

    let output = match opts.format {
        OutputFormat::Csv | OutputFormat::Sheets => {
            let tabular = TabularOptions {
                include_headers: opts.include_headers,
                include_annotations: opts.include_annotations,
                format: if opts.format == OutputFormat::Csv { TabularFormat::Csv } else { TabularFormat::Sheets },
                ..TabularOptions::default()
            };
            Output::Text(tabular.render(&expansion))
        }
        OutputFormat::Tree => {
            let visual = VisualOptions {
                include_annotations: opts.include_annotations,
                include_properties: opts.include_properties,
                conditions_first: opts.conditions_first,
                ..VisualOptions::default()
            };
            Output::Tree(to_tree(&prepare(&tree, opts.level), &visual))
        }
    };
    Ok(Rendered { output, atom_count: expansion.atoms.len(), degree_of_variability: dov, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn running_example_csv() {
        let input = "A(officer) D(must) I(fine [AND] report) Bdir(violator) \
                     Cac(If officer (observes [XOR] is made aware of) violation)";
        let r = render(input, &OutputOptions { stmt_id: "650".into(), ..OutputOptions::default() }).unwrap();
        let Output::Text(csv) = &r.output else { panic!() };
        assert_eq!(csv.lines().count(), 5);
        assert_eq!((r.atom_count, r.degree_of_variability), (4, 4));
        assert!(csv.lines().nth(1).unwrap().starts_with("650.1|officer|"));
    }

    #[test]
    fn errors_are_typed() {
        assert!(matches!(render("A(actor", &OutputOptions::default()), Err(Error::Parse(_))));
        let bad_id = OutputOptions { stmt_id: "a.b".into(), ..OutputOptions::default() };
        assert!(matches!(render("A(x)", &bad_id), Err(Error::InvalidId(_))));
        let combos = "I(a [XOR] b) Bdir(a [XOR] b) Bind(a [XOR] b)";
        let small = OutputOptions { max_variability: 7, ..OutputOptions::default() };
        assert!(matches!(render(combos, &small), Err(Error::ExpansionLimit { count: 8, limit: 7 })));
    }

    #[test]
    fn warnings_are_collected() {
        let r = render("A(o) I(act) Bdir,p{A(x) I(y)} Bdir(z)", &OutputOptions::default()).unwrap();
        assert_eq!(r.warnings.len(), 1, "{:?}", r.warnings);
        let r = render("D(must) Bdir(z)", &OutputOptions::default()).unwrap();
        assert_eq!(r.warnings.len(), 2);
    }

    #[test]
    fn tree_output_follows_level() {
        let opts = OutputOptions { format: OutputFormat::Tree, level: Level::Core, ..OutputOptions::default() };
        let r = render("A(x) I(y) Cac{A(a) I(b)}", &opts).unwrap();
        let Output::Tree(doc) = &r.output else { panic!() };
        assert_eq!(doc.root.label, "A(x) I(y) Cac(a b)");
    }
}
