//! Tabular export.
//!
//! Every row has 19 fields: `Statement ID`, one column per component symbol
//! (in [`ComponentSymbol::ALL`] order) and `Logical Linkage`. Several values
//! in one cell are joined with `; `; linkage entries read `AND:650.2`.
//!
//! **CSV**: fields are separated by the delimiter (default `|`), rows end
//! with `\n`, and a field is wrapped in double quotes (embedded quotes
//! doubled) only when it contains the delimiter, a quote or a line break.
//!
//! **Sheets**: each row becomes one spreadsheet formula
//! `=SPLIT("<row>", "|")`. Inside the string literal a `"` is written as
//! `""`. Because `SPLIT` has no quoting, a delimiter inside a value is
//! replaced by `¦`, line breaks by a space, and empty cells are written as a
//! single space so `SPLIT` keeps them as columns instead of collapsing them.

use crate::model::{AtomicStatement, CellValue, ComponentSymbol};
use crate::transform::ExpansionResult;

/// Header row, in column order.
pub const COLUMNS: [&str; 19] = [
    "Statement ID",
    "Attributes",
    "Attributes Property",
    "Deontic",
    "Aim",
    "Direct Object",
    "Direct Object Property",
    "Indirect Object",
    "Indirect Object Property",
    "Activation Condition",
    "Execution Constraint",
    "Constituted Entity",
    "Constituted Entity Property",
    "Modal",
    "Constitutive Function",
    "Constituting Properties",
    "Constituting Properties Property",
    "Or Else",
    "Logical Linkage",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TabularFormat {
    #[default]
    Csv,
    Sheets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TabularOptions {
    pub include_headers: bool,
    pub include_annotations: bool,
    /// Single-byte field separator.
    pub delimiter: u8,
    pub format: TabularFormat,
}

impl Default for TabularOptions {
    fn default() -> Self {
        TabularOptions {
            include_headers: true,
            include_annotations: false,
            delimiter: b'|',
            format: TabularFormat::Csv,
        }
    }
}

impl TabularOptions {
    /// Renders `result` in the configured format.
    pub fn render(&self, result: &ExpansionResult) -> String {
        match self.format {
            TabularFormat::Csv => to_csv(result, self),
            TabularFormat::Sheets => to_sheets(result, self),
        }
    }
}

pub fn to_csv(result: &ExpansionResult, opts: &TabularOptions) -> String {
    let mut writer = csv::WriterBuilder::new()
        .delimiter(opts.delimiter)
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Necessary)
        .from_writer(Vec::new());
    // Writing into a Vec cannot fail.
    if opts.include_headers {
        writer.write_record(COLUMNS).expect("in-memory write");
    }
    for atom in &result.atoms {
        writer.write_record(row(atom, opts)).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("fields are UTF-8")
}

pub fn to_sheets(result: &ExpansionResult, opts: &TabularOptions) -> String {
    let delimiter = char::from(opts.delimiter);
    let mut out = String::new();
    let mut push = |cells: Vec<String>| {
        let joined = cells.iter().map(|c| sheets_cell(c, delimiter)).collect::<Vec<_>>().join(&delimiter.to_string());
        out.push_str("=SPLIT(\"");
        out.push_str(&joined.replace('"', "\"\""));
        out.push_str("\", \"");
        out.push_str(&delimiter.to_string().replace('"', "\"\""));
        out.push_str("\")\n");
    };
    if opts.include_headers {
        push(COLUMNS.iter().map(|c| c.to_string()).collect());
    }
    for atom in &result.atoms {
        push(row(atom, opts));
    }
    out
}

fn sheets_cell(cell: &str, delimiter: char) -> String {
    let cleaned: String = cell
        .chars()
        .map(|c| match c {
            c if c == delimiter => '¦',
            '\r' | '\n' => ' ',
            c => c,
        })
        .collect();
    if cleaned.is_empty() {
        " ".to_string()
    } else {
        cleaned
    }
}

/// The 19 field values of one atom.
pub(crate) fn row(atom: &AtomicStatement, opts: &TabularOptions) -> Vec<String> {
    let mut cells = Vec::with_capacity(COLUMNS.len());
    let mut id = atom.id.to_string();
    if opts.include_annotations {
        for a in &atom.statement_annotations {
            id.push_str(&format!(" [{}]", a.text));
        }
    }
    cells.push(id);
    for symbol in ComponentSymbol::ALL {
        let values: Vec<String> = atom.cell(symbol).iter().map(|v| value(v, opts.include_annotations)).collect();
        cells.push(values.join("; "));
    }
    let linkage: Vec<String> = atom.logical_linkage.iter().map(|l| format!("{}:{}", l.operator, l.other)).collect();
    cells.push(linkage.join("; "));
    cells
}

fn value(v: &CellValue, annotations: bool) -> String {
    let mut text = v.render();
    if annotations {
        for a in &v.annotations {
            text.push_str(&format!(" [{}]", a.text));
        }
    }
    text
}
