//! Command-line front end: batch files in, tabular or tree output out.
//!
//! Exit codes: `0` all entries succeeded, `1` at least one entry failed
//! (reported on stderr, the rest still written), `2` usage or I/O error.

pub mod batch;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use igscript::export::{TabularFormat, TabularOptions};
use igscript::pipeline::{render, Output, OutputFormat, OutputOptions, Rendered};
use igscript::{Error, ExpansionResult, Level, SubStatementId};
use rayon::prelude::*;

use batch::{parse_batch, Entry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Sheets,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Core,
    Extended,
    Logico,
}

/// Parse IG Script statements into atomic-statement tables or tree documents.
///
/// The input holds one statement per block; blocks are separated by blank
/// lines. A block may start with `#id: <base>`; other `#` lines are comments.
/// Blocks without an id are numbered by position, except a lone statement,
/// which uses --id.
#[derive(Debug, Parser)]
#[command(name = "igscript", version)]
pub struct Args {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Statement ID for a single statement without `#id:`.
    #[arg(long, default_value = "1")]
    pub id: String,
    #[arg(long, value_enum, default_value = "logico")]
    pub level: LevelArg,
    /// Omit the header row of tabular output.
    #[arg(long)]
    pub no_headers: bool,
    /// Include annotations in the output.
    #[arg(long)]
    pub annotations: bool,
    /// Tree output: leave out property nodes.
    #[arg(long)]
    pub no_properties: bool,
    /// Tree output: put activation conditions first.
    #[arg(long)]
    pub conditions_first: bool,
    /// Output file, or `-` for stdout.
    #[arg(long, default_value = "-")]
    pub out: String,
}

impl Args {
    fn options(&self) -> OutputOptions {
        OutputOptions {
            format: match self.format {
                Format::Csv => OutputFormat::Csv,
                Format::Sheets => OutputFormat::Sheets,
                Format::Tree => OutputFormat::Tree,
            },
            stmt_id: self.id.clone(),
            level: match self.level {
                LevelArg::Core => Level::Core,
                LevelArg::Extended => Level::Extended,
                LevelArg::Logico => Level::Logico,
            },
            include_headers: !self.no_headers,
            include_annotations: self.annotations,
            include_properties: !self.no_properties,
            conditions_first: self.conditions_first,
            ..OutputOptions::default()
        }
    }
}

/// Runs the tool. `stdin` is only read when the input is `-`.
pub fn run(args: &Args, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(args, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(stderr, "igscript: {message}");
            2
        }
    }
}

fn execute(args: &Args, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, String> {
    SubStatementId::new(&args.id).map_err(|e| format!("--id: {e}"))?;
    let (name, text) = if args.input == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|e| format!("cannot read stdin: {e}"))?;
        ("<stdin>".to_string(), text)
    } else {
        let path = PathBuf::from(&args.input);
        let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        (args.input.clone(), text)
    };
    let entries = parse_batch(&text);
    if entries.is_empty() {
        return Err("no statements in input (usage: igscript --input <path|-> [--format csv|sheets|tree])".into());
    }

    let options = args.options();
    let single = entries.len() == 1;
    let results: Vec<(String, Result<Rendered, Error>)> = entries
        .par_iter()
        .enumerate()
        .map(|(i, entry)| {
            let id = match &entry.id {
                Some(id) => id.clone(),
                None if single => args.id.clone(),
                None => (i + 1).to_string(),
            };
            // Headers are emitted once below, not per entry.
            let opts = OutputOptions { stmt_id: id.clone(), include_headers: false, ..options.clone() };
            let rendered = render(&entry.statement, &opts);
            (id, rendered)
        })
        .collect();

    let mut out = String::new();
    let tabular = match options.format {
        OutputFormat::Csv => Some(TabularFormat::Csv),
        OutputFormat::Sheets => Some(TabularFormat::Sheets),
        OutputFormat::Tree => None,
    };
    if let (Some(format), true) = (tabular, options.include_headers) {
        let empty = ExpansionResult { atoms: Vec::new(), root_base: String::new(), warnings: Vec::new() };
        let header = TabularOptions {
            include_headers: true,
            include_annotations: options.include_annotations,
            format,
            ..TabularOptions::default()
        };
        out.push_str(&header.render(&empty));
    }
    let mut failed = false;
    for ((id, result), entry) in results.into_iter().zip(&entries) {
        match result {
            Ok(rendered) => {
                for w in &rendered.warnings {
                    let _ = writeln!(stderr, "{name}:{}: warning: statement {id}: {w}", entry.line);
                }
                match rendered.output {
                    Output::Text(text) => out.push_str(&text),
                    Output::Tree(doc) => {
                        let line = serde_json::json!({ "id": id, "document": doc });
                        out.push_str(&line.to_string());
                        out.push('\n');
                    }
                }
            }
            Err(e) => {
                failed = true;
                report(stderr, &name, entry, &id, &e);
            }
        }
    }
    write_output(&args.out, stdout, out.as_bytes())?;
    Ok(if failed { 1 } else { 0 })
}

fn report(stderr: &mut dyn Write, name: &str, entry: &Entry, id: &str, error: &Error) {
    match error {
        Error::Parse(p) => {
            for issue in p.report.errors() {
                let (line, column) = entry.locate(issue.position);
                let _ = writeln!(
                    stderr,
                    "{name}:{line}:{column}: error[{}]: statement {id}: {}",
                    issue.kind, issue.message
                );
            }
        }
        other => {
            let _ = writeln!(stderr, "{name}:{}: error: statement {id}: {other}", entry.line);
        }
    }
}

fn write_output(target: &str, stdout: &mut dyn Write, bytes: &[u8]) -> Result<(), String> {
    if target == "-" {
        stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(|e| format!("cannot write output: {e}"))
    } else {
        std::fs::write(target, bytes).map_err(|e| format!("cannot write {target}: {e}"))
    }
}
