//! Golden tabular fixtures: `NAME.ig` holds option lines (`#id: 650`,
//! `#level: core`, `#annotations`, `#no-headers`) followed by the statement;
//! `NAME.csv` holds the expected output.

use std::path::{Path, PathBuf};

use igscript::pipeline::{render, Output, OutputOptions};

pub struct Fixture {
    pub name: String,
    pub input: String,
    pub options: OutputOptions,
    pub expected: String,
}

/// Fixture directory, also found when compiled into a sibling crate.
pub fn dir() -> PathBuf {
    let here = Path::new(env!("CARGO_MANIFEST_DIR"));
    let own = here.join("tests/fixtures/golden");
    if own.is_dir() {
        own
    } else {
        here.join("../core/tests/fixtures/golden")
    }
}

pub fn load_all() -> Vec<Fixture> {
    load_from(&dir())
}

pub fn load_from(dir: &Path) -> Vec<Fixture> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "ig"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load(p)).collect()
}

fn load(path: &Path) -> Fixture {
    let text = std::fs::read_to_string(path).unwrap();
    let mut options = OutputOptions::default();
    let mut input = Vec::new();
    for line in text.lines() {
        match line.strip_prefix('#') {
            Some(directive) => match directive.split_once(':') {
                Some(("id", v)) => options.stmt_id = v.trim().to_string(),
                Some(("level", v)) => options.level = v.trim().parse().unwrap(),
                _ if directive == "annotations" => options.include_annotations = true,
                _ if directive == "no-headers" => options.include_headers = false,
                _ => panic!("{}: unknown directive {line}", path.display()),
            },
            None => input.push(line),
        }
    }
    Fixture {
        name: path.file_stem().unwrap().to_string_lossy().into_owned(),
        input: input.join("\n"),
        options,
        expected: std::fs::read_to_string(path.with_extension("csv")).unwrap(),
    }
}

impl Fixture {
    pub fn actual(&self) -> String {
        match render(&self.input, &self.options).unwrap_or_else(|e| panic!("{}: {e}", self.name)).output {
            Output::Text(text) => text,
            Output::Tree(_) => unreachable!("csv requested"),
        }
    }
}

/// Number of fields in every record of `csv_text`.
pub fn field_counts(csv_text: &str) -> Vec<usize> {
    csv::ReaderBuilder::new()
        .delimiter(b'|')
        .has_headers(false)
        .from_reader(csv_text.as_bytes())
        .records()
        .map(|r| r.unwrap().len())
        .collect()
}
