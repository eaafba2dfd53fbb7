//! Batch files: statements separated by blank lines. A block may start with
//! an `#id: <base>` line; other lines starting with `#` are comments.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub id: Option<String>,
    pub statement: String,
    /// 1-based file line on which `statement` starts.
    pub line: usize,
}

impl Entry {
    /// File line and 1-based column (in characters) of byte `offset` in the
    /// statement.
    pub fn locate(&self, offset: usize) -> (usize, usize) {
        let offset = offset.min(self.statement.len());
        let before = &self.statement[..offset];
        let line = self.line + before.matches('\n').count();
        let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
        (line, column)
    }
}

pub fn parse_batch(text: &str) -> Vec<Entry> {
    let mut entries = Vec::new();
    // Pending `#id:` value and the line after it.
    let mut id: Option<(String, usize)> = None;
    let mut lines: Vec<&str> = Vec::new();
    let mut start = 0;
    let mut flush = |id: &mut Option<(String, usize)>, lines: &mut Vec<&str>, start: usize| {
        // An id without a statement is kept so it fails visibly.
        if !lines.is_empty() || id.is_some() {
            let (id, line) = match id.take() {
                Some((value, after)) => (Some(value), if lines.is_empty() { after } else { start }),
                None => (None, start),
            };
            entries.push(Entry { id, statement: lines.join("\n"), line });
            lines.clear();
        }
    };
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            flush(&mut id, &mut lines, start);
        } else if let Some(directive) = trimmed.strip_prefix('#') {
            if let Some(value) = directive.trim_start().strip_prefix("id:") {
                if !lines.is_empty() || id.is_some() {
                    flush(&mut id, &mut lines, start);
                }
                id = Some((value.trim().to_string(), line_no + 1));
            }
        } else {
            if lines.is_empty() {
                start = line_no;
            }
            lines.push(raw);
        }
    }
    flush(&mut id, &mut lines, start);
    entries
}
