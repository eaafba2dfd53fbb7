use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Segment {
    Expansion(NonZeroU32),
    /// Wraps everything before it in braces. Always followed by an
    /// expansion index.
    Nesting,
}

/// Identifier of one atomic statement: `123`, `123.2`, `{123.1}.1`,
/// `{{123.1}.2}.1`, ...
///
/// `.k` numbers the k-th statement expanded at one level; `{prefix}.k`
/// is the k-th statement nested inside the statement `prefix`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubStatementId {
    base: String,
    path: Vec<Segment>,
}

impl SubStatementId {
    /// A root id. The base must be non-empty and free of the characters
    /// the id syntax and tabular output reserve (`.{}|;`, whitespace).
    pub fn new(base: &str) -> Result<Self, Error> {
        validate_base(base)?;
        Ok(SubStatementId { base: base.to_string(), path: Vec::new() })
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    /// `PREFIX.k`
    pub fn child(&self, k: NonZeroU32) -> Self {
        let mut id = self.clone();
        id.path.push(Segment::Expansion(k));
        id
    }

    /// `{PREFIX}.k`
    pub fn nested(&self, k: NonZeroU32) -> Self {
        let mut id = self.clone();
        id.path.push(Segment::Nesting);
        id.path.push(Segment::Expansion(k));
        id
    }

    /// Number of nesting markers, i.e. how deep the statement is embedded.
    pub fn nesting_depth(&self) -> usize {
        self.path.iter().filter(|s| matches!(s, Segment::Nesting)).count()
    }

    pub fn is_nested(&self) -> bool {
        self.nesting_depth() > 0
    }
}

fn validate_base(base: &str) -> Result<(), Error> {
    if base.is_empty() {
        return Err(Error::InvalidId("statement id must not be empty".into()));
    }
    if let Some(c) =
        base.chars().find(|c| matches!(c, '.' | '{' | '}' | '|' | ';') || c.is_whitespace() || c.is_control())
    {
        return Err(Error::InvalidId(format!("statement id `{base}` contains reserved character {c:?}")));
    }
    Ok(())
}

impl fmt::Display for SubStatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.nesting_depth() {
            f.write_str("{")?;
        }
        f.write_str(&self.base)?;
        for segment in &self.path {
            match segment {
                Segment::Expansion(k) => write!(f, ".{k}")?,
                Segment::Nesting => f.write_str("}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SubStatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidId(format!("malformed sub-statement id `{s}`"));
        let opening = s.bytes().take_while(|&b| b == b'{').count();
        let rest = &s[opening..];
        let base_end = rest.find(['.', '}']).unwrap_or(rest.len());
        let mut id = SubStatementId::new(&rest[..base_end])?;
        let mut rest = &rest[base_end..];
        let mut closed = 0;
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('}') {
                closed += 1;
                id.path.push(Segment::Nesting);
                rest = r;
                if !rest.starts_with('.') {
                    return Err(bad());
                }
                continue;
            }
            let r = rest.strip_prefix('.').ok_or_else(bad)?;
            let digits = r.bytes().take_while(u8::is_ascii_digit).count();
            let k: NonZeroU32 = r[..digits].parse().map_err(|_| bad())?;
            id.path.push(Segment::Expansion(k));
            rest = &r[digits..];
        }
        if closed != opening {
            return Err(bad());
        }
        Ok(id)
    }
}

impl Serialize for SubStatementId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SubStatementId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}
