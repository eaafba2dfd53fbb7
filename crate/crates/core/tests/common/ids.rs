//! Structural checks on the identifiers of an expansion.

use std::collections::{BTreeMap, BTreeSet};

use igscript::ExpansionResult;
use regex::Regex;

/// Every ID well formed for `base`, unique, densely numbered per host, and
/// every reference or linkage target present in the result.
pub fn check(result: &ExpansionResult, base: &str) -> Result<(), String> {
    let re = Regex::new(&format!(r"^(\{{*)({})(\.[1-9][0-9]*)?((\}}\.[1-9][0-9]*)*)$", regex::escape(base))).unwrap();
    let mut seen = BTreeSet::new();
    let mut children: BTreeMap<String, Vec<u32>> = BTreeMap::new();
    for atom in &result.atoms {
        let id = atom.id.to_string();
        let caps = re.captures(&id).ok_or_else(|| format!("malformed id {id}"))?;
        let opening = caps[1].len();
        let closing = caps[4].matches('}').count();
        if opening != closing {
            return Err(format!("unbalanced id {id}"));
        }
        if !seen.insert(id.clone()) {
            return Err(format!("duplicate id {id}"));
        }
        // Host is everything before the last `.k`.
        if let Some((host, k)) = id.rsplit_once('.') {
            let host = host.strip_prefix('{').and_then(|h| h.strip_suffix('}')).unwrap_or(host);
            children.entry(host.to_string()).or_default().push(k.parse().unwrap());
        }
    }
    for (host, ks) in &children {
        let mut sorted = ks.clone();
        sorted.sort_unstable();
        if sorted != (1..=ks.len() as u32).collect::<Vec<_>>() {
            return Err(format!("children of {host} not numbered 1..n: {ks:?}"));
        }
    }
    for atom in &result.atoms {
        let targets =
            atom.references().map(|r| r.to_string()).chain(atom.logical_linkage.iter().map(|l| l.other.to_string()));
        for target in targets {
            if !seen.contains(&target) {
                return Err(format!("{} refers to missing {target}", atom.id));
            }
        }
    }
    Ok(())
}
