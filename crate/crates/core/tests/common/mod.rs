//! Shared test support: example corpus, a random statement generator and a
//! brute-force variant counter that works on the raw script text.
#![allow(dead_code)]

pub mod golden;
pub mod ids;
pub mod invalid;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Running-example variants and one expression per syntax pattern.
pub const REFERENCE_EXAMPLES: &[&str] = &[
    // Running example, from plain coding to annotated pair combinations.
    "Cac(If officer observes or is made aware of violation), A(officer) D(must) I(fine and report) Bdir(violator) to Bind(authority).",
    "Cac(If officer (observes [XOR] is made aware of) violation), A(officer) D(must) I(fine [AND] report) Bdir(violator) to Bind(authority).",
    "Cac{If A(officer) I(observes [XOR] is made aware of) Bdir(violation)}, A(officer) D(must) I(fine [AND] report) Bdir(violator) to Bind(authority).",
    "Cac{Cac{If A(officer) I(observes [XOR] is made aware of) Bdir(violation)} [AND] Cac{if A(officer) I(deems) Bdir(intervention) Cex(safe)}}, A(officer) D(must) I(fine [AND] report) Bdir(violator) to Bind(authority).",
    "Cac{Cac{If A(officer) I(observes [XOR] is made aware of) Bdir(violation)} [AND] Cac{if A(officer) I(deems) Bdir(intervention) Cex(safe)}}, A(officer) D(must) {I(fine) Bdir(violator) [AND] I(file) Bdir(report) with Bind(district court)}.",
    "Cac{Cac[condition=violation]{If A[role=enforcer](officer) I(observes [XOR] is made aware of) Bdir(violation)} [AND] Cac[condition=safety]{if A[role=enforcer](officer) I(deems) Bdir(intervention) Cex(safe)}}, A[role=enforcer](officer) D[stringency=high](must) {I[act=sanction](fine) Bdir(violator) [AND] I[act=report](file) Bdir(report) with Bind[act=authority](district court)} [statement-type=consequential].",
    "... Bdir,p(written) Bdir(report) ...",
    // Syntax pattern tables.
    "A(actor)",
    "A(actor) D(may) I(fine [XOR] arrest)",
    "A(actor) D(must) I(monitor [AND] (fine [XOR] arrest))",
    "A(actor) D(must) I(act) under the condition that Cac{A(actor) I(observes) Bdir(violation)}",
    "A(actor) D(must) I(act) under the condition that Cac{Cac{A(enforcer) I(observes) Bdir(violation)} [AND] Cac{ A(violator) I(attempts) Bdir(escape)}}",
    "A(enforcer) D(may) {I(investigate) Bdir(compliance) [XOR] I(delegate) Bdir(investigation) to Bind(colleague)}",
    "A[role=enforcer](officer) D[stringency=high](must) I[act=sanction](fine) Bdir[role=target](violator)",
    "... Cac[condition=violation]{if A[role=violator](violator) I[act=violate](violates)}",
    "Cac[condition=observedViolation]{ Cac[condition=violation]{if A[role=violator](violator) I[act=violate](violates)} [AND] Cac[condition=observation]{if A[role=monitor](monitor) I[act=observe](observes) Bdir(violation)}}",
    "[statement-type=consequence] A[role=enforcer](officer) D[stringency=high](must) I[act=sanction](fine) [another statement-level annotation] Bdir(violator), Cac[condition=violation]{if A[role=violator](violator) I[act=violate](violates)}",
];

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

const OPERATORS: [&str; 3] = ["AND", "OR", "XOR"];

/// Number of readings of `script` at IG Core, found by repeatedly picking
/// the first bracket group holding a top-level logical operator and
/// substituting each operand in turn. Shares no code with the library.
pub fn brute_force_count(script: &str) -> u64 {
    match first_combination(script) {
        None => 1,
        Some(split) => split.readings().iter().map(|s| brute_force_count(s)).sum(),
    }
}

/// Every reading of `script`, in the same order as [`brute_force_count`].
pub fn brute_force_readings(script: &str) -> Vec<String> {
    match first_combination(script) {
        None => vec![script.to_string()],
        Some(split) => split.readings().iter().flat_map(|s| brute_force_readings(s)).collect(),
    }
}

struct Split<'a> {
    script: &'a str,
    open: usize,
    close: usize,
    keep_brackets: bool,
    operands: Vec<&'a str>,
}

impl Split<'_> {
    fn readings(&self) -> Vec<String> {
        self.operands
            .iter()
            .map(|operand| {
                let (head, tail) = if self.keep_brackets {
                    (&self.script[..=self.open], &self.script[self.close..])
                } else {
                    (&self.script[..self.open], &self.script[self.close + 1..])
                };
                format!("{head}{}{tail}", operand.trim())
            })
            .collect()
    }
}

fn square_end(b: &[u8], open: usize) -> usize {
    let mut depth = 0;
    for (i, &c) in b.iter().enumerate().skip(open) {
        if c == b'[' {
            depth += 1;
        } else if c == b']' {
            depth -= 1;
            if depth == 0 {
                return i;
            }
        }
    }
    b.len() - 1
}

fn is_operator(inner: &str) -> bool {
    OPERATORS.contains(&inner.trim())
}

fn first_combination(script: &str) -> Option<Split<'_>> {
    let b = script.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'[' => i = square_end(b, i),
            b'(' | b'{' => {
                if let Some(split) = split_group(script, i) {
                    return Some(split);
                }
            }
            _ => {}
        }
        i += 1;
    }
    None
}

/// Operands of the group opened at `open` if it has a top-level operator.
fn split_group(script: &str, open: usize) -> Option<Split<'_>> {
    let b = script.as_bytes();
    let mut depth = 0usize;
    let mut cuts = Vec::new();
    let mut i = open;
    let close = loop {
        match b[i] {
            b'(' | b'{' => depth += 1,
            b')' | b'}' => {
                depth -= 1;
                if depth == 0 {
                    break i;
                }
            }
            b'[' => {
                let end = square_end(b, i);
                if depth == 1 && is_operator(&script[i + 1..end]) {
                    cuts.push((i, end));
                }
                i = end;
            }
            _ => {}
        }
        i += 1;
    };
    if cuts.is_empty() {
        return None;
    }
    let mut operands = Vec::new();
    let mut from = open + 1;
    for (s, e) in cuts {
        operands.push(&script[from..s]);
        from = e + 1;
    }
    operands.push(&script[from..close]);
    Some(Split { script, open, close, keep_brackets: follows_symbol(script, open), operands })
}

/// Whether the bracket at `open` is a component body (`Sym(`, `Sym[..](`).
fn follows_symbol(script: &str, open: usize) -> bool {
    let mut before = &script[..open];
    if before.ends_with(']') {
        let b = before.as_bytes();
        let mut depth = 0;
        let mut j = b.len();
        while j > 0 {
            j -= 1;
            match b[j] {
                b']' => depth += 1,
                b'[' => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                _ => {}
            }
        }
        before = &before[..j];
    }
    const CODES: [&str; 17] =
        ["A,p", "A", "D", "I", "Bdir,p", "Bdir", "Bind,p", "Bind", "E,p", "E", "M", "F", "P,p", "P", "Cac", "Cex", "O"];
    CODES.iter().any(|code| {
        before.ends_with(code) && {
            let rest = &before[..before.len() - code.len()];
            !rest.chars().next_back().is_some_and(|c| c.is_alphanumeric() || c == '_')
        }
    })
}

// ---------------------------------------------------------------------------
// Random statements
// ---------------------------------------------------------------------------

const WORDS: &[&str] = &[
    "officer",
    "violator",
    "report",
    "fine",
    "court",
    "council",
    "member",
    "permit",
    "inspects",
    "notify",
    "district",
    "records",
    "annually",
    "within thirty days",
    "the agency",
    "farmer",
    "certified",
    "organic",
];

const ATOMIC_SYMBOLS: &[&str] =
    &["A", "A,p", "D", "I", "Bdir", "Bdir,p", "Bind", "Bind,p", "Cac", "Cex", "E", "E,p", "M", "F", "P", "P,p", "O"];
const NESTING_SYMBOLS: &[&str] = &["A", "Bdir", "Bind", "Cac", "Cex", "E", "P", "O"];

#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    /// Maximum nesting depth of `sym{...}` and pair braces.
    pub depth: u32,
    /// Maximum number of combination operators across the statement.
    pub combinations: u32,
    /// Alternatives per combination: 2..=max_alternatives.
    pub max_alternatives: u32,
    pub annotations: bool,
    pub nesting: bool,
    pub pairs: bool,
}

impl GenConfig {
    /// Flat statements: content combinations only.
    pub fn flat() -> Self {
        GenConfig { depth: 0, combinations: 3, max_alternatives: 3, annotations: false, nesting: false, pairs: false }
    }

    /// Everything IG Logico has to offer.
    pub fn logico() -> Self {
        GenConfig { depth: 2, combinations: 3, max_alternatives: 3, annotations: true, nesting: true, pairs: true }
    }
}

pub struct Generator {
    rng: StdRng,
    cfg: GenConfig,
    combinations_left: u32,
}

impl Generator {
    pub fn new(seed: u64, cfg: GenConfig) -> Self {
        Generator { rng: StdRng::seed_from_u64(seed), cfg, combinations_left: 0 }
    }

    /// A fresh valid statement.
    pub fn statement(&mut self) -> String {
        self.combinations_left = self.cfg.combinations;
        let mut parts = Vec::new();
        if self.cfg.annotations && self.rng.gen_bool(0.3) {
            parts.push(self.annotation());
        }
        let body = self.elements(self.cfg.depth, true);
        parts.push(body);
        if self.cfg.annotations && self.rng.gen_bool(0.3) {
            parts.push(self.annotation());
        }
        parts.join(" ")
    }

    fn elements(&mut self, depth: u32, allow_pairs: bool) -> String {
        let n = self.rng.gen_range(1..=4);
        let mut parts = Vec::new();
        for _ in 0..n {
            let roll = self.rng.gen_range(0..100);
            if roll < 10 {
                parts.push(self.word().to_string());
            }
            if allow_pairs && self.cfg.pairs && depth > 0 && roll >= 90 && self.take_combination() {
                parts.push(self.pair(depth));
            } else if self.cfg.nesting && depth > 0 && roll >= 75 {
                parts.push(self.nested(depth));
            } else {
                parts.push(self.atomic());
            }
        }
        parts.join(" ")
    }

    fn take_combination(&mut self) -> bool {
        if self.combinations_left == 0 {
            return false;
        }
        self.combinations_left -= 1;
        true
    }

    fn operator(&mut self) -> &'static str {
        OPERATORS.choose(&mut self.rng).copied().unwrap()
    }

    fn word(&mut self) -> &'static str {
        WORDS.choose(&mut self.rng).copied().unwrap()
    }

    fn alternatives(&mut self) -> u32 {
        self.rng.gen_range(2..=self.cfg.max_alternatives.max(2))
    }

    fn annotation(&mut self) -> String {
        let keys = ["role", "act", "condition", "stringency", "type"];
        format!("[{}={}]", keys.choose(&mut self.rng).unwrap(), self.word().replace(' ', "-"))
    }

    fn maybe_annotation(&mut self) -> String {
        if self.cfg.annotations && self.rng.gen_bool(0.4) {
            self.annotation()
        } else {
            String::new()
        }
    }

    fn atomic(&mut self) -> String {
        let symbol = *ATOMIC_SYMBOLS.choose(&mut self.rng).unwrap();
        let annotation = self.maybe_annotation();
        let content = self.content(true);
        format!("{symbol}{annotation}({content})")
    }

    /// Component content, possibly with a combination.
    fn content(&mut self, allow_inline: bool) -> String {
        if !self.rng.gen_bool(0.45) || !self.take_combination() {
            return self.word().to_string();
        }
        let op = self.operator();
        let n = self.alternatives();
        let mut alts = Vec::new();
        for _ in 0..n {
            if self.rng.gen_bool(0.2) && self.take_combination() {
                // Precedence group with a different operator.
                let inner_op = OPERATORS.iter().copied().find(|o| *o != op).unwrap();
                let m = self.alternatives();
                let inner: Vec<String> = (0..m).map(|_| self.word().to_string()).collect();
                alts.push(format!("({})", inner.join(&format!(" [{inner_op}] "))));
            } else {
                alts.push(self.word().to_string());
            }
        }
        let group = alts.join(&format!(" [{op}] "));
        if allow_inline && self.rng.gen_bool(0.3) {
            format!("{} ({group}) {}", self.word(), self.word())
        } else {
            group
        }
    }

    fn nested(&mut self, depth: u32) -> String {
        let symbol = *NESTING_SYMBOLS.choose(&mut self.rng).unwrap();
        let annotation = self.maybe_annotation();
        if self.rng.gen_bool(0.3) && self.take_combination() {
            let op = self.operator();
            let n = self.alternatives();
            let children: Vec<String> = (0..n)
                .map(|_| {
                    let a = self.maybe_annotation();
                    format!("{symbol}{a}{{{}}}", self.inner_statement(depth - 1))
                })
                .collect();
            format!("{symbol}{annotation}{{{}}}", children.join(&format!(" [{op}] ")))
        } else {
            format!("{symbol}{annotation}{{{}}}", self.inner_statement(depth - 1))
        }
    }

    /// Nested statement body: at least A and I so it reads like a statement.
    fn inner_statement(&mut self, depth: u32) -> String {
        let extra = self.elements(depth, true);
        let a = self.content(false);
        let i = self.content(false);
        format!("A({a}) I({i}) {extra}")
    }

    fn pair(&mut self, depth: u32) -> String {
        let op = self.operator();
        let n = self.alternatives();
        let branches: Vec<String> = (0..n)
            .map(|_| {
                let i = self.content(false);
                let b = self.content(false);
                let mut branch = format!("I({i}) Bdir({b})");
                if self.rng.gen_bool(0.3) {
                    branch.push_str(&format!(" {} {}", self.word(), self.elements(depth - 1, false)));
                }
                branch
            })
            .collect();
        format!("{{{}}}", branches.join(&format!(" [{op}] ")))
    }
}

/// `n` statements from consecutive seeds.
pub fn statements(seed: u64, n: usize, cfg: GenConfig) -> Vec<String> {
    let mut g = Generator::new(seed, cfg);
    (0..n).map(|_| g.statement()).collect()
}
