//! The poset text format:
//!   `# ...` comment lines,
//!   `elements: <tok> <tok> ...` exactly once,
//!   `covers:` followed by lines `<tok> < <tok>`.

use std::fmt;

use posetkit_core::{Poset, Result as CoreResult};

#[derive(Debug)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for SyntaxError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError {
        line,
        column,
        message: message.into(),
    }
}

pub struct PosetFile {
    pub names: Vec<String>,
    pub covers: Vec<(String, String)>,
}

pub fn parse_poset_text(text: &str) -> Result<PosetFile, SyntaxError> {
    let mut names: Option<Vec<String>> = None;
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut in_covers = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("elements:") {
            if names.is_some() {
                return Err(err(lineno, 1, "duplicate `elements:` line"));
            }
            let toks: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if toks.is_empty() {
                return Err(err(lineno, line.len(), "no element tokens"));
            }
            names = Some(toks);
            continue;
        }
        if line == "covers:" {
            if names.is_none() {
                return Err(err(lineno, 1, "`covers:` before `elements:`"));
            }
            if in_covers {
                return Err(err(lineno, 1, "duplicate `covers:` line"));
            }
            in_covers = true;
            continue;
        }
        if !in_covers {
            return Err(err(lineno, 1, "expected `elements:` or `covers:`"));
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 || parts[1] != "<" {
            return Err(err(lineno, 1, "expected `<tok> < <tok>`"));
        }
        covers.push((parts[0].to_string(), parts[2].to_string()));
    }
    let names = names.ok_or_else(|| err(1, 1, "missing `elements:` line"))?;
    Ok(PosetFile { names, covers })
}

pub fn build_poset(pf: &PosetFile) -> CoreResult<Poset> {
    let covers: Vec<(&str, &str)> = pf
        .covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let names: Vec<&str> = pf.names.iter().map(String::as_str).collect();
    Poset::from_covers(&names, &covers)
}

/// Serialize back into the text format; re-parsing yields the same poset.
pub fn serialize_poset(p: &Poset) -> String {
    let mut out = String::from("elements:");
    for x in 0..p.size() {
        out.push(' ');
        out.push_str(p.name(x));
    }
    out.push_str("\ncovers:\n");
    for (x, y) in p.cover_pairs() {
        out.push_str(&format!("{} < {}\n", p.name(x), p.name(y)));
    }
    out
}
