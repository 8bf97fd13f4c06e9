//! The `omlkit-greechie v1` document: atom labels and context lines.
//!
//! ```text
//! omlkit-greechie v1
//! atoms: a b c d e
//! contexts:
//! a b c
//! c d e
//! ```
//!
//! Context lines are newline-separated (one context per line); atoms
//! within a line are whitespace-separated. A declared atom in no context
//! is kept as an orphan, matching ray-derived families.

use super::{expect_header, ParseError};
use crate::family::ContextFamily;
use std::collections::BTreeMap;

pub fn parse_greechie(text: &str) -> Result<ContextFamily, ParseError> {
    // Contexts are line-structured, so scan lines rather than a flat
    // token stream; the header check reuses the token path.
    let tokens = super::tokenize(text);
    expect_header(&tokens, "omlkit-greechie")?;

    let mut atom_labels: Vec<String> = Vec::new();
    let mut ids: BTreeMap<String, usize> = BTreeMap::new();
    let mut contexts: Vec<Vec<usize>> = Vec::new();
    let mut section = "";
    for (li, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut words = line.split_whitespace().peekable();
        if li == 0 {
            continue; // header, already checked
        }
        if words.peek().is_none() {
            continue;
        }
        let column = |word: &str| raw_line.find(word).map(|p| p + 1).unwrap_or(1);
        let first = *words.peek().unwrap();
        if first == "atoms:" {
            section = "atoms";
            words.next();
        } else if first == "contexts:" {
            section = "contexts";
            words.next();
            if words.peek().is_some() {
                let w = words.next().unwrap();
                return Err(ParseError::new(
                    li + 1,
                    column(w),
                    "contexts start on the line after `contexts:`",
                ));
            }
            continue;
        } else if first.ends_with(':') {
            return Err(ParseError::new(
                li + 1,
                column(first),
                format!("unknown section `{first}`"),
            ));
        }
        match section {
            "atoms" => {
                for w in words {
                    if ids.contains_key(w) {
                        return Err(ParseError::new(
                            li + 1,
                            column(w),
                            format!("duplicate atom `{w}`"),
                        ));
                    }
                    ids.insert(w.to_string(), atom_labels.len());
                    atom_labels.push(w.to_string());
                }
            }
            "contexts" => {
                let mut ctx = Vec::new();
                for w in words {
                    let Some(&id) = ids.get(w) else {
                        return Err(ParseError::new(
                            li + 1,
                            column(w),
                            format!("unknown atom `{w}`"),
                        ));
                    };
                    if ctx.contains(&id) {
                        return Err(ParseError::new(
                            li + 1,
                            column(w),
                            format!("atom `{w}` repeated in context"),
                        ));
                    }
                    ctx.push(id);
                }
                contexts.push(ctx);
            }
            _ => {
                let w = words.next().unwrap();
                return Err(ParseError::new(
                    li + 1,
                    column(w),
                    format!("token `{w}` before any section"),
                ));
            }
        }
    }
    if atom_labels.is_empty() {
        return Err(ParseError::new(1, 1, "missing or empty `atoms:` section"));
    }
    ContextFamily::new(atom_labels, contexts).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Canonical document for a context family.
pub fn render_greechie(family: &ContextFamily) -> String {
    let mut out = String::from("omlkit-greechie v1\n");
    out.push_str("atoms:");
    for label in family.atom_labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push_str("\ncontexts:\n");
    for ctx in family.contexts() {
        let line: Vec<&str> = ctx
            .iter()
            .map(|&a| family.atom_labels()[a].as_str())
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
