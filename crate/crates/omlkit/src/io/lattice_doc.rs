//! The `omlkit-lattice v1` document: element labels, Hasse covers, ortho.
//!
//! ```text
//! omlkit-lattice v1
//! elements: 0 a1 a2 ¬a1 ¬a2 1
//! covers:
//! 0 a1
//! a1 1
//! ortho:
//! 0 1
//! a1 ¬a1
//! ```
//!
//! Covers are `lower upper` pairs; the full order is their reflexive
//! transitive closure. Each ortho line pairs an element with its
//! orthocomplement (both directions). Every element must appear in
//! exactly one ortho pair; `x x` is syntactically legal so the degenerate
//! one-element lattice can be written.

use super::{expect_header, tokenize, ParseError, Token};
use crate::lattice::{OrthoLattice, StructuralError};
use std::collections::BTreeMap;

pub fn parse_lattice(text: &str) -> Result<OrthoLattice, ParseError> {
    let tokens = tokenize(text);
    let rest = expect_header(&tokens, "omlkit-lattice")?;

    let mut sections: BTreeMap<&str, Vec<&Token>> = BTreeMap::new();
    let mut current: Option<&str> = None;
    for tok in rest {
        match tok.text.as_str() {
            "elements:" => current = Some("elements"),
            "covers:" => current = Some("covers"),
            "ortho:" => current = Some("ortho"),
            text if text.ends_with(':') => {
                return Err(ParseError::new(
                    tok.line,
                    tok.column,
                    format!("unknown section `{text}`"),
                ))
            }
            _ => match current {
                Some(name) => sections.entry(name).or_default().push(tok),
                None => {
                    return Err(ParseError::new(
                        tok.line,
                        tok.column,
                        format!("token `{}` before any section", tok.text),
                    ))
                }
            },
        }
    }

    let element_tokens = sections.remove("elements").unwrap_or_default();
    if element_tokens.is_empty() {
        return Err(ParseError::new(
            1,
            1,
            "missing or empty `elements:` section",
        ));
    }
    let mut labels: Vec<String> = Vec::with_capacity(element_tokens.len());
    let mut ids: BTreeMap<&str, usize> = BTreeMap::new();
    for tok in &element_tokens {
        if ids.contains_key(tok.text.as_str()) {
            return Err(ParseError::new(
                tok.line,
                tok.column,
                format!("duplicate element `{}`", tok.text),
            ));
        }
        ids.insert(tok.text.as_str(), labels.len());
        labels.push(tok.text.clone());
    }
    let n = labels.len();
    let lookup = |tok: &Token| -> Result<usize, ParseError> {
        ids.get(tok.text.as_str()).copied().ok_or_else(|| {
            ParseError::new(
                tok.line,
                tok.column,
                format!("unknown element `{}`", tok.text),
            )
        })
    };

    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    let cover_tokens = sections.remove("covers").unwrap_or_default();
    if !cover_tokens.len().is_multiple_of(2) {
        let t = cover_tokens.last().unwrap();
        return Err(ParseError::new(
            t.line,
            t.column,
            "covers section has an odd number of tokens (pairs expected)",
        ));
    }
    let mut cover_edges: Vec<(usize, usize, &Token)> = Vec::new();
    for pair in cover_tokens.chunks(2) {
        let lo = lookup(pair[0])?;
        let hi = lookup(pair[1])?;
        if lo == hi {
            return Err(ParseError::new(
                pair[0].line,
                pair[0].column,
                format!("cover pair relates `{}` to itself", pair[0].text),
            ));
        }
        leq[lo * n + hi] = true;
        cover_edges.push((lo, hi, pair[0]));
    }
    // Cycle detection on the cover digraph, so the error points at a
    // cover pair inside the cycle rather than at the document head.
    {
        let mut degree = vec![0usize; n];
        for &(_, hi, _) in &cover_edges {
            degree[hi] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] == 0).collect();
        let mut removed = vec![false; n];
        while let Some(v) = queue.pop() {
            removed[v] = true;
            for &(lo, hi, _) in &cover_edges {
                if lo == v {
                    degree[hi] -= 1;
                    if degree[hi] == 0 {
                        queue.push(hi);
                    }
                }
            }
        }
        if let Some(&(lo, hi, tok)) = cover_edges
            .iter()
            .find(|&&(lo, hi, _)| !removed[lo] && !removed[hi])
        {
            return Err(ParseError::new(
                tok.line,
                tok.column,
                format!(
                    "cover relation has a cycle through `{}` and `{}`",
                    labels[lo], labels[hi]
                ),
            ));
        }
    }

    let ortho_tokens = sections.remove("ortho").unwrap_or_default();
    if !ortho_tokens.len().is_multiple_of(2) {
        let t = ortho_tokens.last().unwrap();
        return Err(ParseError::new(
            t.line,
            t.column,
            "ortho section has an odd number of tokens (pairs expected)",
        ));
    }
    let mut ortho: Vec<Option<u32>> = vec![None; n];
    let mut set_ortho = |a: usize, b: usize, tok: &Token| -> Result<(), ParseError> {
        match ortho[a] {
            Some(prev) if prev as usize != b => Err(ParseError::new(
                tok.line,
                tok.column,
                format!("conflicting ortho assignment for `{}`", labels[a]),
            )),
            _ => {
                ortho[a] = Some(b as u32);
                Ok(())
            }
        }
    };
    for pair in ortho_tokens.chunks(2) {
        let a = lookup(pair[0])?;
        let b = lookup(pair[1])?;
        set_ortho(a, b, pair[0])?;
        set_ortho(b, a, pair[1])?;
    }
    let mut ortho_total = Vec::with_capacity(n);
    for (i, o) in ortho.into_iter().enumerate() {
        match o {
            Some(v) => ortho_total.push(v),
            None => {
                // Point at the element's declaration.
                let tok = element_tokens[i];
                return Err(ParseError::new(
                    tok.line,
                    tok.column,
                    format!("element `{}` has no ortho assignment", labels[i]),
                ));
            }
        }
    }

    OrthoLattice::from_order(leq, ortho_total, labels).map_err(|e| structural_to_parse(&e))
}

// from_order reports order defects with labels but no positions; surface
// them as document-level errors at 1:1.
fn structural_to_parse(e: &StructuralError) -> ParseError {
    let message = match e {
        StructuralError::OrderCycle(a, b) => {
            format!("cover relation has a cycle through `{a}` and `{b}`")
        }
        other => other.to_string(),
    };
    ParseError::new(1, 1, message)
}

/// Canonical document for a lattice; `parse_lattice` returns a
/// label-isomorphic structure.
pub fn render_lattice(l: &OrthoLattice) -> String {
    let mut out = String::from("omlkit-lattice v1\n");
    out.push_str("elements:");
    for x in l.elements() {
        out.push(' ');
        out.push_str(l.label(x));
    }
    out.push_str("\ncovers:\n");
    for (lo, hi) in l.covers() {
        out.push_str(&format!("{} {}\n", l.label(lo), l.label(hi)));
    }
    out.push_str("ortho:\n");
    let mut done = vec![false; l.element_count()];
    for x in l.elements() {
        if done[x.0] {
            continue;
        }
        let o = l.ortho(x);
        done[x.0] = true;
        done[o.0] = true;
        out.push_str(&format!("{} {}\n", l.label(x), l.label(o)));
    }
    out
}
