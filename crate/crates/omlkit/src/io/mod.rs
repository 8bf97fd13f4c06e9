//! Text formats and exports.
//!
//! Three line-oriented documents, each with a fixed header:
//!
//! * `omlkit-lattice v1` — element labels, Hasse cover pairs, ortho pairs.
//! * `omlkit-greechie v1` — atom labels and context lines.
//! * `omlkit-rays v1` — a dimension and one rational vector per line.
//!
//! `#` starts a comment anywhere; blank lines are ignored. Parse errors
//! carry 1-based line/column positions. Renderers emit canonical documents
//! that re-parse to label-isomorphic structures.

mod dot;
mod greechie_doc;
mod lattice_doc;
mod ray_doc;

pub use dot::{family_to_dot, lattice_to_dot};
pub use greechie_doc::{parse_greechie, render_greechie};
pub use lattice_doc::{parse_lattice, render_lattice};
pub use ray_doc::{parse_rays, render_rays};

use thiserror::Error;

/// Positioned parse failure; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// A token with its position, produced by the shared line scanner.
#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

/// Splits a document into whitespace-separated tokens with positions,
/// dropping `#` comments.
pub(crate) fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut column = 1usize;
        for piece in line.split_inclusive(char::is_whitespace) {
            let trimmed = piece.trim_end_matches(char::is_whitespace);
            if !trimmed.is_empty() {
                tokens.push(Token {
                    text: trimmed.to_string(),
                    line: li + 1,
                    column,
                });
            }
            column += piece.chars().count();
        }
    }
    tokens
}

/// Checks the fixed header (e.g. `omlkit-lattice v1`) and returns the
/// remaining tokens.
pub(crate) fn expect_header<'t>(
    tokens: &'t [Token],
    name: &str,
) -> Result<&'t [Token], ParseError> {
    let want = [name, "v1"];
    for (i, part) in want.iter().enumerate() {
        match tokens.get(i) {
            Some(t) if t.text == *part => {}
            Some(t) => {
                return Err(ParseError::new(
                    t.line,
                    t.column,
                    format!("expected header token `{part}`, found `{}`", t.text),
                ))
            }
            None => return Err(ParseError::new(1, 1, format!("missing header `{name} v1`"))),
        }
    }
    Ok(&tokens[2..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::from_rays;
    use crate::lattice::{mo, test_catalog};

    const MO2_DOC: &str = "\
omlkit-lattice v1
elements: 0 a1 a2 ¬a1 ¬a2 1
covers:
0 a1
0 a2
0 ¬a1
0 ¬a2
a1 1
a2 1
¬a1 1
¬a2 1
ortho:
0 1
a1 ¬a1
a2 ¬a2
";

    #[test]
    fn parse_mo2_document() {
        let l = parse_lattice(MO2_DOC).unwrap();
        assert_eq!(l.element_count(), 6);
        assert!(l.label_isomorphic(&mo(2).unwrap()));
    }

    #[test]
    fn lattice_round_trip_on_catalog() {
        for (name, l) in test_catalog() {
            let doc = render_lattice(&l);
            let back = parse_lattice(&doc).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(back.label_isomorphic(&l), "{name} round trip changed order");
            // Rendering the reparse is byte-identical (canonical form).
            assert_eq!(render_lattice(&back), doc, "{name}");
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let doc = "\
omlkit-lattice v1   # header comment

elements: 0 1       # the 2-chain
covers:
0 1
# a full-line comment
ortho:
0 1
";
        let l = parse_lattice(doc).unwrap();
        assert_eq!(l.element_count(), 2);
        assert!(l.verify_axioms().all_pass());
    }

    #[test]
    fn cover_cycle_is_reported() {
        let doc = "\
omlkit-lattice v1
elements: 0 a b 1
covers:
0 a
a b
b a
a 1
ortho:
0 1
a b
";
        let err = parse_lattice(doc).unwrap_err();
        assert!(err.message.contains("cycle"), "{err}");
    }

    #[test]
    fn dangling_ortho_is_reported() {
        let doc = "\
omlkit-lattice v1
elements: 0 a ¬a 1
covers:
0 a
0 ¬a
a 1
¬a 1
ortho:
0 1
";
        let err = parse_lattice(doc).unwrap_err();
        assert!(err.message.contains("no ortho assignment"), "{err}");
    }

    #[test]
    fn unknown_label_has_position() {
        let doc = "omlkit-lattice v1\nelements: 0 1\ncovers:\n0 zz\northo:\n0 1\n";
        let err = parse_lattice(doc).unwrap_err();
        assert_eq!((err.line, err.column), (4, 3));
        assert!(err.message.contains("zz"));
    }

    #[test]
    fn greechie_parse_and_round_trip() {
        let doc = "\
omlkit-greechie v1
atoms: a b c d e
contexts:
a b c
c d e
";
        let f = parse_greechie(doc).unwrap();
        assert_eq!(f.atom_count(), 5);
        assert_eq!(f.contexts().len(), 2);
        let rendered = render_greechie(&f);
        let back = parse_greechie(&rendered).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn greechie_duplicate_atom_in_context() {
        let doc = "omlkit-greechie v1\natoms: a b\ncontexts:\na a\n";
        let err = parse_greechie(doc).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("repeated"));
    }

    #[test]
    fn rays_parse_and_round_trip() {
        let doc = "\
omlkit-rays v1
dim: 2
1 0
0 1
1 1
1 -1
";
        let r = parse_rays(doc).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.labels()[0], "r1");
        let rendered = render_rays(&r);
        let back = parse_rays(&rendered).unwrap();
        assert_eq!(back.rays(), r.rays());

        let labeled = "omlkit-rays v1\ndim: 2\ne1: 1 0\ne2: 0 1\n";
        let r = parse_rays(labeled).unwrap();
        assert_eq!(r.labels(), &["e1", "e2"]);
    }

    #[test]
    fn rays_arity_error_has_position() {
        let doc = "omlkit-rays v1\ndim: 2\n1 0\n0 1 1\n";
        let err = parse_rays(doc).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("3 entries"));
    }

    #[test]
    fn rays_accept_rationals() {
        let doc = "omlkit-rays v1\ndim: 2\n2/3 -1/2\n1 4/3\n";
        let r = parse_rays(doc).unwrap();
        assert_eq!(r.rays()[0][0].to_string(), "2/3");
        let err = parse_rays("omlkit-rays v1\ndim: 2\n1/0 1\n0 1\n").unwrap_err();
        assert!(err.message.contains("not an integer or rational"));
    }

    #[test]
    fn header_mismatch_is_positioned() {
        let err = parse_lattice("omlkit-rays v1\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err2 = parse_rays("").unwrap_err();
        assert!(err2.message.contains("missing header"));
    }

    #[test]
    fn dot_export_counts() {
        let l = mo(2).unwrap();
        let dot = lattice_to_dot(&l);
        assert_eq!(dot.matches(" -- ").count(), 8);
        for x in l.elements() {
            assert!(dot.contains(&format!("\"{}\"", l.label(x))));
        }

        let r = crate::family::RaySet::new(
            2,
            vec![
                vec![
                    num_rational::BigRational::from(num_bigint::BigInt::from(1)),
                    num_rational::BigRational::from(num_bigint::BigInt::from(0)),
                ],
                vec![
                    num_rational::BigRational::from(num_bigint::BigInt::from(0)),
                    num_rational::BigRational::from(num_bigint::BigInt::from(1)),
                ],
            ],
            vec!["e1".to_string(), "e2".to_string()],
        )
        .unwrap();
        let f = from_rays(&r);
        let gdot = family_to_dot(&f);
        assert!(gdot.contains("\"e1\" -- \"e2\""));
        assert!(gdot.contains("label=\"C1\""));
    }
}
