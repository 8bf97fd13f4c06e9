//! The `omlkit-rays v1` document: a dimension and one ray per line.
//!
//! ```text
//! omlkit-rays v1
//! dim: 3
//! e1: 1 0 0
//! e2: 0 1 0
//! f1: 0 1 1
//! ```
//!
//! Entries are integers or rationals (`2/3`, `-1/2`). The leading
//! `label:` is optional; unlabeled rays get `r1`, `r2`, … in order.

use super::{expect_header, ParseError};
use crate::family::RaySet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::str::FromStr;

pub fn parse_rays(text: &str) -> Result<RaySet, ParseError> {
    let tokens = super::tokenize(text);
    expect_header(&tokens, "omlkit-rays")?;

    let mut dim: Option<usize> = None;
    let mut rays: Vec<Vec<BigRational>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        if li == 0 {
            continue;
        }
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        let column = |word: &str| raw_line.find(word).map(|p| p + 1).unwrap_or(1);
        if words[0] == "dim:" {
            if words.len() != 2 {
                return Err(ParseError::new(li + 1, 1, "expected `dim: <integer>`"));
            }
            let d: usize = words[1].parse().map_err(|_| {
                ParseError::new(li + 1, column(words[1]), "dimension must be an integer")
            })?;
            dim = Some(d);
            continue;
        }
        let Some(d) = dim else {
            return Err(ParseError::new(
                li + 1,
                column(words[0]),
                "`dim:` must come before the first ray",
            ));
        };
        let (label, entries) = match words[0].strip_suffix(':') {
            Some(name) => (name.to_string(), &words[1..]),
            None => (format!("r{}", rays.len() + 1), &words[..]),
        };
        if entries.len() != d {
            let at = entries.first().copied().unwrap_or(words[0]);
            return Err(ParseError::new(
                li + 1,
                column(at),
                format!("ray has {} entries, expected {}", entries.len(), d),
            ));
        }
        let mut ray = Vec::with_capacity(d);
        for word in entries {
            ray.push(parse_rational(word).ok_or_else(|| {
                ParseError::new(
                    li + 1,
                    column(word),
                    format!("`{word}` is not an integer or rational"),
                )
            })?);
        }
        labels.push(label);
        rays.push(ray);
    }
    let Some(d) = dim else {
        return Err(ParseError::new(1, 1, "missing `dim:` line"));
    };
    RaySet::new(d, rays, labels).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

fn parse_rational(word: &str) -> Option<BigRational> {
    match word.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num).ok()?;
            let den = BigInt::from_str(den).ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => {
            let n = BigInt::from_str(word).ok()?;
            Some(BigRational::from(n))
        }
    }
}

/// Canonical document for a ray set.
pub fn render_rays(rays: &RaySet) -> String {
    let mut out = String::from("omlkit-rays v1\n");
    out.push_str(&format!("dim: {}\n", rays.dim()));
    for (label, ray) in rays.labels().iter().zip(rays.rays()) {
        out.push_str(&format!("{label}:"));
        for entry in ray {
            out.push(' ');
            if entry.is_integer() {
                out.push_str(&entry.numer().to_string());
            } else {
                out.push_str(&format!("{}/{}", entry.numer(), entry.denom()));
            }
        }
        out.push('\n');
    }
    out
}
