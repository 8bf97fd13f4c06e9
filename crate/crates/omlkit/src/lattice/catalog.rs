//! Built-in lattices: Boolean powers, the MO_n family, and the benzene
//! ring O6 (the standard non-orthomodular fixture).

use super::{OrthoLattice, StructuralError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog lattice `{0}`")]
    UnknownName(String),
    #[error("parameter {got} out of range for `{name}` (expected {range})")]
    ParamOutOfRange {
        name: &'static str,
        got: usize,
        range: &'static str,
    },
    #[error("structural error building catalog lattice: {0}")]
    Structural(#[from] StructuralError),
    #[error("product factor failed the lattice axioms")]
    ProductFactor,
}

/// Boolean algebra 2^k for `1 ≤ k ≤ 5`.
///
/// Element ids are subset bitmasks over the k atoms; labels are the k-bit
/// strings with character i set to '1' when atom i is in the subset, so
/// bottom is `0…0` and top `1…1`.
pub fn boolean_power(k: usize) -> Result<OrthoLattice, CatalogError> {
    if !(1..=5).contains(&k) {
        return Err(CatalogError::ParamOutOfRange {
            name: "boolean_power",
            got: k,
            range: "1..=5",
        });
    }
    let n = 1usize << k;
    let label = |mask: usize| {
        (0..k)
            .map(|i| if mask & (1 << i) != 0 { '1' } else { '0' })
            .collect::<String>()
    };
    let mut leq = vec![false; n * n];
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    let mut ortho = vec![0u32; n];
    let mut labels = Vec::with_capacity(n);
    for a in 0..n {
        labels.push(label(a));
        ortho[a] = (!a & (n - 1)) as u32;
        for b in 0..n {
            leq[a * n + b] = a & b == a;
            meet[a * n + b] = (a & b) as u32;
            join[a * n + b] = (a | b) as u32;
        }
    }
    Ok(OrthoLattice::from_tables(leq, meet, join, ortho, labels)?)
}

/// MO_n: bottom, top, and 2n pairwise incomparable middle elements in
/// ortho-pairs `a_i ↔ ¬a_i`. Orthomodular for every n ≥ 1; MO_1 = 2².
pub fn mo(n_pairs: usize) -> Result<OrthoLattice, CatalogError> {
    if !(1..=500).contains(&n_pairs) {
        return Err(CatalogError::ParamOutOfRange {
            name: "mo",
            got: n_pairs,
            range: "1..=500",
        });
    }
    let n = 2 * n_pairs + 2;
    let mut labels = Vec::with_capacity(n);
    labels.push("0".to_string());
    for i in 1..=n_pairs {
        labels.push(format!("a{i}"));
    }
    for i in 1..=n_pairs {
        labels.push(format!("¬a{i}"));
    }
    labels.push("1".to_string());

    let bottom = 0usize;
    let top = n - 1;
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
        leq[bottom * n + a] = true;
        leq[a * n + top] = true;
    }
    let mut ortho = vec![0u32; n];
    ortho[bottom] = top as u32;
    ortho[top] = bottom as u32;
    for i in 0..n_pairs {
        ortho[1 + i] = (1 + n_pairs + i) as u32;
        ortho[1 + n_pairs + i] = (1 + i) as u32;
    }
    Ok(OrthoLattice::from_order(leq, ortho, labels)?)
}

/// The benzene ring O6: two chains `0 < a < b < 1` and `0 < ¬b < ¬a < 1`.
///
/// A bounded involution lattice that fails exactly the orthomodular law
/// (first counterexample `(a, b)`); kept in the catalog as the negative
/// fixture.
pub fn benzene_o6() -> Result<OrthoLattice, CatalogError> {
    let labels: Vec<String> = ["0", "a", "b", "¬b", "¬a", "1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let n = 6;
    let mut leq = vec![false; n * n];
    let set = |a: usize, b: usize, leq: &mut Vec<bool>| leq[a * n + b] = true;
    for a in 0..n {
        set(a, a, &mut leq);
        set(0, a, &mut leq);
        set(a, 5, &mut leq);
    }
    set(1, 2, &mut leq); // a < b
    set(3, 4, &mut leq); // ¬b < ¬a
    let ortho = vec![5u32, 4, 3, 2, 1, 0];
    Ok(OrthoLattice::from_order(leq, ortho, labels)?)
}

/// Named catalog entry point: `boolean_power` (2^k), `mo` (MO_n) or
/// `benzene_o6` (parameter ignored).
pub fn catalog(name: &str, param: Option<usize>) -> Result<OrthoLattice, CatalogError> {
    match name {
        "boolean_power" => boolean_power(param.unwrap_or(2)),
        "mo" => mo(param.unwrap_or(2)),
        "benzene_o6" => benzene_o6(),
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

/// Parses compact catalog expressions: `mo<n>`, `2^<k>`, `o6`, and
/// products of those joined with `x` (e.g. `2^1xmo2`, `mo2xmo2`).
pub fn catalog_by_name(expr: &str) -> Result<OrthoLattice, CatalogError> {
    let mut factors = expr.split('x');
    let first = factors
        .next()
        .ok_or_else(|| CatalogError::UnknownName(expr.to_string()))?;
    let mut acc = catalog_factor(first)?;
    for f in factors {
        let rhs = catalog_factor(f)?;
        acc = acc.product(&rhs).map_err(|_| CatalogError::ProductFactor)?;
    }
    Ok(acc)
}

fn catalog_factor(token: &str) -> Result<OrthoLattice, CatalogError> {
    if token == "o6" {
        return benzene_o6();
    }
    if let Some(k) = token.strip_prefix("2^") {
        let k: usize = k
            .parse()
            .map_err(|_| CatalogError::UnknownName(token.to_string()))?;
        return boolean_power(k);
    }
    if let Some(np) = token.strip_prefix("mo") {
        let np: usize = np
            .parse()
            .map_err(|_| CatalogError::UnknownName(token.to_string()))?;
        return mo(np);
    }
    Err(CatalogError::UnknownName(token.to_string()))
}

/// The catalog entries exercised by the test suites: 2^1..2^5, MO_1..MO_4
/// and O6, with stable names.
pub fn test_catalog() -> Vec<(String, OrthoLattice)> {
    let mut out = Vec::new();
    for k in 1..=5 {
        out.push((format!("2^{k}"), boolean_power(k).unwrap()));
    }
    for np in 1..=4 {
        out.push((format!("mo{np}"), mo(np).unwrap()));
    }
    out.push(("o6".to_string(), benzene_o6().unwrap()));
    out
}

/// All unordered products of orthomodular test-catalog entries with at
/// most `max_size` elements, labeled `"<a>x<b>"`.
pub fn test_products(max_size: usize) -> Vec<(String, OrthoLattice)> {
    let base: Vec<(String, OrthoLattice)> = test_catalog()
        .into_iter()
        .filter(|(name, _)| name != "o6")
        .collect();
    let mut out = Vec::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            let (n1, l1) = &base[i];
            let (n2, l2) = &base[j];
            if l1.element_count() * l2.element_count() <= max_size {
                out.push((format!("{n1}x{n2}"), l1.product(l2).unwrap()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_power_sizes_and_labels() {
        let l = boolean_power(2).unwrap();
        assert_eq!(l.element_count(), 4);
        assert_eq!(l.labels(), &["00", "10", "01", "11"]);
        assert!(boolean_power(0).is_err());
        assert!(boolean_power(6).is_err());
    }

    #[test]
    fn mo_sizes() {
        assert_eq!(mo(1).unwrap().element_count(), 4);
        assert_eq!(mo(2).unwrap().element_count(), 6);
        assert_eq!(mo(3).unwrap().element_count(), 8);
        assert!(mo(0).is_err());
    }

    #[test]
    fn catalog_dispatch() {
        assert_eq!(
            catalog("boolean_power", Some(2)).unwrap().element_count(),
            4
        );
        assert_eq!(catalog("mo", Some(2)).unwrap().element_count(), 6);
        assert_eq!(catalog("benzene_o6", None).unwrap().element_count(), 6);
        assert!(matches!(
            catalog("nope", None),
            Err(CatalogError::UnknownName(_))
        ));
    }

    #[test]
    fn catalog_expressions() {
        assert_eq!(catalog_by_name("mo2").unwrap().element_count(), 6);
        assert_eq!(catalog_by_name("2^3").unwrap().element_count(), 8);
        assert_eq!(catalog_by_name("o6").unwrap().element_count(), 6);
        assert_eq!(catalog_by_name("2^1xmo2").unwrap().element_count(), 12);
        assert_eq!(catalog_by_name("mo2xmo2").unwrap().element_count(), 36);
        assert!(catalog_by_name("mo2xo6").is_err());
        assert!(catalog_by_name("zzz").is_err());
    }

    #[test]
    fn every_catalog_entry_except_o6_is_orthomodular() {
        for (name, l) in test_catalog() {
            let report = l.verify_axioms();
            if name == "o6" {
                assert!(!report.all_pass());
            } else {
                assert!(report.all_pass(), "{name} failed:\n{}", report.render(&l));
            }
        }
    }

    #[test]
    fn test_products_stay_under_the_cap() {
        let products = test_products(64);
        assert!(!products.is_empty());
        for (name, l) in &products {
            assert!(l.element_count() <= 64, "{name} too big");
        }
        assert!(products.iter().any(|(n, _)| n == "mo3xmo3"));
    }
}
