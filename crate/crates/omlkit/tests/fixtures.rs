//! Checks against the shipped fixture files: they parse, match their
//! in-catalog counterparts, and the contextuality instances behave as
//! documented.

use omlkit::io::{parse_greechie, parse_lattice, parse_rays};
use omlkit::lattice::{benzene_o6, boolean_power, mo};
use omlkit::{
    enumerate_blocks, find_global_valuation, find_global_valuation_on_family, from_rays, mks_check,
    parity_certificate, paste_to_lattice, NotPastable,
};
use std::fs;
use std::path::PathBuf;

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path:?}: {e}"))
}

#[test]
fn lattice_fixtures_match_catalog() {
    let pairs: Vec<(&str, omlkit::OrthoLattice)> = vec![
        ("mo2.lat", mo(2).unwrap()),
        ("mo3.lat", mo(3).unwrap()),
        ("o6.lat", benzene_o6().unwrap()),
        ("b2.lat", boolean_power(2).unwrap()),
        ("b3.lat", boolean_power(3).unwrap()),
        ("b4.lat", boolean_power(4).unwrap()),
        (
            "2xmo2.lat",
            boolean_power(1).unwrap().product(&mo(2).unwrap()).unwrap(),
        ),
        (
            "mo2xmo2.lat",
            mo(2).unwrap().product(&mo(2).unwrap()).unwrap(),
        ),
    ];
    for (name, expected) in pairs {
        let parsed = parse_lattice(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(parsed.label_isomorphic(&expected), "{name} diverged");
    }
}

#[test]
fn rays2d_family_has_four_assignments() {
    let rays = parse_rays(&fixture("rays2d.rays")).unwrap();
    let family = from_rays(&rays);
    assert_eq!(family.contexts().len(), 2);
    assert_eq!(omlkit::enumerate_family_assignments(&family).len(), 4);
    assert!(find_global_valuation_on_family(&family).is_sat());
}

#[test]
fn rays3d_family_shape() {
    let rays = parse_rays(&fixture("rays3d.rays")).unwrap();
    let family = from_rays(&rays);
    assert_eq!(family.contexts().len(), 2);
    assert!(family.orphan_atoms().is_empty());
}

#[test]
fn parity18_is_unsat_with_certificate_but_not_pastable() {
    let family = parse_greechie(&fixture("parity18.greechie")).unwrap();
    assert_eq!(family.atom_count(), 18);
    assert_eq!(family.contexts().len(), 9);
    for ctx in family.contexts() {
        assert_eq!(ctx.len(), 4);
    }
    assert!(family.membership_counts().iter().all(|&c| c == 2));
    let cert = parity_certificate(&family).expect("parity certificate applies");
    assert_eq!(cert.context_count, 9);
    assert!(!find_global_valuation_on_family(&family).is_sat());
    assert!(matches!(
        paste_to_lattice(&family),
        Err(NotPastable::SmallLoop { .. })
    ));
}

#[test]
fn parity13_pastes_to_an_uncolorable_lattice() {
    let family = parse_greechie(&fixture("parity13.greechie")).unwrap();
    assert_eq!(family.atom_count(), 20);
    assert_eq!(family.contexts().len(), 13);
    assert!(family.membership_counts().iter().all(|&c| c == 2));
    assert!(parity_certificate(&family).is_some());
    assert!(!find_global_valuation_on_family(&family).is_sat());

    let lattice = paste_to_lattice(&family).expect("girth-5 diagram is pastable");
    assert_eq!(lattice.element_count(), 48);
    assert!(lattice.verify_axioms().all_pass());

    // Blocks recover the thirteen contexts as atom-label sets.
    let blocks = enumerate_blocks(&lattice);
    assert_eq!(blocks.len(), 13);
    let block_atom_sets: Vec<Vec<String>> = blocks
        .iter()
        .map(|b| {
            let mut v: Vec<String> = b
                .atoms()
                .iter()
                .map(|&a| lattice.label(a).to_string())
                .collect();
            v.sort();
            v
        })
        .collect();
    for ctx in family.contexts() {
        let mut want: Vec<String> = ctx
            .iter()
            .map(|&a| family.atom_labels()[a].clone())
            .collect();
        want.sort();
        assert!(block_atom_sets.contains(&want), "missing block {want:?}");
    }

    // Cross-representation agreement and the both-sides-false instance.
    assert!(!find_global_valuation(&lattice).is_sat());
    let verdict = mks_check(&lattice);
    assert!(!verdict.has_global);
    assert!(!verdict.exists_actualizable_f);
    assert!(verdict.biconditional_holds);
}

#[test]
fn cabello18_reproduces_the_nine_contexts() {
    let rays = parse_rays(&fixture("cabello18.rays")).unwrap();
    assert_eq!(rays.dim(), 4);
    assert_eq!(rays.len(), 18);
    let family = from_rays(&rays);
    assert_eq!(family.contexts().len(), 9);
    for ctx in family.contexts() {
        assert_eq!(ctx.len(), 4);
    }
    assert!(family.membership_counts().iter().all(|&c| c == 2));
    assert!(family.orphan_atoms().is_empty());
    assert!(parity_certificate(&family).is_some());
    assert!(!find_global_valuation_on_family(&family).is_sat());
}

#[test]
fn malformed_fixtures_fail_with_positions() {
    let err = parse_lattice(&fixture("bad/cycle.lat")).unwrap_err();
    assert!(err.message.contains("cycle"));
    let err = parse_lattice(&fixture("bad/dangling_ortho.lat")).unwrap_err();
    assert!(err.message.contains("ortho"));
    let err = parse_rays(&fixture("bad/arity.rays")).unwrap_err();
    assert_eq!(err.line, 4);
    let err = parse_greechie(&fixture("bad/dup_atom.greechie")).unwrap_err();
    assert_eq!(err.line, 4);
}
