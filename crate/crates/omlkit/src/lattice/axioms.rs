//! Exhaustive verification of the orthomodular lattice axioms.
//!
//! Each law is scanned over all element tuples; the report records, per
//! law, either a pass or the first counterexample in lexicographic
//! `(x, y[, z])` id order, so output is deterministic and reproducible.

use super::{ElementId, OrthoLattice};
use crate::exec::Runner;
use serde::Serialize;
use std::fmt;

/// The individual laws checked by [`OrthoLattice::verify_axioms`].
///
/// `Bounds`..`Transitive` are the order laws, `MeetIsGlb`/`JoinIsLub` tie
/// the tables to the order, `Involution`..`DeMorgan` are the involution
/// laws, and the last two are the complement and orthomodular conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Law {
    Bounds,
    Reflexive,
    Antisymmetric,
    Transitive,
    MeetIsGlb,
    JoinIsLub,
    Involution,
    OrderReversing,
    DeMorgan,
    Complement,
    Orthomodular,
}

impl Law {
    pub const ALL: [Law; 11] = [
        Law::Bounds,
        Law::Reflexive,
        Law::Antisymmetric,
        Law::Transitive,
        Law::MeetIsGlb,
        Law::JoinIsLub,
        Law::Involution,
        Law::OrderReversing,
        Law::DeMorgan,
        Law::Complement,
        Law::Orthomodular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Bounds => "bounds",
            Law::Reflexive => "reflexive",
            Law::Antisymmetric => "antisymmetric",
            Law::Transitive => "transitive",
            Law::MeetIsGlb => "meet-is-glb",
            Law::JoinIsLub => "join-is-lub",
            Law::Involution => "involution",
            Law::OrderReversing => "order-reversing",
            Law::DeMorgan => "de-morgan",
            Law::Complement => "complement",
            Law::Orthomodular => "orthomodular",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome for one law: pass, or the first counterexample tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub counterexample: Option<Vec<ElementId>>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Per-law verdicts for one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    checks: Vec<LawCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn checks(&self) -> &[LawCheck] {
        &self.checks
    }

    pub fn check(&self, law: Law) -> &LawCheck {
        self.checks
            .iter()
            .find(|c| c.law == law)
            .expect("every law is checked")
    }

    pub fn failed_laws(&self) -> Vec<Law> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.law)
            .collect()
    }

    /// One line per law, with counterexamples rendered through `labels`.
    pub fn render(&self, lattice: &OrthoLattice) -> String {
        let mut out = String::new();
        for check in &self.checks {
            match &check.counterexample {
                None => out.push_str(&format!("law {:<15} pass\n", check.law.name())),
                Some(ids) => {
                    let labels: Vec<&str> = ids.iter().map(|&i| lattice.label(i)).collect();
                    out.push_str(&format!(
                        "law {:<15} FAIL at ({})\n",
                        check.law.name(),
                        labels.join(", ")
                    ));
                }
            }
        }
        out
    }
}

// Witnesses are (x, y, z) id triples padded with usize::MAX. Each per-x
// closure yields at most one witness, so the min-reduction is decided by
// the leading component and matches the sequential first-found order.
type Witness = (usize, usize, usize);

const NONE_ID: usize = usize::MAX;

fn trim(w: Witness) -> Vec<ElementId> {
    [w.0, w.1, w.2]
        .into_iter()
        .filter(|&i| i != NONE_ID)
        .map(ElementId)
        .collect()
}

impl OrthoLattice {
    /// Checks every law, parallel scan when the `parallel` feature is on.
    pub fn verify_axioms(&self) -> AxiomReport {
        #[cfg(feature = "parallel")]
        {
            self.verify_axioms_parallel()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.verify_axioms_sequential()
        }
    }

    pub fn verify_axioms_sequential(&self) -> AxiomReport {
        self.axioms_with(&crate::exec::Seq)
    }

    #[cfg(feature = "parallel")]
    pub fn verify_axioms_parallel(&self) -> AxiomReport {
        self.axioms_with(&crate::exec::Par)
    }

    fn axioms_with<R: Runner>(&self, runner: &R) -> AxiomReport {
        let checks = Law::ALL
            .iter()
            .map(|&law| LawCheck {
                law,
                counterexample: self.law_witness(law, runner).map(trim),
            })
            .collect();
        AxiomReport { checks }
    }

    fn law_witness<R: Runner>(&self, law: Law, runner: &R) -> Option<Witness> {
        let n = self.n;
        match law {
            Law::Bounds => runner.first(n, |x| {
                let x = ElementId(x);
                if !self.leq(self.bottom(), x) || !self.leq(x, self.top()) {
                    Some((x.0, NONE_ID, NONE_ID))
                } else {
                    None
                }
            }),
            Law::Reflexive => runner.first(n, |x| {
                let x = ElementId(x);
                (!self.leq(x, x)).then_some((x.0, NONE_ID, NONE_ID))
            }),
            Law::Antisymmetric => runner.first(n, |x| {
                let x = ElementId(x);
                (0..n).find_map(|y| {
                    let y = ElementId(y);
                    (x != y && self.leq(x, y) && self.leq(y, x)).then_some((x.0, y.0, NONE_ID))
                })
            }),
            Law::Transitive => runner.first(n, |x| {
                let x = ElementId(x);
                for y in 0..n {
                    let y = ElementId(y);
                    if !self.leq(x, y) {
                        continue;
                    }
                    for z in 0..n {
                        let z = ElementId(z);
                        if self.leq(y, z) && !self.leq(x, z) {
                            return Some((x.0, y.0, z.0));
                        }
                    }
                }
                None
            }),
            Law::MeetIsGlb => runner.first(n, |x| {
                let x = ElementId(x);
                for y in 0..n {
                    let y = ElementId(y);
                    let m = self.meet(x, y);
                    if !self.leq(m, x) || !self.leq(m, y) {
                        return Some((x.0, y.0, NONE_ID));
                    }
                    for z in 0..n {
                        let z = ElementId(z);
                        if self.leq(z, x) && self.leq(z, y) && !self.leq(z, m) {
                            return Some((x.0, y.0, z.0));
                        }
                    }
                }
                None
            }),
            Law::JoinIsLub => runner.first(n, |x| {
                let x = ElementId(x);
                for y in 0..n {
                    let y = ElementId(y);
                    let j = self.join(x, y);
                    if !self.leq(x, j) || !self.leq(y, j) {
                        return Some((x.0, y.0, NONE_ID));
                    }
                    for z in 0..n {
                        let z = ElementId(z);
                        if self.leq(x, z) && self.leq(y, z) && !self.leq(j, z) {
                            return Some((x.0, y.0, z.0));
                        }
                    }
                }
                None
            }),
            Law::Involution => runner.first(n, |x| {
                let x = ElementId(x);
                (self.ortho(self.ortho(x)) != x).then_some((x.0, NONE_ID, NONE_ID))
            }),
            Law::OrderReversing => runner.first(n, |x| {
                let x = ElementId(x);
                (0..n).find_map(|y| {
                    let y = ElementId(y);
                    (self.leq(x, y) && !self.leq(self.ortho(y), self.ortho(x)))
                        .then_some((x.0, y.0, NONE_ID))
                })
            }),
            Law::DeMorgan => runner.first(n, |x| {
                let x = ElementId(x);
                (0..n).find_map(|y| {
                    let y = ElementId(y);
                    (self.ortho(self.join(x, y)) != self.meet(self.ortho(x), self.ortho(y)))
                        .then_some((x.0, y.0, NONE_ID))
                })
            }),
            Law::Complement => runner.first(n, |x| {
                let x = ElementId(x);
                (self.meet(x, self.ortho(x)) != self.bottom()).then_some((x.0, NONE_ID, NONE_ID))
            }),
            Law::Orthomodular => runner.first(n, |x| {
                let x = ElementId(x);
                (0..n).find_map(|y| {
                    let y = ElementId(y);
                    let lhs = self.join(x, self.meet(self.ortho(x), self.join(x, y)));
                    (lhs != self.join(x, y)).then_some((x.0, y.0, NONE_ID))
                })
            }),
        }
    }
}
