//! Finite bounded lattices with an order-reversing involution.
//!
//! Elements are dense integer ids. After construction the bottom element
//! always has id 0 and the top element id `n - 1`; the order, meet, join
//! and orthocomplement are stored as full tables computed once. All types
//! are immutable after construction and safe to share across threads.

mod axioms;
mod catalog;
mod subalgebra;

pub use axioms::{AxiomReport, Law, LawCheck};
pub use catalog::{
    benzene_o6, boolean_power, catalog, catalog_by_name, mo, test_catalog, test_products,
    CatalogError,
};
pub use subalgebra::{ClosureViolation, Subalgebra};

use std::fmt;
use thiserror::Error;

/// Dense element identifier within one [`OrthoLattice`].
///
/// Id 0 is the bottom element and id `n - 1` the top, by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Malformed table data, distinct from an axiom failure: the structure
/// cannot even be interrogated coherently.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StructuralError {
    #[error("lattice must have at least one element")]
    Empty,
    #[error("table `{table}` has {got} entries, expected {expected}")]
    RaggedTable {
        table: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("table `{table}` entry {index} is {got}, out of range for {n} elements")]
    IdOutOfRange {
        table: &'static str,
        index: usize,
        got: usize,
        n: usize,
    },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid element label `{0}` (labels are nonempty and contain no whitespace or '#')")]
    InvalidLabel(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` are mutually comparable")]
    OrderCycle(String, String),
    #[error("order has no unique least element")]
    NoBottom,
    #[error("order has no unique greatest element")]
    NoTop,
    #[error("elements `{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("elements `{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
}

/// Finite bounded lattice with involution, stored as full order/meet/join
/// tables plus an orthocomplement map.
///
/// Construction validates shape (and, for [`OrthoLattice::from_order`],
/// lattice-theoretic coherence); it does not certify the orthomodular
/// axioms. That is an explicit step: [`OrthoLattice::verify_axioms`].
#[derive(Debug, Clone)]
pub struct OrthoLattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<u32>,
    join: Vec<u32>,
    ortho: Vec<u32>,
    labels: Vec<String>,
}

fn validate_labels(n: usize, labels: &[String]) -> Result<(), StructuralError> {
    if labels.len() != n {
        return Err(StructuralError::LabelCount {
            expected: n,
            got: labels.len(),
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(StructuralError::InvalidLabel(l.clone()));
        }
        if !seen.insert(l.as_str()) {
            return Err(StructuralError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn validate_id_table(
    table: &'static str,
    data: &[u32],
    expected: usize,
    n: usize,
) -> Result<(), StructuralError> {
    if data.len() != expected {
        return Err(StructuralError::RaggedTable {
            table,
            got: data.len(),
            expected,
        });
    }
    for (index, &got) in data.iter().enumerate() {
        if got as usize >= n {
            return Err(StructuralError::IdOutOfRange {
                table,
                index,
                got: got as usize,
                n,
            });
        }
    }
    Ok(())
}

impl OrthoLattice {
    /// Builds a lattice from an order relation and an orthocomplement map.
    ///
    /// `leq` is row-major (`leq[a * n + b]` means `a ≤ b`). The order must
    /// be reflexive, antisymmetric and transitive, bounded, and every pair
    /// must have a greatest lower and least upper bound; violations are
    /// structural errors carrying the offending labels. Elements are
    /// renumbered so the bottom gets id 0 and the top id `n - 1`; the
    /// relative order of the rest is preserved.
    pub fn from_order(
        leq: Vec<bool>,
        ortho: Vec<u32>,
        labels: Vec<String>,
    ) -> Result<Self, StructuralError> {
        let n = labels.len();
        if n == 0 {
            return Err(StructuralError::Empty);
        }
        validate_labels(n, &labels)?;
        if leq.len() != n * n {
            return Err(StructuralError::RaggedTable {
                table: "leq",
                got: leq.len(),
                expected: n * n,
            });
        }
        validate_id_table("ortho", &ortho, n, n)?;

        let le = |a: usize, b: usize| leq[a * n + b];
        // Reflexive + antisymmetric up front; glb/lub construction needs them.
        for a in 0..n {
            if !le(a, a) {
                return Err(StructuralError::OrderCycle(
                    labels[a].clone(),
                    labels[a].clone(),
                ));
            }
            for b in (a + 1)..n {
                if le(a, b) && le(b, a) {
                    return Err(StructuralError::OrderCycle(
                        labels[a].clone(),
                        labels[b].clone(),
                    ));
                }
            }
        }
        // Transitive closure; callers may pass a cover-generated preorder.
        let mut closed = leq;
        for k in 0..n {
            for a in 0..n {
                if closed[a * n + k] {
                    for b in 0..n {
                        if closed[k * n + b] {
                            closed[a * n + b] = true;
                        }
                    }
                }
            }
        }
        let le = |a: usize, b: usize| closed[a * n + b];

        let bottom = {
            let mut found = None;
            for c in 0..n {
                if (0..n).all(|x| le(c, x)) {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or(StructuralError::NoBottom)?
        };
        let top = {
            let mut found = None;
            for c in 0..n {
                if (0..n).all(|x| le(x, c)) {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or(StructuralError::NoTop)?
        };
        if bottom == top && n > 1 {
            return Err(StructuralError::NoTop);
        }

        // Renumber: bottom -> 0, top -> n-1, middle elements keep their order.
        let mut new_id = vec![0usize; n];
        let mut next = if n == 1 { 0 } else { 1 };
        for old in 0..n {
            if old == bottom {
                new_id[old] = 0;
            } else if old == top {
                new_id[old] = n - 1;
            } else {
                new_id[old] = next;
                next += 1;
            }
        }
        let mut perm_leq = vec![false; n * n];
        let mut perm_ortho = vec![0u32; n];
        let mut perm_labels = vec![String::new(); n];
        for a in 0..n {
            perm_labels[new_id[a]] = labels[a].clone();
            perm_ortho[new_id[a]] = new_id[ortho[a] as usize] as u32;
            for b in 0..n {
                perm_leq[new_id[a] * n + new_id[b]] = le(a, b);
            }
        }

        let le = |a: usize, b: usize| perm_leq[a * n + b];
        // below_count orders comparable elements strictly, so the unique
        // glb (when it exists) is the common lower bound of maximal count.
        let mut below_count = vec![0usize; n];
        for z in 0..n {
            below_count[z] = (0..n).filter(|&w| le(w, z)).count();
        }
        let mut above_count = vec![0usize; n];
        for z in 0..n {
            above_count[z] = (0..n).filter(|&w| le(z, w)).count();
        }

        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        let mut commons = Vec::with_capacity(n);
        for a in 0..n {
            for b in a..n {
                commons.clear();
                commons.extend((0..n).filter(|&z| le(z, a) && le(z, b)));
                let glb = commons
                    .iter()
                    .copied()
                    .max_by_key(|&z| below_count[z])
                    .expect("bottom is always a common lower bound");
                if !commons.iter().all(|&w| le(w, glb)) {
                    return Err(StructuralError::NoMeet(
                        perm_labels[a].clone(),
                        perm_labels[b].clone(),
                    ));
                }
                meet[a * n + b] = glb as u32;
                meet[b * n + a] = glb as u32;

                commons.clear();
                commons.extend((0..n).filter(|&z| le(a, z) && le(b, z)));
                let lub = commons
                    .iter()
                    .copied()
                    .max_by_key(|&z| above_count[z])
                    .expect("top is always a common upper bound");
                if !commons.iter().all(|&w| le(lub, w)) {
                    return Err(StructuralError::NoJoin(
                        perm_labels[a].clone(),
                        perm_labels[b].clone(),
                    ));
                }
                join[a * n + b] = lub as u32;
                join[b * n + a] = lub as u32;
            }
        }

        Ok(OrthoLattice {
            n,
            leq: perm_leq,
            meet,
            join,
            ortho: perm_ortho,
            labels: perm_labels,
        })
    }

    /// Builds a lattice directly from raw tables, checking shape only.
    ///
    /// No order coherence is verified here; this is the entry point for
    /// feeding deliberately broken tables to [`OrthoLattice::verify_axioms`].
    pub fn from_tables(
        leq: Vec<bool>,
        meet: Vec<u32>,
        join: Vec<u32>,
        ortho: Vec<u32>,
        labels: Vec<String>,
    ) -> Result<Self, StructuralError> {
        let n = labels.len();
        if n == 0 {
            return Err(StructuralError::Empty);
        }
        validate_labels(n, &labels)?;
        if leq.len() != n * n {
            return Err(StructuralError::RaggedTable {
                table: "leq",
                got: leq.len(),
                expected: n * n,
            });
        }
        validate_id_table("meet", &meet, n * n, n)?;
        validate_id_table("join", &join, n * n, n)?;
        validate_id_table("ortho", &ortho, n, n)?;
        Ok(OrthoLattice {
            n,
            leq,
            meet,
            join,
            ortho,
            labels,
        })
    }

    pub fn element_count(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n).map(ElementId)
    }

    pub fn bottom(&self) -> ElementId {
        ElementId(0)
    }

    pub fn top(&self) -> ElementId {
        ElementId(self.n - 1)
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a.0 * self.n + b.0]
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.meet[a.0 * self.n + b.0] as usize)
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.join[a.0 * self.n + b.0] as usize)
    }

    #[inline]
    pub fn ortho(&self, a: ElementId) -> ElementId {
        ElementId(self.ortho[a.0] as usize)
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId)
    }

    /// True iff `c` is a complement of `a`: `a ∧ c = 0` and `a ∨ c = 1`.
    pub fn is_complement(&self, a: ElementId, c: ElementId) -> bool {
        self.meet(a, c) == self.bottom() && self.join(a, c) == self.top()
    }

    /// Minimal nonzero elements.
    pub fn atoms(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.is_atom_within(x, |_| true))
            .collect()
    }

    pub(crate) fn is_atom_within<F: Fn(ElementId) -> bool>(&self, x: ElementId, member: F) -> bool {
        x != self.bottom()
            && self
                .elements()
                .all(|y| !(member(y) && y != self.bottom() && y != x && self.leq(y, x)))
    }

    /// Covering pairs `(lower, upper)` of the order, ascending by ids.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b && self.leq(a, b) {
                    let between = self
                        .elements()
                        .any(|z| z != a && z != b && self.leq(a, z) && self.leq(z, b));
                    if !between {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    /// True iff the label map is an isomorphism between the two lattices:
    /// same label set, and order/ortho transported along it.
    pub fn label_isomorphic(&self, other: &OrthoLattice) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        for a in self.elements() {
            match other.element_by_label(self.label(a)) {
                Some(b) => map[a.0] = b.0,
                None => return false,
            }
        }
        for a in self.elements() {
            if map[self.ortho(a).0] != other.ortho(ElementId(map[a.0])).0 {
                return false;
            }
            for b in self.elements() {
                if self.leq(a, b) != other.leq(ElementId(map[a.0]), ElementId(map[b.0])) {
                    return false;
                }
            }
        }
        true
    }

    /// Componentwise product of two lattices.
    ///
    /// Both factors must pass [`OrthoLattice::verify_axioms`]; the result
    /// then does too (order, meet, join and ortho all act per coordinate).
    /// Element `(i, j)` gets id `i * other.n + j` and label `"(l1,l2)"`.
    pub fn product(&self, other: &OrthoLattice) -> Result<OrthoLattice, AxiomReport> {
        for factor in [self, other] {
            let report = factor.verify_axioms();
            if !report.all_pass() {
                return Err(report);
            }
        }
        let n = self.n * other.n;
        let id = |a: usize, b: usize| a * other.n + b;
        let mut leq = vec![false; n * n];
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        let mut ortho = vec![0u32; n];
        let mut labels = vec![String::new(); n];
        for a1 in 0..self.n {
            for a2 in 0..other.n {
                let a = id(a1, a2);
                labels[a] = format!("({},{})", self.labels[a1], other.labels[a2]);
                ortho[a] = id(self.ortho[a1] as usize, other.ortho[a2] as usize) as u32;
                for b1 in 0..self.n {
                    for b2 in 0..other.n {
                        let b = id(b1, b2);
                        leq[a * n + b] = self.leq[a1 * self.n + b1] && other.leq[a2 * other.n + b2];
                        meet[a * n + b] = id(
                            self.meet[a1 * self.n + b1] as usize,
                            other.meet[a2 * other.n + b2] as usize,
                        ) as u32;
                        join[a * n + b] = id(
                            self.join[a1 * self.n + b1] as usize,
                            other.join[a2 * other.n + b2] as usize,
                        ) as u32;
                    }
                }
            }
        }
        Ok(OrthoLattice {
            n,
            leq,
            meet,
            join,
            ortho,
            labels,
        })
    }
}
