//! Commutation triples, the center, and the possibility operator.
//!
//! The center Z(L) collects the elements that distribute with every pair;
//! it is always a Boolean subalgebra. The possibility operator sends `p`
//! to the smallest central element above it, computed here as the meet of
//! all central upper bounds (Z(L) is meet-closed, so that meet is itself
//! a central upper bound and hence the minimum). Finite lattices are
//! complete, so the lattice carries its own modal structure and no
//! extension step is needed.

use crate::exec::Runner;
use crate::lattice::{ElementId, OrthoLattice, Subalgebra};
use thiserror::Error;

/// `(a,b,c)D`: `(a∨b)∧c = (a∧c)∨(b∧c)`.
pub fn d_triple(l: &OrthoLattice, a: ElementId, b: ElementId, c: ElementId) -> bool {
    l.meet(l.join(a, b), c) == l.join(l.meet(a, c), l.meet(b, c))
}

/// `(a,b,c)D*`: the dual identity `(a∧b)∨c = (a∨c)∧(b∨c)`.
pub fn d_star_triple(l: &OrthoLattice, a: ElementId, b: ElementId, c: ElementId) -> bool {
    l.join(l.meet(a, b), c) == l.meet(l.join(a, c), l.join(b, c))
}

/// `(a,b,c)T`: D and D* hold under all six permutations of `(a,b,c)`.
pub fn t_triple(l: &OrthoLattice, a: ElementId, b: ElementId, c: ElementId) -> bool {
    let perms = [
        (a, b, c),
        (a, c, b),
        (b, a, c),
        (b, c, a),
        (c, a, b),
        (c, b, a),
    ];
    perms
        .iter()
        .all(|&(x, y, z)| d_triple(l, x, y, z) && d_star_triple(l, x, y, z))
}

/// Compatibility of a pair: `a = (a∧b) ∨ (a∧¬b)`.
pub fn commutes(l: &OrthoLattice, a: ElementId, b: ElementId) -> bool {
    l.join(l.meet(a, b), l.meet(a, l.ortho(b))) == a
}

/// The center Z(L) as a member set plus subalgebra view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterInfo {
    members: Vec<ElementId>,
    subalgebra: Subalgebra,
}

impl CenterInfo {
    fn from_members(l: &OrthoLattice, members: Vec<ElementId>) -> CenterInfo {
        let subalgebra = Subalgebra::from_members(l, members.clone())
            .expect("the center is closed under meet, join and ortho");
        CenterInfo {
            members,
            subalgebra,
        }
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn as_subalgebra(&self) -> &Subalgebra {
        &self.subalgebra
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.subalgebra.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn central_by_t(l: &OrthoLattice, z: usize) -> bool {
    let z = ElementId(z);
    l.elements()
        .all(|a| l.elements().all(|b| t_triple(l, a, b, z)))
}

fn central_by_criterion(l: &OrthoLattice, z: usize) -> bool {
    let z = ElementId(z);
    let nz = l.ortho(z);
    l.elements()
        .all(|a| l.join(l.meet(a, z), l.meet(a, nz)) == a)
}

fn center_with<R: Runner>(l: &OrthoLattice, runner: &R) -> CenterInfo {
    let ids = runner.retain(l.element_count(), |z| central_by_t(l, z));
    CenterInfo::from_members(l, ids.into_iter().map(ElementId).collect())
}

fn center_fast_with<R: Runner>(l: &OrthoLattice, runner: &R) -> CenterInfo {
    let ids = runner.retain(l.element_count(), |z| central_by_criterion(l, z));
    CenterInfo::from_members(l, ids.into_iter().map(ElementId).collect())
}

/// Definition-based center: `z` is central iff `(a,b,z)T` for all pairs.
/// O(n³); retained as the standing oracle for [`center_fast`].
pub fn center(l: &OrthoLattice) -> CenterInfo {
    #[cfg(feature = "parallel")]
    {
        center_with(l, &crate::exec::Par)
    }
    #[cfg(not(feature = "parallel"))]
    {
        center_with(l, &crate::exec::Seq)
    }
}

pub fn center_sequential(l: &OrthoLattice) -> CenterInfo {
    center_with(l, &crate::exec::Seq)
}

#[cfg(feature = "parallel")]
pub fn center_parallel(l: &OrthoLattice) -> CenterInfo {
    center_with(l, &crate::exec::Par)
}

/// Criterion-based center: `z` is central iff `a = (a∧z)∨(a∧¬z)` for every
/// `a`. O(n²); the production path. Must agree with [`center`] everywhere.
pub fn center_fast(l: &OrthoLattice) -> CenterInfo {
    #[cfg(feature = "parallel")]
    {
        center_fast_with(l, &crate::exec::Par)
    }
    #[cfg(not(feature = "parallel"))]
    {
        center_fast_with(l, &crate::exec::Seq)
    }
}

pub fn center_fast_sequential(l: &OrthoLattice) -> CenterInfo {
    center_fast_with(l, &crate::exec::Seq)
}

#[cfg(feature = "parallel")]
pub fn center_fast_parallel(l: &OrthoLattice) -> CenterInfo {
    center_fast_with(l, &crate::exec::Par)
}

/// A lattice together with its center, the precomputed `◇` table, and the
/// possibility space `◇L` (the subalgebra generated by all `◇p`).
///
/// Immutable after construction; safe for concurrent reads.
#[derive(Debug, Clone)]
pub struct ModalFrame<'a> {
    lattice: &'a OrthoLattice,
    center: CenterInfo,
    diamond: Vec<u32>,
    possibility_space: Subalgebra,
}

impl<'a> ModalFrame<'a> {
    /// Builds the frame: center via the fast criterion, then the `◇` table
    /// as meets of central upper bounds, then the possibility space.
    pub fn new(lattice: &'a OrthoLattice) -> ModalFrame<'a> {
        let center = center_fast(lattice);
        let diamond: Vec<u32> = lattice
            .elements()
            .map(|p| {
                let mut acc = lattice.top();
                for &z in center.members() {
                    if lattice.leq(p, z) {
                        acc = lattice.meet(acc, z);
                    }
                }
                acc.0 as u32
            })
            .collect();
        let generators: Vec<ElementId> = diamond.iter().map(|&d| ElementId(d as usize)).collect();
        let possibility_space = Subalgebra::closure(lattice, &generators);
        ModalFrame {
            lattice,
            center,
            diamond,
            possibility_space,
        }
    }

    pub fn lattice(&self) -> &'a OrthoLattice {
        self.lattice
    }

    pub fn center(&self) -> &CenterInfo {
        &self.center
    }

    pub fn is_central(&self, p: ElementId) -> bool {
        self.center.contains(p)
    }

    /// `◇p`: the smallest central element above `p`. Fixes every central
    /// element; in particular `◇0 = 0` and `◇1 = 1`.
    pub fn diamond(&self, p: ElementId) -> ElementId {
        ElementId(self.diamond[p.0] as usize)
    }

    /// `¬◇¬p`, the dual vertex of the square. Central, and `≤ p`.
    pub fn necessity(&self, p: ElementId) -> ElementId {
        self.lattice.ortho(self.diamond(self.lattice.ortho(p)))
    }

    /// `◇L`: subalgebra generated by `{◇p : p ∈ L}`. Boolean and contained
    /// in the center (both properties are exercised by the test suites).
    pub fn possibility_space(&self) -> &Subalgebra {
        &self.possibility_space
    }

    /// Classically expanded context `W ∪ Z(L)`, closed to a subalgebra.
    ///
    /// The expansion supports classical valuations only if it is Boolean;
    /// a non-distributive closure is reported as a hard error with the
    /// witness triple rather than silently accepted.
    pub fn expanded_context(
        &self,
        base: &Subalgebra,
    ) -> Result<ExpandedContext, NonBooleanExpansion> {
        let mut generators: Vec<ElementId> = base.members().to_vec();
        generators.extend_from_slice(self.center.members());
        let carrier = Subalgebra::closure(self.lattice, &generators);
        if let Some((x, y, z)) = carrier.distributivity_witness(self.lattice) {
            return Err(NonBooleanExpansion { witness: (x, y, z) });
        }
        Ok(ExpandedContext {
            base: base.clone(),
            carrier,
        })
    }
}

/// A context together with its classical expansion.
#[derive(Debug, Clone)]
pub struct ExpandedContext {
    base: Subalgebra,
    carrier: Subalgebra,
}

impl ExpandedContext {
    pub fn base(&self) -> &Subalgebra {
        &self.base
    }

    pub fn carrier(&self) -> &Subalgebra {
        &self.carrier
    }
}

/// The closure of `W ∪ Z(L)` failed the distributive law; the witness
/// triple contradicts the use of Boolean valuations on the expansion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expanded context is not Boolean: distributivity fails at ({:?}, {:?}, {:?})", witness.0, witness.1, witness.2)]
pub struct NonBooleanExpansion {
    pub witness: (ElementId, ElementId, ElementId),
}
