//! Subalgebras: element-id sets closed under meet, join and ortho.

use super::{ElementId, OrthoLattice};

/// A subalgebra of an [`OrthoLattice`]: contains bottom and top and is
/// closed under the parent's meet, join and orthocomplement. Members are
/// kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    members: Vec<ElementId>,
}

impl Subalgebra {
    /// Smallest subalgebra containing `generators`: adds bottom and top,
    /// then closes under ortho, meet and join by fixpoint iteration with
    /// ascending insertion order.
    pub fn closure(lattice: &OrthoLattice, generators: &[ElementId]) -> Subalgebra {
        let n = lattice.element_count();
        let mut member = vec![false; n];
        member[lattice.bottom().0] = true;
        member[lattice.top().0] = true;
        for &g in generators {
            member[g.0] = true;
        }
        loop {
            let mut grew = false;
            let current: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
            for &a in &current {
                let o = lattice.ortho(ElementId(a)).0;
                if !member[o] {
                    member[o] = true;
                    grew = true;
                }
                for &b in &current {
                    let m = lattice.meet(ElementId(a), ElementId(b)).0;
                    if !member[m] {
                        member[m] = true;
                        grew = true;
                    }
                    let j = lattice.join(ElementId(a), ElementId(b)).0;
                    if !member[j] {
                        member[j] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Subalgebra {
            members: (0..n).filter(|&i| member[i]).map(ElementId).collect(),
        }
    }

    /// Wraps an already-closed member set; verifies closure.
    pub fn from_members(
        lattice: &OrthoLattice,
        mut members: Vec<ElementId>,
    ) -> Result<Subalgebra, ClosureViolation> {
        members.sort_unstable();
        members.dedup();
        let sub = Subalgebra { members };
        sub.verify_closed(lattice)?;
        Ok(sub)
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn verify_closed(&self, lattice: &OrthoLattice) -> Result<(), ClosureViolation> {
        if !self.contains(lattice.bottom()) || !self.contains(lattice.top()) {
            return Err(ClosureViolation::MissingBounds);
        }
        for &a in &self.members {
            if !self.contains(lattice.ortho(a)) {
                return Err(ClosureViolation::Ortho(a));
            }
            for &b in &self.members {
                if !self.contains(lattice.meet(a, b)) {
                    return Err(ClosureViolation::Meet(a, b));
                }
                if !self.contains(lattice.join(a, b)) {
                    return Err(ClosureViolation::Join(a, b));
                }
            }
        }
        Ok(())
    }

    /// True iff the distributive law `x∧(y∨z) = (x∧y)∨(x∧z)` holds for all
    /// member triples; Boolean subalgebras of an orthomodular lattice are
    /// exactly the distributive ones.
    pub fn is_boolean(&self, lattice: &OrthoLattice) -> bool {
        self.distributivity_witness(lattice).is_none()
    }

    /// First member triple (ascending) violating distributivity, if any.
    pub fn distributivity_witness(
        &self,
        lattice: &OrthoLattice,
    ) -> Option<(ElementId, ElementId, ElementId)> {
        for &x in &self.members {
            for &y in &self.members {
                for &z in &self.members {
                    let lhs = lattice.meet(x, lattice.join(y, z));
                    let rhs = lattice.join(lattice.meet(x, y), lattice.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Minimal nonzero members (atoms of the subalgebra, not of the parent).
    pub fn atoms(&self, lattice: &OrthoLattice) -> Vec<ElementId> {
        self.members
            .iter()
            .copied()
            .filter(|&x| {
                x != lattice.bottom()
                    && !self
                        .members
                        .iter()
                        .any(|&y| y != lattice.bottom() && y != x && lattice.leq(y, x))
            })
            .collect()
    }
}

/// Why a member set is not a subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosureViolation {
    #[error("member set is missing bottom or top")]
    MissingBounds,
    #[error("member set not closed under ortho at {0}")]
    Ortho(ElementId),
    #[error("member set not closed under meet at ({0}, {1})")]
    Meet(ElementId, ElementId),
    #[error("member set not closed under join at ({0}, {1})")]
    Join(ElementId, ElementId),
}
