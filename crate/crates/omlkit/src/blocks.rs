//! Boolean blocks, two-valued valuations, and the global-valuation and
//! compatible-actualization searches.
//!
//! A block is a maximal Boolean subalgebra; in an orthomodular lattice
//! these are exactly the maximal pairwise-compatible element sets, so
//! enumeration walks maximal cliques of the compatibility graph. Central
//! elements are compatible with everything and therefore sit in every
//! block. Searches are deterministic: blocks in canonical order, atoms
//! tried ascending, first witness returned.

use crate::lattice::{ElementId, OrthoLattice, Subalgebra};
use crate::modal::{commutes, ModalFrame};
use thiserror::Error;

/// A Boolean subalgebra with its atom list (minimal nonzero members).
///
/// Atoms are pairwise meet-zero and join to the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanBlock {
    carrier: Subalgebra,
    atoms: Vec<ElementId>,
}

impl BooleanBlock {
    pub fn new(l: &OrthoLattice, carrier: Subalgebra) -> Result<BooleanBlock, BlockError> {
        if let Some(w) = carrier.distributivity_witness(l) {
            return Err(BlockError::NotBoolean(w.0, w.1, w.2));
        }
        let atoms = carrier.atoms(l);
        for (i, &a) in atoms.iter().enumerate() {
            for &b in &atoms[i + 1..] {
                if l.meet(a, b) != l.bottom() {
                    return Err(BlockError::AtomsNotOrthogonal(a, b));
                }
            }
        }
        let join_all = atoms.iter().fold(l.bottom(), |acc, &a| l.join(acc, a));
        if join_all != l.top() {
            return Err(BlockError::AtomsDoNotCover);
        }
        Ok(BooleanBlock { carrier, atoms })
    }

    pub fn carrier(&self) -> &Subalgebra {
        &self.carrier
    }

    pub fn members(&self) -> &[ElementId] {
        self.carrier.members()
    }

    pub fn atoms(&self) -> &[ElementId] {
        &self.atoms
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.carrier.contains(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("carrier is not Boolean: distributivity fails at ({0}, {1}, {2})")]
    NotBoolean(ElementId, ElementId, ElementId),
    #[error("atoms {0} and {1} have nonzero meet")]
    AtomsNotOrthogonal(ElementId, ElementId),
    #[error("atoms do not join to the top")]
    AtomsDoNotCover,
}

/// All maximal Boolean subalgebras, sorted by their member-id sets.
///
/// Enumeration: maximal cliques of the pairwise-compatibility graph
/// (Bron–Kerbosch with pivoting). Each clique is closed under the lattice
/// operations and distributive, which `BooleanBlock::new` re-checks.
pub fn enumerate_blocks(l: &OrthoLattice) -> Vec<BooleanBlock> {
    let n = l.element_count();
    let mut adjacent = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let (ea, eb) = (ElementId(a), ElementId(b));
                adjacent[a * n + b] = commutes(l, ea, eb) && commutes(l, eb, ea);
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    bron_kerbosch(
        &adjacent,
        n,
        &mut Vec::new(),
        (0..n).collect(),
        Vec::new(),
        &mut cliques,
    );
    let mut blocks: Vec<BooleanBlock> = cliques
        .into_iter()
        .map(|mut ids| {
            ids.sort_unstable();
            let members: Vec<ElementId> = ids.into_iter().map(ElementId).collect();
            let carrier = Subalgebra::from_members(l, members)
                .expect("a maximal compatible set is closed under the lattice operations");
            BooleanBlock::new(l, carrier).expect("a maximal compatible set is a Boolean subalgebra")
        })
        .collect();
    blocks.sort_by(|a, b| a.members().cmp(b.members()));
    blocks
}

fn bron_kerbosch(
    adjacent: &[bool],
    n: usize,
    current: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        out.push(current.clone());
        return;
    }
    // Pivot on the candidate/excluded vertex with most candidate neighbors.
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&v| adjacent[u * n + v]).count())
        .unwrap();
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !adjacent[pivot * n + v])
        .collect();
    for v in branch {
        current.push(v);
        let next_candidates = candidates
            .iter()
            .copied()
            .filter(|&u| adjacent[v * n + u])
            .collect();
        let next_excluded = excluded
            .iter()
            .copied()
            .filter(|&u| adjacent[v * n + u])
            .collect();
        bron_kerbosch(adjacent, n, current, next_candidates, next_excluded, out);
        current.pop();
        candidates.retain(|&u| u != v);
        excluded.push(v);
    }
}

/// A Boolean homomorphism from a block onto {0, 1}, determined by the
/// single atom it sends to 1: `v(x) = 1` iff that atom lies below `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    members: Vec<ElementId>,
    true_atom: ElementId,
}

impl Valuation {
    pub fn new(block: &BooleanBlock, true_atom: ElementId) -> Valuation {
        debug_assert!(block.atoms().contains(&true_atom));
        Valuation {
            members: block.members().to_vec(),
            true_atom,
        }
    }

    pub fn true_atom(&self) -> ElementId {
        self.true_atom
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    /// Value at `x`; `None` when `x` is not in the block.
    pub fn value(&self, l: &OrthoLattice, x: ElementId) -> Option<bool> {
        self.members
            .binary_search(&x)
            .ok()
            .map(|_| l.leq(self.true_atom, x))
    }

    /// Re-checks the homomorphism laws over all member pairs: endpoints,
    /// meet, join, ortho, and the one-true-atom condition.
    pub fn verify_homomorphism(&self, l: &OrthoLattice) -> Result<(), HomomorphismViolation> {
        let v = |x: ElementId| l.leq(self.true_atom, x);
        if v(l.bottom()) {
            return Err(HomomorphismViolation::BottomNotFalse);
        }
        if !v(l.top()) {
            return Err(HomomorphismViolation::TopNotTrue);
        }
        for &x in &self.members {
            if v(x) != !v(l.ortho(x)) {
                return Err(HomomorphismViolation::Ortho(x));
            }
            for &y in &self.members {
                if v(l.meet(x, y)) != (v(x) && v(y)) {
                    return Err(HomomorphismViolation::Meet(x, y));
                }
                if v(l.join(x, y)) != (v(x) || v(y)) {
                    return Err(HomomorphismViolation::Join(x, y));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomomorphismViolation {
    #[error("v(0) must be 0")]
    BottomNotFalse,
    #[error("v(1) must be 1")]
    TopNotTrue,
    #[error("v(¬x) ≠ 1 - v(x) at {0}")]
    Ortho(ElementId),
    #[error("v(x∧y) ≠ v(x)·v(y) at ({0}, {1})")]
    Meet(ElementId, ElementId),
    #[error("v(x∨y) ≠ v(x)+v(y)-v(x)v(y) at ({0}, {1})")]
    Join(ElementId, ElementId),
}

/// One valuation per atom of the block, in ascending atom order; the
/// homomorphism laws are re-verified on each before returning.
pub fn enumerate_valuations(l: &OrthoLattice, block: &BooleanBlock) -> Vec<Valuation> {
    block
        .atoms()
        .iter()
        .map(|&atom| {
            let v = Valuation::new(block, atom);
            v.verify_homomorphism(l)
                .expect("atom-induced valuations are Boolean homomorphisms");
            v
        })
        .collect()
}

/// A family of valuations, one per block, agreeing on shared elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalValuation {
    per_block: Vec<Valuation>,
}

impl GlobalValuation {
    pub fn per_block(&self) -> &[Valuation] {
        &self.per_block
    }

    /// Checks the compatibility condition over every block pair.
    pub fn verify_compatible(&self, l: &OrthoLattice) -> bool {
        for (i, vi) in self.per_block.iter().enumerate() {
            for vj in &self.per_block[i + 1..] {
                for &x in vi.members() {
                    if let (Some(a), Some(b)) = (vi.value(l, x), vj.value(l, x)) {
                        if a != b {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Search statistics reported with an UNSAT outcome: the size of the
/// explored decision tree and the number of contradictions hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct UnsatStats {
    pub nodes_explored: u64,
    pub conflicts: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Sat(GlobalValuation),
    Unsat(UnsatStats),
}

impl SearchOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SearchOutcome::Sat(_))
    }
}

struct SearchState<'a> {
    l: &'a OrthoLattice,
    blocks: &'a [BooleanBlock],
    assigned: Vec<Option<bool>>,
    chosen: Vec<ElementId>,
    stats: UnsatStats,
}

impl<'a> SearchState<'a> {
    /// Applies the valuation induced by `atom` on block `i`; returns the
    /// trail of newly assigned element ids, or `None` on conflict.
    fn try_block(&mut self, i: usize, atom: ElementId) -> Option<Vec<usize>> {
        self.stats.nodes_explored += 1;
        let mut trail = Vec::new();
        for &x in self.blocks[i].members() {
            let val = self.l.leq(atom, x);
            match self.assigned[x.0] {
                Some(prev) if prev != val => {
                    for &t in &trail {
                        self.assigned[t] = None;
                    }
                    self.stats.conflicts += 1;
                    return None;
                }
                Some(_) => {}
                None => {
                    self.assigned[x.0] = Some(val);
                    trail.push(x.0);
                }
            }
        }
        Some(trail)
    }

    fn undo(&mut self, trail: &[usize]) {
        for &t in trail {
            self.assigned[t] = None;
        }
    }

    fn search(&mut self, i: usize) -> bool {
        if i == self.blocks.len() {
            return true;
        }
        let atoms: Vec<ElementId> = self.blocks[i].atoms().to_vec();
        for atom in atoms {
            if let Some(trail) = self.try_block(i, atom) {
                self.chosen.push(atom);
                if self.search(i + 1) {
                    return true;
                }
                self.chosen.pop();
                self.undo(&trail);
            }
        }
        false
    }
}

/// Backtracking search for a global valuation over the given blocks.
///
/// Blocks are processed in the given (canonical) order and atoms tried
/// ascending, so a SAT result is the canonically least witness.
pub fn find_global_valuation_over(l: &OrthoLattice, blocks: &[BooleanBlock]) -> SearchOutcome {
    find_with_preassignment(l, blocks, &[])
}

fn find_with_preassignment(
    l: &OrthoLattice,
    blocks: &[BooleanBlock],
    pinned: &[(ElementId, bool)],
) -> SearchOutcome {
    let mut state = SearchState {
        l,
        blocks,
        assigned: vec![None; l.element_count()],
        chosen: Vec::new(),
        stats: UnsatStats::default(),
    };
    for &(x, val) in pinned {
        match state.assigned[x.0] {
            Some(prev) if prev != val => return SearchOutcome::Unsat(state.stats),
            _ => state.assigned[x.0] = Some(val),
        }
    }
    if state.search(0) {
        let per_block = state
            .chosen
            .iter()
            .zip(blocks)
            .map(|(&atom, block)| Valuation::new(block, atom))
            .collect();
        SearchOutcome::Sat(GlobalValuation { per_block })
    } else {
        SearchOutcome::Unsat(state.stats)
    }
}

/// Enumerates the blocks of `l` and searches for a global valuation.
pub fn find_global_valuation(l: &OrthoLattice) -> SearchOutcome {
    let blocks = enumerate_blocks(l);
    find_global_valuation_over(l, &blocks)
}

/// Brute-force oracle: every consistent choice of one atom per block.
///
/// Exponential in the number of blocks; intended for small inputs where
/// it certifies the backtracking search.
pub fn enumerate_global_valuations(
    l: &OrthoLattice,
    blocks: &[BooleanBlock],
) -> Vec<GlobalValuation> {
    if blocks.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; blocks.len()];
    'outer: loop {
        let candidate: Vec<Valuation> = blocks
            .iter()
            .zip(&choice)
            .map(|(b, &c)| Valuation::new(b, b.atoms()[c]))
            .collect();
        let gv = GlobalValuation {
            per_block: candidate,
        };
        if gv.verify_compatible(l) {
            out.push(gv);
        }
        for i in (0..blocks.len()).rev() {
            choice[i] += 1;
            if choice[i] < blocks[i].atoms().len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    out
}

/// A fixed valuation on the possibility space, to be extended to a
/// compatible global valuation.
#[derive(Debug, Clone)]
pub struct ActualizationProblem<'a, 'l> {
    pub frame: &'a ModalFrame<'l>,
    pub f: Valuation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActualizationError {
    #[error("f is not a Boolean homomorphism on the possibility space: {0}")]
    InvalidValuation(HomomorphismViolation),
    #[error("f is not defined on the possibility space")]
    WrongDomain,
}

/// Searches for a global valuation that restricts to `f` on `◇L`.
///
/// The possibility space is central, hence contained in every block, so
/// the constraint is seeded as a fixed assignment before the search.
pub fn find_compatible_actualization(
    problem: &ActualizationProblem<'_, '_>,
    blocks: &[BooleanBlock],
) -> Result<SearchOutcome, ActualizationError> {
    let l = problem.frame.lattice();
    let space = problem.frame.possibility_space();
    if problem.f.members() != space.members() {
        return Err(ActualizationError::WrongDomain);
    }
    problem
        .f
        .verify_homomorphism(l)
        .map_err(ActualizationError::InvalidValuation)?;
    let pinned: Vec<(ElementId, bool)> = space
        .members()
        .iter()
        .map(|&x| (x, problem.f.value(l, x).expect("member of the domain")))
        .collect();
    Ok(find_with_preassignment(l, blocks, &pinned))
}

/// Both sides of the global-valuation/actualization equivalence, computed
/// independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct MksVerdict {
    pub has_global: bool,
    pub exists_actualizable_f: bool,
    pub biconditional_holds: bool,
}

/// Computes whether a global valuation exists (backtracking over blocks)
/// and whether some Boolean homomorphism on `◇L` admits a compatible
/// actualization (exhaustive over the atoms of `◇L`), and reports whether
/// the two agree. Disagreement indicates an implementation bug, never a
/// property of the input.
pub fn mks_check(l: &OrthoLattice) -> MksVerdict {
    let blocks = enumerate_blocks(l);
    let has_global = find_global_valuation_over(l, &blocks).is_sat();
    let frame = ModalFrame::new(l);
    let space_block = BooleanBlock::new(l, frame.possibility_space().clone())
        .expect("the possibility space is a Boolean subalgebra");
    let exists_actualizable_f = enumerate_valuations(l, &space_block).into_iter().any(|f| {
        let problem = ActualizationProblem { frame: &frame, f };
        find_compatible_actualization(&problem, &blocks)
            .expect("enumerated valuations are valid")
            .is_sat()
    });
    MksVerdict {
        has_global,
        exists_actualizable_f,
        biconditional_holds: has_global == exists_actualizable_f,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lattice is not Boolean: distributivity fails at ({0}, {1}, {2})")]
pub struct NotBoolean(pub ElementId, pub ElementId, pub ElementId);

/// On a Boolean lattice `◇` is the identity, so possible and actual
/// coincide: checks `v(◇A) = v(A)` for every valuation `v` and element
/// `A`. Rejects non-Boolean input.
pub fn classical_correspondence_check(l: &OrthoLattice) -> Result<bool, NotBoolean> {
    let all = Subalgebra::closure(l, &l.elements().collect::<Vec<_>>());
    if let Some((x, y, z)) = all.distributivity_witness(l) {
        return Err(NotBoolean(x, y, z));
    }
    let frame = ModalFrame::new(l);
    let block = BooleanBlock::new(l, all).expect("distributivity already checked");
    for v in enumerate_valuations(l, &block) {
        for a in l.elements() {
            let lhs = v.value(l, frame.diamond(a)).expect("total domain");
            let rhs = v.value(l, a).expect("total domain");
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_power, mo, test_catalog, test_products};

    fn el(l: &OrthoLattice, label: &str) -> ElementId {
        l.element_by_label(label).unwrap()
    }

    #[test]
    fn blocks_of_mo2() {
        let l = mo(2).unwrap();
        let blocks = enumerate_blocks(&l);
        assert_eq!(blocks.len(), 2);
        let labels: Vec<Vec<&str>> = blocks
            .iter()
            .map(|b| b.members().iter().map(|&x| l.label(x)).collect())
            .collect();
        assert_eq!(labels[0], vec!["0", "a1", "¬a1", "1"]);
        assert_eq!(labels[1], vec!["0", "a2", "¬a2", "1"]);
    }

    #[test]
    fn boolean_lattice_is_its_own_single_block() {
        let l = boolean_power(3).unwrap();
        let blocks = enumerate_blocks(&l);
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].members().len(), 8);
        assert_eq!(blocks[0].atoms().len(), 3);
    }

    #[test]
    fn blocks_of_mo3() {
        let l = mo(3).unwrap();
        let blocks = enumerate_blocks(&l);
        assert_eq!(blocks.len(), 3);
        for b in &blocks {
            assert_eq!(b.members().len(), 4);
        }
    }

    #[test]
    fn every_block_is_boolean_and_contains_the_center() {
        for (name, l) in test_catalog().into_iter().chain(test_products(64)) {
            if name == "o6" {
                continue;
            }
            let center = crate::modal::center_fast(&l);
            for block in enumerate_blocks(&l) {
                assert!(block.carrier().is_boolean(&l), "{name}");
                for &z in center.members() {
                    assert!(block.contains(z), "{name}: center must lie in every block");
                }
            }
        }
    }

    #[test]
    fn valuation_counts_follow_atoms() {
        let l = mo(2).unwrap();
        let blocks = enumerate_blocks(&l);
        assert_eq!(enumerate_valuations(&l, &blocks[0]).len(), 2);

        let b3 = boolean_power(3).unwrap();
        let blocks3 = enumerate_blocks(&b3);
        assert_eq!(enumerate_valuations(&b3, &blocks3[0]).len(), 3);

        // The trivial block {0, 1} has exactly one valuation.
        let sub = crate::lattice::Subalgebra::closure(&l, &[]);
        let trivial = BooleanBlock::new(&l, sub).unwrap();
        assert_eq!(enumerate_valuations(&l, &trivial).len(), 1);
    }

    #[test]
    fn valuation_values_follow_the_true_atom() {
        let l = mo(2).unwrap();
        let blocks = enumerate_blocks(&l);
        let v = &enumerate_valuations(&l, &blocks[0])[0];
        assert_eq!(v.true_atom(), el(&l, "a1"));
        assert_eq!(v.value(&l, el(&l, "a1")), Some(true));
        assert_eq!(v.value(&l, el(&l, "¬a1")), Some(false));
        assert_eq!(v.value(&l, l.top()), Some(true));
        assert_eq!(v.value(&l, el(&l, "a2")), None);
    }

    #[test]
    fn mo2_has_exactly_four_global_valuations() {
        let l = mo(2).unwrap();
        let blocks = enumerate_blocks(&l);
        let all = enumerate_global_valuations(&l, &blocks);
        assert_eq!(all.len(), 4);
        for gv in &all {
            assert!(gv.verify_compatible(&l));
        }
        let found = find_global_valuation(&l);
        assert!(found.is_sat());
        // Canonically least witness: first atom of each block.
        if let SearchOutcome::Sat(gv) = found {
            let atoms: Vec<&str> = gv
                .per_block()
                .iter()
                .map(|v| l.label(v.true_atom()))
                .collect();
            assert_eq!(atoms, vec!["a1", "a2"]);
        }
    }

    #[test]
    fn boolean_lattice_has_one_global_valuation_per_atom() {
        for k in 1..=4 {
            let l = boolean_power(k).unwrap();
            let blocks = enumerate_blocks(&l);
            assert_eq!(enumerate_global_valuations(&l, &blocks).len(), k);
        }
    }

    #[test]
    fn backtracking_agrees_with_enumeration_on_small_latices() {
        for (name, l) in test_catalog().into_iter().chain(test_products(16)) {
            if name == "o6" {
                continue;
            }
            let blocks = enumerate_blocks(&l);
            if blocks.len() > 4 {
                continue;
            }
            let brute = !enumerate_global_valuations(&l, &blocks).is_empty();
            let fast = find_global_valuation_over(&l, &blocks).is_sat();
            assert_eq!(brute, fast, "{name}");
        }
    }

    #[test]
    fn actualization_on_mo2_is_unconstrained() {
        let l = mo(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let space_block = BooleanBlock::new(&l, frame.possibility_space().clone()).unwrap();
        let fs = enumerate_valuations(&l, &space_block);
        assert_eq!(fs.len(), 1);
        let problem = ActualizationProblem {
            frame: &frame,
            f: fs[0].clone(),
        };
        let out = find_compatible_actualization(&problem, &blocks).unwrap();
        assert!(out.is_sat());
    }

    #[test]
    fn actualization_pins_central_coordinates() {
        let two = boolean_power(1).unwrap();
        let l = two.product(&mo(2).unwrap()).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let space_block = BooleanBlock::new(&l, frame.possibility_space().clone()).unwrap();
        for f in enumerate_valuations(&l, &space_block) {
            let forced = f.true_atom();
            let problem = ActualizationProblem { frame: &frame, f };
            let out = find_compatible_actualization(&problem, &blocks).unwrap();
            match out {
                SearchOutcome::Sat(gv) => {
                    for v in gv.per_block() {
                        assert_eq!(v.value(&l, forced), Some(true));
                    }
                }
                SearchOutcome::Unsat(_) => panic!("product of Booleans and MO2 is colorable"),
            }
        }
    }

    #[test]
    fn actualization_on_boolean_lattice_reproduces_f() {
        // On a Boolean lattice the possibility space is the whole lattice,
        // so the only compatible actualization is f itself.
        let l = boolean_power(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let space_block = BooleanBlock::new(&l, frame.possibility_space().clone()).unwrap();
        let fs = enumerate_valuations(&l, &space_block);
        assert_eq!(fs.len(), 2);
        for f in fs {
            let expected_atom = f.true_atom();
            let problem = ActualizationProblem { frame: &frame, f };
            match find_compatible_actualization(&problem, &blocks).unwrap() {
                SearchOutcome::Sat(gv) => {
                    assert_eq!(gv.per_block().len(), 1);
                    assert_eq!(gv.per_block()[0].true_atom(), expected_atom);
                }
                SearchOutcome::Unsat(_) => panic!("Boolean lattice always actualizes"),
            }
        }
    }

    #[test]
    fn actualization_rejects_wrong_domain() {
        let l = mo(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let f = enumerate_valuations(&l, &blocks[0])[0].clone();
        let problem = ActualizationProblem { frame: &frame, f };
        assert!(matches!(
            find_compatible_actualization(&problem, &blocks),
            Err(ActualizationError::WrongDomain)
        ));
    }

    #[test]
    fn mks_holds_on_catalog_and_products() {
        for (name, l) in test_catalog().into_iter().chain(test_products(64)) {
            if name == "o6" {
                continue;
            }
            let verdict = mks_check(&l);
            assert!(verdict.has_global, "{name} should be colorable");
            assert!(verdict.exists_actualizable_f, "{name}");
            assert!(verdict.biconditional_holds, "{name}");
        }
    }

    #[test]
    fn classical_correspondence_on_boolean_powers() {
        for k in 2..=4 {
            let l = boolean_power(k).unwrap();
            assert_eq!(classical_correspondence_check(&l), Ok(true));
        }
    }

    #[test]
    fn classical_correspondence_rejects_non_boolean() {
        let l = mo(2).unwrap();
        assert!(classical_correspondence_check(&l).is_err());
    }
}
