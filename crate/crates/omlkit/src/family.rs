//! Context families: ray-derived orthogonality hypergraphs, abstract
//! Greechie diagrams, and the pasting that realizes an admissible diagram
//! as an orthomodular lattice.
//!
//! Ray orthogonality uses exact rational arithmetic throughout; floating
//! point would silently change the hypergraph on near-orthogonal input.

use crate::blocks::UnsatStats;
use crate::lattice::{OrthoLattice, StructuralError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// A set of projectively distinct nonzero rational vectors in dimension d.
#[derive(Debug, Clone)]
pub struct RaySet {
    dim: usize,
    rays: Vec<Vec<BigRational>>,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RayError {
    #[error("dimension must be at least 2, got {0}")]
    DimTooSmall(usize),
    #[error("ray `{0}` has {1} entries, expected {2}")]
    WrongArity(String, usize, usize),
    #[error("ray `{0}` is the zero vector")]
    ZeroVector(String),
    #[error("rays `{0}` and `{1}` are scalar multiples of each other")]
    ProjectiveDuplicate(String, String),
    #[error("duplicate ray label `{0}`")]
    DuplicateLabel(String),
}

impl RaySet {
    pub fn new(
        dim: usize,
        rays: Vec<Vec<BigRational>>,
        labels: Vec<String>,
    ) -> Result<RaySet, RayError> {
        if dim < 2 {
            return Err(RayError::DimTooSmall(dim));
        }
        assert_eq!(rays.len(), labels.len(), "one label per ray");
        let mut seen = std::collections::BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.clone()) {
                return Err(RayError::DuplicateLabel(label.clone()));
            }
        }
        for (ray, label) in rays.iter().zip(&labels) {
            if ray.len() != dim {
                return Err(RayError::WrongArity(label.clone(), ray.len(), dim));
            }
            if ray.iter().all(Zero::is_zero) {
                return Err(RayError::ZeroVector(label.clone()));
            }
        }
        for i in 0..rays.len() {
            for j in (i + 1)..rays.len() {
                if projectively_equal(&rays[i], &rays[j]) {
                    return Err(RayError::ProjectiveDuplicate(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        Ok(RaySet { dim, rays, labels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rays(&self) -> &[Vec<BigRational>] {
        &self.rays
    }
}

fn dot(u: &[BigRational], v: &[BigRational]) -> BigRational {
    let mut acc = BigRational::from(BigInt::from(0));
    for (a, b) in u.iter().zip(v) {
        acc += a * b;
    }
    acc
}

fn projectively_equal(u: &[BigRational], v: &[BigRational]) -> bool {
    // u and v are scalar multiples iff all 2x2 minors vanish.
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            if &u[i] * &v[j] != &u[j] * &v[i] {
                return false;
            }
        }
    }
    true
}

/// An orthogonality hypergraph: atoms and the contexts (maximal mutually
/// orthogonal sets) they belong to.
///
/// Atoms that ended up in no context are retained — dropping them would
/// silently alter colorability questions — and are reported by
/// [`ContextFamily::orphan_atoms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextFamily {
    atom_labels: Vec<String>,
    contexts: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("duplicate atom label `{0}`")]
    DuplicateAtom(String),
    #[error("context {0} repeats atom `{1}`")]
    RepeatedAtomInContext(usize, String),
    #[error("context {0} references unknown atom index {1}")]
    UnknownAtom(usize, usize),
    #[error("duplicate context {0}")]
    DuplicateContext(usize),
}

impl ContextFamily {
    /// Contexts are given as atom-index lists; each is sorted and the
    /// context list itself is sorted lexicographically (canonical order).
    pub fn new(
        atom_labels: Vec<String>,
        contexts: Vec<Vec<usize>>,
    ) -> Result<ContextFamily, FamilyError> {
        let mut seen = std::collections::BTreeSet::new();
        for label in &atom_labels {
            if !seen.insert(label.clone()) {
                return Err(FamilyError::DuplicateAtom(label.clone()));
            }
        }
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(contexts.len());
        for (ci, mut ctx) in contexts.into_iter().enumerate() {
            for &a in &ctx {
                if a >= atom_labels.len() {
                    return Err(FamilyError::UnknownAtom(ci, a));
                }
            }
            ctx.sort_unstable();
            for w in ctx.windows(2) {
                if w[0] == w[1] {
                    return Err(FamilyError::RepeatedAtomInContext(
                        ci,
                        atom_labels[w[0]].clone(),
                    ));
                }
            }
            canonical.push(ctx);
        }
        canonical.sort();
        for (i, w) in canonical.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(FamilyError::DuplicateContext(i + 1));
            }
        }
        Ok(ContextFamily {
            atom_labels,
            contexts: canonical,
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atom_labels.len()
    }

    pub fn atom_labels(&self) -> &[String] {
        &self.atom_labels
    }

    pub fn contexts(&self) -> &[Vec<usize>] {
        &self.contexts
    }

    /// Atoms not contained in any context.
    pub fn orphan_atoms(&self) -> Vec<usize> {
        let mut used = vec![false; self.atom_labels.len()];
        for ctx in &self.contexts {
            for &a in ctx {
                used[a] = true;
            }
        }
        (0..self.atom_labels.len()).filter(|&a| !used[a]).collect()
    }

    /// How many contexts each atom belongs to.
    pub fn membership_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.atom_labels.len()];
        for ctx in &self.contexts {
            for &a in ctx {
                counts[a] += 1;
            }
        }
        counts
    }
}

/// Builds the context family of a ray set: atoms are the rays, contexts
/// are the maximal orthogonality cliques of size exactly `dim` (pairwise
/// orthogonal rays are linearly independent, so no clique exceeds `dim`).
pub fn from_rays(rays: &RaySet) -> ContextFamily {
    let n = rays.len();
    let mut orthogonal = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dot(&rays.rays()[i], &rays.rays()[j]).is_zero() {
                orthogonal[i * n + j] = true;
                orthogonal[j * n + i] = true;
            }
        }
    }
    let mut cliques = Vec::new();
    let mut current = Vec::new();
    max_cliques(
        &orthogonal,
        n,
        rays.dim(),
        &mut current,
        &(0..n).collect::<Vec<_>>(),
        &mut cliques,
    );
    let contexts: Vec<Vec<usize>> = cliques
        .into_iter()
        .filter(|c| c.len() == rays.dim())
        .collect();
    ContextFamily::new(rays.labels().to_vec(), contexts)
        .expect("ray labels are distinct and cliques repeat no atom")
}

// Exhaustive maximal-clique enumeration with candidate pruning; in-scope
// ray sets stay small (tens of rays). Pairwise-orthogonal rays are
// linearly independent, so cliques are capped at the dimension.
fn max_cliques(
    adj: &[bool],
    n: usize,
    cap: usize,
    current: &mut Vec<usize>,
    candidates: &[usize],
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() || current.len() == cap {
        let maximal =
            (0..n).all(|v| current.contains(&v) || !current.iter().all(|&u| adj[u * n + v]));
        if maximal && !current.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let v = candidates[0];
    // Branch 1: include v.
    current.push(v);
    let next: Vec<usize> = candidates[1..]
        .iter()
        .copied()
        .filter(|&u| adj[v * n + u])
        .collect();
    max_cliques(adj, n, cap, current, &next, out);
    current.pop();
    // Branch 2: exclude v; maximality is decided at the leaves.
    max_cliques(adj, n, cap, current, &candidates[1..], out);
}

/// Result of the hypergraph coloring search: an atom assignment with
/// exactly one true atom per context, or UNSAT with statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyOutcome {
    Sat(Vec<bool>),
    Unsat(UnsatStats),
}

impl FamilyOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, FamilyOutcome::Sat(_))
    }
}

struct FamilySearch<'a> {
    family: &'a ContextFamily,
    assigned: Vec<Option<bool>>,
    stats: UnsatStats,
}

impl<'a> FamilySearch<'a> {
    fn try_context(&mut self, ci: usize, chosen: usize) -> Option<Vec<usize>> {
        self.stats.nodes_explored += 1;
        let mut trail = Vec::new();
        for &a in &self.family.contexts()[ci] {
            let val = a == chosen;
            match self.assigned[a] {
                Some(prev) if prev != val => {
                    for &t in &trail {
                        self.assigned[t] = None;
                    }
                    self.stats.conflicts += 1;
                    return None;
                }
                Some(_) => {}
                None => {
                    self.assigned[a] = Some(val);
                    trail.push(a);
                }
            }
        }
        Some(trail)
    }

    fn search(&mut self, ci: usize) -> bool {
        if ci == self.family.contexts().len() {
            return true;
        }
        let atoms = self.family.contexts()[ci].clone();
        for chosen in atoms {
            if let Some(trail) = self.try_context(ci, chosen) {
                if self.search(ci + 1) {
                    return true;
                }
                for t in trail {
                    self.assigned[t] = None;
                }
            }
        }
        false
    }
}

/// Backtracking search for a noncontextual {0,1} assignment: exactly one
/// true atom per context, values shared across contexts. Orphan atoms are
/// reported false in a SAT witness.
pub fn find_global_valuation_on_family(family: &ContextFamily) -> FamilyOutcome {
    let mut state = FamilySearch {
        family,
        assigned: vec![None; family.atom_count()],
        stats: UnsatStats::default(),
    };
    if state.search(0) {
        FamilyOutcome::Sat(state.assigned.iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        FamilyOutcome::Unsat(state.stats)
    }
}

/// Brute-force oracle over all one-true-atom-per-context choices.
pub fn enumerate_family_assignments(family: &ContextFamily) -> Vec<Vec<bool>> {
    let contexts = family.contexts();
    if contexts.is_empty() {
        return vec![vec![false; family.atom_count()]];
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; contexts.len()];
    'outer: loop {
        let mut assigned: Vec<Option<bool>> = vec![None; family.atom_count()];
        let mut ok = true;
        'check: for (ci, ctx) in contexts.iter().enumerate() {
            let chosen = ctx[choice[ci]];
            for &a in ctx {
                let val = a == chosen;
                match assigned[a] {
                    Some(prev) if prev != val => {
                        ok = false;
                        break 'check;
                    }
                    _ => assigned[a] = Some(val),
                }
            }
        }
        if ok {
            out.push(assigned.iter().map(|v| v.unwrap_or(false)).collect());
        }
        for i in (0..contexts.len()).rev() {
            choice[i] += 1;
            if choice[i] < contexts[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    out.sort();
    out.dedup();
    out
}

/// Independent UNSAT certificate by double counting: if every atom lies in
/// exactly two contexts, each context needs exactly one true atom, so the
/// context count equals the (even) total of per-atom true-counts — an odd
/// number of contexts is therefore uncolorable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCertificate {
    pub context_count: usize,
}

pub fn parity_certificate(family: &ContextFamily) -> Option<ParityCertificate> {
    let counts = family.membership_counts();
    // Orphan atoms (count 0) are unconstrained and do not disturb the
    // double-counting argument.
    let memberships_ok = counts.iter().all(|&c| c == 2 || c == 0);
    let nonempty = counts.iter().any(|&c| c > 0);
    if memberships_ok && nonempty && family.contexts().len() % 2 == 1 {
        Some(ParityCertificate {
            context_count: family.contexts().len(),
        })
    } else {
        None
    }
}

/// Why a context family is not Greechie-pastable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotPastable {
    #[error("atom `{0}` lies in no context")]
    OrphanAtom(String),
    #[error("context {0} has fewer than 2 atoms")]
    ContextTooSmall(usize),
    #[error("contexts {0} and {1} overlap in more than one atom")]
    OverlapTooLarge(usize, usize),
    #[error("2-atom context {0} shares an atom with context {1}")]
    SmallContextOverlap(usize, usize),
    #[error("loop of order {len} through contexts {contexts:?}")]
    SmallLoop { len: usize, contexts: Vec<usize> },
    #[error("paste is not a lattice: {0}")]
    NotALattice(StructuralError),
}

/// Greechie paste of an admissible context family.
///
/// Admissibility: no orphan atoms, every context has at least two atoms,
/// 2-atom contexts are disjoint from everything else, pairwise context
/// overlaps have at most one atom, and the context-intersection graph has
/// no cycles of length 3 or 4 (loop condition). Under these conditions
/// the blockwise Boolean structure glued on shared atoms and their
/// complements is an orthomodular lattice.
pub fn paste_to_lattice(family: &ContextFamily) -> Result<OrthoLattice, NotPastable> {
    let contexts = family.contexts();
    if let Some(&orphan) = family.orphan_atoms().first() {
        return Err(NotPastable::OrphanAtom(
            family.atom_labels()[orphan].clone(),
        ));
    }
    for (ci, ctx) in contexts.iter().enumerate() {
        if ctx.len() < 2 {
            return Err(NotPastable::ContextTooSmall(ci));
        }
    }
    let m = contexts.len();
    // shared[i][j] = the single shared atom, if any
    let mut shared: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let common: Vec<usize> = contexts[i]
                .iter()
                .copied()
                .filter(|a| contexts[j].binary_search(a).is_ok())
                .collect();
            if common.len() > 1 {
                return Err(NotPastable::OverlapTooLarge(i, j));
            }
            if let Some(&atom) = common.first() {
                if contexts[i].len() == 2 {
                    return Err(NotPastable::SmallContextOverlap(i, j));
                }
                if contexts[j].len() == 2 {
                    return Err(NotPastable::SmallContextOverlap(j, i));
                }
                shared[i][j] = Some(atom);
                shared[j][i] = Some(atom);
            }
        }
    }
    // Loops of order 3 and 4 with pairwise distinct connecting atoms.
    for a in 0..m {
        for b in (a + 1)..m {
            let Some(x_ab) = shared[a][b] else { continue };
            for c in (b + 1)..m {
                if let (Some(x_bc), Some(x_ca)) = (shared[b][c], shared[a][c]) {
                    if x_ab != x_bc && x_bc != x_ca && x_ca != x_ab {
                        return Err(NotPastable::SmallLoop {
                            len: 3,
                            contexts: vec![a, b, c],
                        });
                    }
                }
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            if b == a {
                continue;
            }
            let Some(x_ab) = shared[a][b] else { continue };
            for c in 0..m {
                if c == a || c == b {
                    continue;
                }
                let Some(x_bc) = shared[b][c] else { continue };
                for d in (a + 1)..m {
                    if d == b || d == c {
                        continue;
                    }
                    let (Some(x_cd), Some(x_da)) = (shared[c][d], shared[d][a]) else {
                        continue;
                    };
                    let atoms = [x_ab, x_bc, x_cd, x_da];
                    let mut distinct = atoms.to_vec();
                    distinct.sort_unstable();
                    distinct.dedup();
                    if distinct.len() == 4 {
                        return Err(NotPastable::SmallLoop {
                            len: 4,
                            contexts: vec![a, b, c, d],
                        });
                    }
                }
            }
        }
    }

    build_paste(family).map_err(NotPastable::NotALattice)
}

// Elements of the paste are equivalence classes of (context, atom-subset)
// pairs. Identified across contexts: the empty set (bottom), the full set
// (top), singletons of shared atoms, and their in-context complements
// (the global orthocomplement must be well defined).
fn build_paste(family: &ContextFamily) -> Result<OrthoLattice, StructuralError> {
    let contexts = family.contexts();

    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    enum Key {
        Bottom,
        Top,
        Atom(usize),
        Coatom(usize),
        Inner(usize, Vec<usize>),
    }

    let key_of = |ci: usize, subset: &[usize]| -> Key {
        let ctx = &contexts[ci];
        if subset.is_empty() {
            Key::Bottom
        } else if subset.len() == ctx.len() {
            Key::Top
        } else if subset.len() == 1 {
            Key::Atom(subset[0])
        } else if subset.len() == ctx.len() - 1 {
            let missing = ctx
                .iter()
                .copied()
                .find(|a| !subset.contains(a))
                .expect("one atom is missing");
            Key::Coatom(missing)
        } else {
            Key::Inner(ci, subset.to_vec())
        }
    };

    // Collect all (context, subset) pairs grouped by key.
    let mut by_key: BTreeMap<Key, Vec<(usize, Vec<usize>)>> = BTreeMap::new();
    for (ci, ctx) in contexts.iter().enumerate() {
        let k = ctx.len();
        for mask in 0..(1usize << k) {
            let subset: Vec<usize> = (0..k)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| ctx[b])
                .collect();
            by_key
                .entry(key_of(ci, &subset))
                .or_default()
                .push((ci, subset));
        }
    }

    // Canonical element order: bottom, atoms (family order), coatoms,
    // inner elements by (context, subset), top.
    let mut keys: Vec<Key> = Vec::with_capacity(by_key.len());
    keys.push(Key::Bottom);
    for key in by_key.keys() {
        if matches!(key, Key::Atom(_)) {
            keys.push(key.clone());
        }
    }
    for key in by_key.keys() {
        if matches!(key, Key::Coatom(_)) {
            keys.push(key.clone());
        }
    }
    for key in by_key.keys() {
        if matches!(key, Key::Inner(..)) {
            keys.push(key.clone());
        }
    }
    keys.push(Key::Top);

    let index: BTreeMap<Key, usize> = keys
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let n = keys.len();

    let labels: Vec<String> = keys
        .iter()
        .map(|k| match k {
            Key::Bottom => "0".to_string(),
            Key::Top => "1".to_string(),
            Key::Atom(a) => family.atom_labels()[*a].clone(),
            Key::Coatom(a) => format!("¬{}", family.atom_labels()[*a]),
            Key::Inner(_, subset) => subset
                .iter()
                .map(|&a| family.atom_labels()[a].clone())
                .collect::<Vec<_>>()
                .join("∨"),
        })
        .collect();

    // Order: subset inclusion within each context, transitively closed by
    // OrthoLattice::from_order.
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
        leq[index[&Key::Bottom] * n + i] = true;
        leq[i * n + index[&Key::Top]] = true;
    }
    for (ci, ctx) in contexts.iter().enumerate() {
        let k = ctx.len();
        let subsets: Vec<Vec<usize>> = (0..(1usize << k))
            .map(|mask| {
                (0..k)
                    .filter(|&b| mask & (1 << b) != 0)
                    .map(|b| ctx[b])
                    .collect()
            })
            .collect();
        for s in &subsets {
            for t in &subsets {
                if s.iter().all(|a| t.contains(a)) {
                    leq[index[&key_of(ci, s)] * n + index[&key_of(ci, t)]] = true;
                }
            }
        }
    }

    // Ortho: in-context complement; well defined on identified classes.
    let mut ortho = vec![0u32; n];
    ortho[0] = (n - 1) as u32;
    ortho[n - 1] = 0;
    for (key, occurrences) in &by_key {
        let (ci, subset) = &occurrences[0];
        let complement: Vec<usize> = contexts[*ci]
            .iter()
            .copied()
            .filter(|a| !subset.contains(a))
            .collect();
        ortho[index[key]] = index[&key_of(*ci, &complement)] as u32;
    }

    OrthoLattice::from_order(leq, ortho, labels)
}
