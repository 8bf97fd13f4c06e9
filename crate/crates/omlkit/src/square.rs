//! The modal square of opposition, verified by complete valuation
//! enumeration over classically expanded contexts.
//!
//! For a proposition `p` in a context `W`, the four vertices are
//! `¬◇¬p` (A), `¬◇p` (E), `◇p` (I) and `◇¬p` (O); all four are central,
//! hence members of the expansion `W^◇`, and every Boolean valuation of
//! `W^◇` assigns them values. The universal clauses of each relation are
//! checked under every valuation; the existential clauses ("can both be
//! false/true") record the first witness in canonical valuation order and
//! apply only to non-central `p`. For central `p` the square collapses to
//! the classical pair `{p, ¬p}` and the report flags it.

use crate::blocks::{enumerate_valuations, BooleanBlock, Valuation};
use crate::exec::Runner;
use crate::lattice::{ElementId, OrthoLattice};
use crate::modal::{ExpandedContext, ModalFrame, NonBooleanExpansion};
use serde::Serialize;
use thiserror::Error;

/// One proposition in one context, with the expansion precomputed.
#[derive(Debug, Clone)]
pub struct SquareInstance<'a, 'l> {
    frame: &'a ModalFrame<'l>,
    p: ElementId,
    expanded: ExpandedContext,
    valuations: Vec<Valuation>,
    vertices: Vertices,
}

#[derive(Debug, Clone, Copy)]
struct Vertices {
    nec_p: ElementId,     // ¬◇¬p
    neg_dia_p: ElementId, // ¬◇p
    dia_p: ElementId,     // ◇p
    dia_neg_p: ElementId, // ◇¬p
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("proposition is not a member of the chosen block")]
    PropositionOutsideBlock,
    #[error(transparent)]
    NonBooleanExpansion(#[from] NonBooleanExpansion),
}

impl<'a, 'l> SquareInstance<'a, 'l> {
    pub fn new(
        frame: &'a ModalFrame<'l>,
        p: ElementId,
        block: &BooleanBlock,
    ) -> Result<SquareInstance<'a, 'l>, SquareError> {
        if !block.contains(p) {
            return Err(SquareError::PropositionOutsideBlock);
        }
        let l = frame.lattice();
        let expanded = frame.expanded_context(block.carrier())?;
        let expanded_block = BooleanBlock::new(l, expanded.carrier().clone())
            .expect("expansion was just verified Boolean");
        let valuations = enumerate_valuations(l, &expanded_block);
        let vertices = Vertices {
            nec_p: frame.necessity(p),
            neg_dia_p: l.ortho(frame.diamond(p)),
            dia_p: frame.diamond(p),
            dia_neg_p: frame.diamond(l.ortho(p)),
        };
        Ok(SquareInstance {
            frame,
            p,
            expanded,
            valuations,
            vertices,
        })
    }

    pub fn proposition(&self) -> ElementId {
        self.p
    }

    pub fn expanded(&self) -> &ExpandedContext {
        &self.expanded
    }

    pub fn is_collapsed(&self) -> bool {
        self.frame.is_central(self.p)
    }

    fn value(&self, v: &Valuation, x: ElementId) -> bool {
        v.value(self.frame.lattice(), x)
            .expect("square vertices are members of the expansion")
    }
}

/// Verdict for one relation: the universal clause held, plus the first
/// witness valuation (by true atom) for the existential clause if one was
/// required and found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Never `v(¬◇¬p) = v(¬◇p) = 1`; for non-central `p`, some valuation makes
/// both false.
pub fn check_contraries(inst: &SquareInstance<'_, '_>) -> RelationVerdict {
    let Vertices {
        nec_p, neg_dia_p, ..
    } = inst.vertices;
    let never_both_true = inst
        .valuations
        .iter()
        .all(|v| !(inst.value(v, nec_p) && inst.value(v, neg_dia_p)));
    if inst.is_collapsed() {
        return RelationVerdict {
            holds: never_both_true,
            witness: None,
        };
    }
    let both_false = inst
        .valuations
        .iter()
        .find(|v| !inst.value(v, nec_p) && !inst.value(v, neg_dia_p));
    RelationVerdict {
        holds: never_both_true && both_false.is_some(),
        witness: both_false.map(|v| witness_desc(inst, v)),
    }
}

/// Never `v(◇p) = v(◇¬p) = 0`; for non-central `p`, some valuation makes
/// both true (the ground `◇p ∧ ◇¬p ≠ 0` guarantees one exists).
pub fn check_subcontraries(inst: &SquareInstance<'_, '_>) -> RelationVerdict {
    let Vertices {
        dia_p, dia_neg_p, ..
    } = inst.vertices;
    let never_both_false = inst
        .valuations
        .iter()
        .all(|v| inst.value(v, dia_p) || inst.value(v, dia_neg_p));
    if inst.is_collapsed() {
        return RelationVerdict {
            holds: never_both_false,
            witness: None,
        };
    }
    let both_true = inst
        .valuations
        .iter()
        .find(|v| inst.value(v, dia_p) && inst.value(v, dia_neg_p));
    RelationVerdict {
        holds: never_both_false && both_true.is_some(),
        witness: both_true.map(|v| witness_desc(inst, v)),
    }
}

/// Both subaltern implications on the left edge (`¬◇¬p` over `◇p`) and the
/// right edge (`¬◇p` over `◇¬p`): truth descends, falsity ascends.
pub fn check_subalterns(inst: &SquareInstance<'_, '_>) -> (RelationVerdict, RelationVerdict) {
    let Vertices {
        nec_p,
        neg_dia_p,
        dia_p,
        dia_neg_p,
    } = inst.vertices;
    // Truth of the superaltern forces the subaltern true; falsity of the
    // subaltern forces the superaltern false. Both clauses are the same
    // material implication up ⇒ low.
    let edge = |upper: ElementId, lower: ElementId| {
        let ok = inst
            .valuations
            .iter()
            .all(|v| !inst.value(v, upper) || inst.value(v, lower));
        RelationVerdict {
            holds: ok,
            witness: None,
        }
    };
    (edge(nec_p, dia_p), edge(neg_dia_p, dia_neg_p))
}

/// Both diagonals are exclusive and exhaustive: `v(◇p) + v(¬◇p) = 1` and
/// `v(¬◇¬p) + v(◇¬p) = 1` under every valuation.
pub fn check_contradictories(inst: &SquareInstance<'_, '_>) -> (RelationVerdict, RelationVerdict) {
    let Vertices {
        nec_p,
        neg_dia_p,
        dia_p,
        dia_neg_p,
    } = inst.vertices;
    let diag = |a: ElementId, b: ElementId| {
        let ok = inst
            .valuations
            .iter()
            .all(|v| inst.value(v, a) != inst.value(v, b));
        RelationVerdict {
            holds: ok,
            witness: None,
        }
    };
    (diag(dia_p, neg_dia_p), diag(nec_p, dia_neg_p))
}

fn witness_desc(inst: &SquareInstance<'_, '_>, v: &Valuation) -> String {
    format!("true_atom={}", inst.frame.lattice().label(v.true_atom()))
}

/// Full report for one `(p, W)` pair, JSON-serializable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareReport {
    pub proposition: String,
    pub block: Vec<String>,
    pub expanded_context: Vec<String>,
    pub vertices: SquareVertices,
    pub relations: SquareRelations,
    pub collapsed: bool,
    /// Present only when collapsed: `◇p = p` held, and the four vertices
    /// reduce to the classical pair `{p, ¬p}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collapse: Option<CollapseInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareVertices {
    pub nec_p: String,
    pub neg_diamond_p: String,
    pub diamond_p: String,
    pub diamond_neg_p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareRelations {
    pub contraries: RelationVerdict,
    pub subcontraries: RelationVerdict,
    pub subalterns_left: RelationVerdict,
    pub subalterns_right: RelationVerdict,
    pub contradictories_diag1: RelationVerdict,
    pub contradictories_diag2: RelationVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseInfo {
    pub diamond_p_equals_p: bool,
    pub vertices_reduce_to_classical_pair: bool,
}

impl SquareReport {
    pub fn all_hold(&self) -> bool {
        let r = &self.relations;
        let core = r.contraries.holds
            && r.subcontraries.holds
            && r.subalterns_left.holds
            && r.subalterns_right.holds
            && r.contradictories_diag1.holds
            && r.contradictories_diag2.holds;
        match &self.collapse {
            Some(c) => core && c.diamond_p_equals_p && c.vertices_reduce_to_classical_pair,
            None => core,
        }
    }

    /// Fixed-shape diagram mirroring the square figure, plus a legend with
    /// the vertex values and the verdicts.
    pub fn render_text(&self) -> String {
        let r = &self.relations;
        let hold = |verdict: &RelationVerdict| if verdict.holds { "holds" } else { "FAILS" };
        let mut out = String::new();
        out.push_str(&format!(
            "square of opposition for p = {}\n\n",
            self.proposition
        ));
        out.push_str("  ¬◇¬p ———— contraries ———— ¬◇p\n");
        out.push_str("    |  ⟍                  ⟋  |\n");
        out.push_str("    |    contradictories     |\n");
        out.push_str("subalterns      ⤬       subalterns\n");
        out.push_str("    |    ⟋              ⟍   |\n");
        out.push_str("   ◇p ——— subcontraries ——— ◇¬p\n\n");
        out.push_str(&format!(
            "  ¬◇¬p = {}\n  ¬◇p  = {}\n  ◇p   = {}\n  ◇¬p  = {}\n\n",
            self.vertices.nec_p,
            self.vertices.neg_diamond_p,
            self.vertices.diamond_p,
            self.vertices.diamond_neg_p
        ));
        out.push_str(&format!("  contraries            {}", hold(&r.contraries)));
        if let Some(w) = &r.contraries.witness {
            out.push_str(&format!("  (both-false witness {w})"));
        }
        out.push('\n');
        out.push_str(&format!(
            "  subcontraries         {}",
            hold(&r.subcontraries)
        ));
        if let Some(w) = &r.subcontraries.witness {
            out.push_str(&format!("  (both-true witness {w})"));
        }
        out.push('\n');
        out.push_str(&format!(
            "  subalterns (left)     {}\n",
            hold(&r.subalterns_left)
        ));
        out.push_str(&format!(
            "  subalterns (right)    {}\n",
            hold(&r.subalterns_right)
        ));
        out.push_str(&format!(
            "  contradictories (I/E) {}\n",
            hold(&r.contradictories_diag1)
        ));
        out.push_str(&format!(
            "  contradictories (A/O) {}\n",
            hold(&r.contradictories_diag2)
        ));
        if self.collapsed {
            out.push_str("\n  collapsed: p is central, the square reduces to {p, ¬p}\n");
        }
        out
    }
}

/// Runs all four checks for `p` in `block` and assembles the report.
///
/// When `p` is central the report is flagged collapsed and additionally
/// asserts `◇p = p` and that the vertices reduce to `{p, ¬p}`.
pub fn square_report(
    frame: &ModalFrame<'_>,
    p: ElementId,
    block: &BooleanBlock,
) -> Result<SquareReport, SquareError> {
    let l = frame.lattice();
    let inst = SquareInstance::new(frame, p, block)?;
    let contraries = check_contraries(&inst);
    let subcontraries = check_subcontraries(&inst);
    let (subalterns_left, subalterns_right) = check_subalterns(&inst);
    let (contradictories_diag1, contradictories_diag2) = check_contradictories(&inst);
    let collapsed = inst.is_collapsed();
    let collapse = collapsed.then(|| {
        let v = inst.vertices;
        CollapseInfo {
            diamond_p_equals_p: frame.diamond(p) == p,
            vertices_reduce_to_classical_pair: v.dia_p == p
                && v.nec_p == p
                && v.neg_dia_p == l.ortho(p)
                && v.dia_neg_p == l.ortho(p),
        }
    });
    Ok(SquareReport {
        proposition: l.label(p).to_string(),
        block: block
            .members()
            .iter()
            .map(|&x| l.label(x).to_string())
            .collect(),
        expanded_context: inst
            .expanded
            .carrier()
            .members()
            .iter()
            .map(|&x| l.label(x).to_string())
            .collect(),
        vertices: SquareVertices {
            nec_p: l.label(inst.vertices.nec_p).to_string(),
            neg_diamond_p: l.label(inst.vertices.neg_dia_p).to_string(),
            diamond_p: l.label(inst.vertices.dia_p).to_string(),
            diamond_neg_p: l.label(inst.vertices.dia_neg_p).to_string(),
        },
        relations: SquareRelations {
            contraries,
            subcontraries,
            subalterns_left,
            subalterns_right,
            contradictories_diag1,
            contradictories_diag2,
        },
        collapsed,
        collapse,
    })
}

fn sweep_with<R: Runner>(
    l: &OrthoLattice,
    frame: &ModalFrame<'_>,
    blocks: &[BooleanBlock],
    runner: &R,
) -> Vec<SquareReport> {
    // Canonical (p, W) pair order: ascending p, blocks in canonical order.
    let pairs: Vec<(ElementId, usize)> = l
        .elements()
        .flat_map(|p| {
            blocks
                .iter()
                .enumerate()
                .filter(move |(_, b)| b.contains(p))
                .map(move |(bi, _)| (p, bi))
        })
        .collect();
    runner.map(pairs.len(), |i| {
        let (p, bi) = pairs[i];
        square_report(frame, p, &blocks[bi]).expect("p is a member of the block")
    })
}

/// Reports for every `(p, maximal block containing p)` pair, in canonical
/// order; parallel when the `parallel` feature is enabled.
pub fn sweep_squares(
    l: &OrthoLattice,
    frame: &ModalFrame<'_>,
    blocks: &[BooleanBlock],
) -> Vec<SquareReport> {
    #[cfg(feature = "parallel")]
    {
        sweep_with(l, frame, blocks, &crate::exec::Par)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_with(l, frame, blocks, &crate::exec::Seq)
    }
}

pub fn sweep_squares_sequential(
    l: &OrthoLattice,
    frame: &ModalFrame<'_>,
    blocks: &[BooleanBlock],
) -> Vec<SquareReport> {
    sweep_with(l, frame, blocks, &crate::exec::Seq)
}

#[cfg(feature = "parallel")]
pub fn sweep_squares_parallel(
    l: &OrthoLattice,
    frame: &ModalFrame<'_>,
    blocks: &[BooleanBlock],
) -> Vec<SquareReport> {
    sweep_with(l, frame, blocks, &crate::exec::Par)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::enumerate_blocks;
    use crate::lattice::{boolean_power, mo};

    fn block_containing(blocks: &[BooleanBlock], p: ElementId) -> BooleanBlock {
        blocks
            .iter()
            .find(|b| b.contains(p))
            .expect("every element lies in some maximal block")
            .clone()
    }

    #[test]
    fn square_on_mo2_atom() {
        let l = mo(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let a1 = l.element_by_label("a1").unwrap();
        let report = square_report(&frame, a1, &block_containing(&blocks, a1)).unwrap();
        assert!(!report.collapsed);
        assert!(report.all_hold(), "{report:?}");
        assert_eq!(report.vertices.nec_p, "0");
        assert_eq!(report.vertices.neg_diamond_p, "0");
        assert_eq!(report.vertices.diamond_p, "1");
        assert_eq!(report.vertices.diamond_neg_p, "1");
        // Every valuation is a witness; the first one (atom a1) is recorded.
        assert_eq!(
            report.relations.contraries.witness.as_deref(),
            Some("true_atom=a1")
        );
        assert_eq!(
            report.relations.subcontraries.witness.as_deref(),
            Some("true_atom=a1")
        );
    }

    #[test]
    fn square_on_product_proposition() {
        let two = boolean_power(1).unwrap();
        let l = two.product(&mo(2).unwrap()).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let p = l.element_by_label("(1,a1)").unwrap();
        let report = square_report(&frame, p, &block_containing(&blocks, p)).unwrap();
        assert!(!report.collapsed);
        assert!(report.all_hold(), "{report:?}");
        assert_eq!(report.vertices.nec_p, "(1,0)");
        assert_eq!(report.vertices.neg_diamond_p, "(0,0)");
        assert_eq!(report.vertices.diamond_p, "(1,1)");
        assert_eq!(report.vertices.diamond_neg_p, "(0,1)");
        // The both-false contraries witness is a nonconstant valuation.
        assert_eq!(
            report.relations.contraries.witness.as_deref(),
            Some("true_atom=(0,a1)")
        );
    }

    #[test]
    fn central_proposition_collapses() {
        let l = boolean_power(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let x = l.element_by_label("10").unwrap();
        let report = square_report(&frame, x, &block_containing(&blocks, x)).unwrap();
        assert!(report.collapsed);
        let collapse = report.collapse.as_ref().unwrap();
        assert!(collapse.diamond_p_equals_p);
        assert!(collapse.vertices_reduce_to_classical_pair);
        assert!(report.all_hold());
        assert_eq!(report.vertices.nec_p, "10");
        assert_eq!(report.vertices.neg_diamond_p, "01");
    }

    #[test]
    fn proposition_outside_block_is_rejected() {
        let l = mo(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let a2 = l.element_by_label("a2").unwrap();
        assert!(matches!(
            square_report(&frame, a2, &blocks[0]),
            Err(SquareError::PropositionOutsideBlock)
        ));
    }

    #[test]
    fn sweep_covers_every_pair_and_holds() {
        let l = mo(3).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let reports = sweep_squares(&l, &frame, &blocks);
        // 0 and 1 lie in all 3 blocks, each middle element in exactly 1.
        assert_eq!(reports.len(), 3 + 3 + 6);
        for r in &reports {
            assert!(r.all_hold(), "{}", r.proposition);
        }
        let seq = sweep_squares_sequential(&l, &frame, &blocks);
        assert_eq!(reports, seq);
    }

    #[test]
    fn text_rendering_is_stable() {
        let l = mo(2).unwrap();
        let frame = ModalFrame::new(&l);
        let blocks = enumerate_blocks(&l);
        let a1 = l.element_by_label("a1").unwrap();
        let report = square_report(&frame, a1, &block_containing(&blocks, a1)).unwrap();
        let text = report.render_text();
        assert!(text.contains("contraries"));
        assert!(text.contains("¬◇¬p = 0"));
        assert!(text.contains("◇p   = 1"));
        let json = serde_json::to_string_pretty(&report).unwrap();
        assert!(json.contains("\"contradictories_diag1\""));
        assert!(json.contains("\"collapsed\": false"));
    }
}
