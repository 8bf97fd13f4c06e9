//! DOT export: Hasse diagrams for lattices, hyperedge cliques for
//! context families. Node order follows element/atom ids, so output is
//! byte-deterministic.

use crate::family::ContextFamily;
use crate::lattice::OrthoLattice;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram: one node per element grouped by rank (longest chain from
/// the bottom), one edge per cover pair, drawn bottom-up.
pub fn lattice_to_dot(l: &OrthoLattice) -> String {
    let n = l.element_count();
    let covers = l.covers();
    let mut rank = vec![0usize; n];
    // Longest-path layering; covers of a finite order admit no cycles.
    let mut changed = true;
    while changed {
        changed = false;
        for &(lo, hi) in &covers {
            if rank[hi.0] < rank[lo.0] + 1 {
                rank[hi.0] = rank[lo.0] + 1;
                changed = true;
            }
        }
    }
    let max_rank = rank.iter().copied().max().unwrap_or(0);
    let mut out = String::from("graph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for level in 0..=max_rank {
        let members: Vec<String> = l
            .elements()
            .filter(|x| rank[x.0] == level)
            .map(|x| quote(l.label(x)))
            .collect();
        if !members.is_empty() {
            out.push_str(&format!("  {{ rank=same; {}; }}\n", members.join("; ")));
        }
    }
    for (lo, hi) in covers {
        out.push_str(&format!(
            "  {} -- {};\n",
            quote(l.label(lo)),
            quote(l.label(hi))
        ));
    }
    out.push_str("}\n");
    out
}

const CONTEXT_COLORS: [&str; 8] = [
    "firebrick3",
    "dodgerblue3",
    "forestgreen",
    "darkorange2",
    "purple3",
    "goldenrod3",
    "deeppink3",
    "turquoise4",
];

/// Greechie rendering: atoms as nodes, each context a colored clique with
/// a label on its first edge.
pub fn family_to_dot(family: &ContextFamily) -> String {
    let mut out = String::from("graph greechie {\n  node [shape=circle];\n");
    for label in family.atom_labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for (ci, ctx) in family.contexts().iter().enumerate() {
        let color = CONTEXT_COLORS[ci % CONTEXT_COLORS.len()];
        let mut first = true;
        for (i, &a) in ctx.iter().enumerate() {
            for &b in &ctx[i + 1..] {
                let label_attr = if first {
                    first = false;
                    format!(", label=\"C{}\"", ci + 1)
                } else {
                    String::new()
                };
                out.push_str(&format!(
                    "  {} -- {} [color={color}{label_attr}];\n",
                    quote(&family.atom_labels()[a]),
                    quote(&family.atom_labels()[b])
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
