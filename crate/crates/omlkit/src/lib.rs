//! Finite orthomodular lattice toolkit.
//!
//! The crate models bounded lattices with an orthocomplement as dense
//! element-id tables, checks the orthomodular axioms exhaustively, and builds
//! the classical machinery on top: commutation triples and the center,
//! the possibility operator `◇` (smallest central element above a
//! proposition) and its dual, Boolean blocks with their two-valued
//! valuations, global-valuation and compatible-actualization search, ray-set
//! and Greechie-diagram context families with orthomodular pasting, and the
//! modal square of opposition evaluated over classically expanded contexts.
//!
//! Everything is exact: element tables are finite, ray orthogonality uses
//! rational arithmetic, and every search is deterministic (canonical
//! orderings throughout). With the default `parallel` feature the heavy
//! scans (axiom checks, center computation, square sweeps) run on rayon;
//! disabling the feature yields the identical sequential results.
//!
//! ```
//! use omlkit::{catalog_by_name, enumerate_blocks, square_report, ModalFrame};
//!
//! let lattice = catalog_by_name("mo2").unwrap();
//! assert!(lattice.verify_axioms().all_pass());
//!
//! // The atoms of MO2 are not central; their only classical consequence
//! // is the whole of the discourse.
//! let frame = ModalFrame::new(&lattice);
//! let p = lattice.element_by_label("a1").unwrap();
//! assert_eq!(frame.diamond(p), lattice.top());
//! assert_eq!(frame.center().len(), 2);
//!
//! // The square of opposition holds for p in its block, without collapse.
//! let blocks = enumerate_blocks(&lattice);
//! let block = blocks.iter().find(|b| b.contains(p)).unwrap();
//! let report = square_report(&frame, p, block).unwrap();
//! assert!(report.all_hold() && !report.collapsed);
//! ```

pub mod blocks;
pub(crate) mod exec;
pub mod family;
pub mod io;
pub mod lattice;
pub mod modal;
pub mod square;

pub use blocks::{
    classical_correspondence_check, enumerate_blocks, enumerate_global_valuations,
    enumerate_valuations, find_compatible_actualization, find_global_valuation,
    find_global_valuation_over, mks_check, ActualizationProblem, BooleanBlock, GlobalValuation,
    MksVerdict, SearchOutcome, UnsatStats, Valuation,
};
pub use family::{
    enumerate_family_assignments, find_global_valuation_on_family, from_rays, parity_certificate,
    paste_to_lattice, ContextFamily, FamilyOutcome, NotPastable, ParityCertificate, RaySet,
};
pub use lattice::{
    catalog, catalog_by_name, AxiomReport, ElementId, Law, OrthoLattice, StructuralError,
    Subalgebra,
};
pub use modal::{center, center_fast, CenterInfo, ExpandedContext, ModalFrame};
pub use square::{square_report, sweep_squares, RelationVerdict, SquareReport};
