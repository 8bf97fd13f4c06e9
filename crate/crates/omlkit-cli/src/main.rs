//! `omlkit` — orthomodular lattice toolkit CLI.
//!
//! Inputs are fixture files (`.lat`, `.greechie`, `.rays`) or catalog
//! expressions (`mo2`, `2^3`, `o6`, products like `2^1xmo2`). Exit codes:
//! 0 success/SAT/holds, 1 falsified/UNSAT, 2 input error.

use clap::{Parser, Subcommand};
use omlkit::blocks::{enumerate_blocks, find_global_valuation_over, SearchOutcome};
use omlkit::family::{
    find_global_valuation_on_family, from_rays, parity_certificate, ContextFamily, FamilyOutcome,
    RaySet,
};
use omlkit::io::{
    family_to_dot, lattice_to_dot, parse_greechie, parse_lattice, parse_rays, render_greechie,
};
use omlkit::lattice::{catalog_by_name, ElementId, OrthoLattice};
use omlkit::modal::ModalFrame;
use omlkit::square::square_report;
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "omlkit",
    version,
    about = "Finite orthomodular lattices: axioms, centers, possibility operators,\nBoolean blocks, global valuations, Greechie pasting, square of opposition"
)]
struct Cli {
    /// Use the parallel scan paths where available (results are identical).
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the orthomodular lattice axioms, one verdict per law.
    Check { input: String },
    /// Compute the center with both algorithms and cross-check them.
    Center { input: String },
    /// Print ◇p and ¬◇¬p for an element.
    Diamond { input: String, element: String },
    /// List the maximal Boolean blocks.
    Blocks { input: String },
    /// Search for a global valuation (lattice or Greechie family input).
    Global { input: String },
    /// Modal Kochen-Specker verdict as JSON.
    Mks { input: String },
    /// Square-of-opposition report: JSON plus a text diagram.
    Square {
        input: String,
        element: String,
        /// Block index in canonical order (default: first block containing
        /// the element).
        #[arg(long)]
        block: Option<usize>,
        /// Emit only the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Build the orthogonality contexts of a ray file (Greechie document
    /// on standard output).
    FromRays { rayfile: String },
    /// DOT export: Hasse diagram for lattices, clique diagram for
    /// families (ray files are converted first).
    ExportDot { input: String },
}

struct InputError(String);

impl<T: std::fmt::Display> From<T> for InputError {
    fn from(e: T) -> Self {
        InputError(e.to_string())
    }
}

enum Input {
    Lattice(OrthoLattice),
    Family(ContextFamily),
    Rays(RaySet),
}

fn load_input(spec: &str) -> Result<Input, InputError> {
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| InputError(format!("reading {spec}: {e}")))?;
        return match path.extension().and_then(|e| e.to_str()) {
            Some("lat") => Ok(Input::Lattice(
                parse_lattice(&text).map_err(|e| InputError(format!("{spec}: {e}")))?,
            )),
            Some("greechie") => Ok(Input::Family(
                parse_greechie(&text).map_err(|e| InputError(format!("{spec}: {e}")))?,
            )),
            Some("rays") => Ok(Input::Rays(
                parse_rays(&text).map_err(|e| InputError(format!("{spec}: {e}")))?,
            )),
            _ => Err(InputError(format!(
                "{spec}: unknown extension (expected .lat, .greechie or .rays)"
            ))),
        };
    }
    catalog_by_name(spec).map(Input::Lattice).map_err(|e| {
        InputError(format!(
            "`{spec}` is neither a file nor a catalog name: {e}"
        ))
    })
}

fn require_lattice(input: Input, spec: &str) -> Result<OrthoLattice, InputError> {
    match input {
        Input::Lattice(l) => Ok(l),
        _ => Err(InputError(format!("{spec}: expected a lattice input"))),
    }
}

/// Commands whose contracts assume an orthomodular lattice verify it up
/// front; a failing input is an input error, not a falsified property.
fn require_orthomodular(l: OrthoLattice, parallel: bool) -> Result<OrthoLattice, InputError> {
    let report = verify(&l, parallel);
    if report.all_pass() {
        Ok(l)
    } else {
        Err(InputError(format!(
            "input is not an orthomodular lattice:\n{}",
            report.render(&l).trim_end()
        )))
    }
}

fn verify(l: &OrthoLattice, parallel: bool) -> omlkit::AxiomReport {
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return l.verify_axioms_parallel();
        }
    }
    let _ = parallel;
    l.verify_axioms_sequential()
}

fn lookup_element(l: &OrthoLattice, label: &str) -> Result<ElementId, InputError> {
    l.element_by_label(label)
        .or_else(|| l.element_by_label(&label.replace('~', "¬")))
        .ok_or_else(|| InputError(format!("no element labeled `{label}`")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, InputError> {
    let parallel = cli.parallel;
    match cli.command {
        Command::Check { input } => {
            let l = require_lattice(load_input(&input)?, &input)?;
            let report = verify(&l, parallel);
            print!("{}", report.render(&l));
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Center { input } => {
            let l = require_orthomodular(require_lattice(load_input(&input)?, &input)?, parallel)?;
            let (by_definition, by_criterion) = centers(&l, parallel);
            let labels: Vec<&str> = by_criterion.members().iter().map(|&z| l.label(z)).collect();
            println!("{}", labels.join(" "));
            if by_definition.members() != by_criterion.members() {
                eprintln!("error: center algorithms disagree");
                return Ok(1);
            }
            Ok(0)
        }
        Command::Diamond { input, element } => {
            let l = require_orthomodular(require_lattice(load_input(&input)?, &input)?, parallel)?;
            let p = lookup_element(&l, &element)?;
            let frame = ModalFrame::new(&l);
            println!("◇{} = {}", l.label(p), l.label(frame.diamond(p)));
            println!("¬◇¬{} = {}", l.label(p), l.label(frame.necessity(p)));
            Ok(0)
        }
        Command::Blocks { input } => {
            let l = require_orthomodular(require_lattice(load_input(&input)?, &input)?, parallel)?;
            for (i, block) in enumerate_blocks(&l).iter().enumerate() {
                let members: Vec<&str> = block.members().iter().map(|&x| l.label(x)).collect();
                println!("block {}: {{{}}}", i, members.join(", "));
            }
            Ok(0)
        }
        Command::Global { input } => match load_input(&input)? {
            Input::Lattice(l) => {
                let l = require_orthomodular(l, parallel)?;
                let blocks = enumerate_blocks(&l);
                match find_global_valuation_over(&l, &blocks) {
                    SearchOutcome::Sat(gv) => {
                        println!("SAT");
                        for (i, v) in gv.per_block().iter().enumerate() {
                            println!("block {}: true atom {}", i, l.label(v.true_atom()));
                        }
                        Ok(0)
                    }
                    SearchOutcome::Unsat(stats) => {
                        println!("UNSAT");
                        println!(
                            "nodes explored: {}, conflicts: {}",
                            stats.nodes_explored, stats.conflicts
                        );
                        Ok(1)
                    }
                }
            }
            Input::Family(family) => match find_global_valuation_on_family(&family) {
                FamilyOutcome::Sat(assign) => {
                    println!("SAT");
                    let trues: Vec<&str> = assign
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v)
                        .map(|(a, _)| family.atom_labels()[a].as_str())
                        .collect();
                    println!("true atoms: {}", trues.join(" "));
                    Ok(0)
                }
                FamilyOutcome::Unsat(stats) => {
                    println!("UNSAT");
                    println!(
                        "nodes explored: {}, conflicts: {}",
                        stats.nodes_explored, stats.conflicts
                    );
                    if let Some(cert) = parity_certificate(&family) {
                        println!(
                            "parity certificate: every atom lies in exactly 2 contexts and {} contexts is odd",
                            cert.context_count
                        );
                    }
                    Ok(1)
                }
            },
            Input::Rays(_) => Err(InputError(format!(
                "{input}: ray sets are not searched directly; convert with `omlkit from-rays` first"
            ))),
        },
        Command::Mks { input } => {
            let l = require_orthomodular(require_lattice(load_input(&input)?, &input)?, parallel)?;
            let verdict = omlkit::mks_check(&l);
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict).expect("serializable")
            );
            Ok(if verdict.biconditional_holds { 0 } else { 1 })
        }
        Command::Square {
            input,
            element,
            block,
            json,
        } => {
            let l = require_orthomodular(require_lattice(load_input(&input)?, &input)?, parallel)?;
            let p = lookup_element(&l, &element)?;
            let blocks = enumerate_blocks(&l);
            let chosen = match block {
                Some(i) => blocks.get(i).ok_or_else(|| {
                    InputError(format!(
                        "block index {i} out of range (0..{})",
                        blocks.len()
                    ))
                })?,
                None => blocks
                    .iter()
                    .find(|b| b.contains(p))
                    .expect("every element lies in some maximal block"),
            };
            let frame = ModalFrame::new(&l);
            let report = square_report(&frame, p, chosen).map_err(|e| InputError(e.to_string()))?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
            if !json {
                println!();
                print!("{}", report.render_text());
            }
            Ok(if report.all_hold() { 0 } else { 1 })
        }
        Command::FromRays { rayfile } => {
            let rays = match load_input(&rayfile)? {
                Input::Rays(r) => r,
                _ => return Err(InputError(format!("{rayfile}: expected a .rays file"))),
            };
            let family = from_rays(&rays);
            for &orphan in &family.orphan_atoms() {
                eprintln!(
                    "warning: atom `{}` lies in no full-dimension context",
                    family.atom_labels()[orphan]
                );
            }
            print!("{}", render_greechie(&family));
            Ok(0)
        }
        Command::ExportDot { input } => {
            match load_input(&input)? {
                Input::Lattice(l) => print!("{}", lattice_to_dot(&l)),
                Input::Family(f) => print!("{}", family_to_dot(&f)),
                Input::Rays(r) => print!("{}", family_to_dot(&from_rays(&r))),
            }
            Ok(0)
        }
    }
}

fn centers(l: &OrthoLattice, parallel: bool) -> (omlkit::CenterInfo, omlkit::CenterInfo) {
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return (
                omlkit::modal::center_parallel(l),
                omlkit::modal::center_fast_parallel(l),
            );
        }
    }
    let _ = parallel;
    (
        omlkit::modal::center_sequential(l),
        omlkit::modal::center_fast_sequential(l),
    )
}
