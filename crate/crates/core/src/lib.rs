//! Finite semiloopoids, loopoids, Brandt groupoids and loops.
//!
//! Structures are stored as a multiplication relation over a finite carrier
//! together with a unit subset and source/target projections. The crate
//! provides:
//!
//! - [`model`]: the table type and primitive queries (products, fibers,
//!   translations, inference of structure maps from the relation);
//! - [`axioms`]: decision procedures for each structure class, with
//!   counterexample witnesses;
//! - [`constructors`]: pair groupoids, trivial and extended semiloopoids,
//!   transversal loops in groups, loop × pair-groupoid products, the
//!   `ℤₙ` left loopoid built from an odd permutation, transversal reduction
//!   and isotropy loops;
//! - [`analysis`]: isomorphism testing, canonical forms and exhaustive
//!   enumeration of small structures;
//! - [`io`]: the `.lpd` text format.

pub mod analysis;
pub mod axioms;
pub mod constructors;
pub mod io;
pub mod model;
pub mod report;

pub use axioms::{AxiomError, Checker, MorphismData};
pub use model::{infer_structure, ElementId, ModelError, MulTable, StructureTable, TableParts, Triple};
pub use report::{CheckReport, ClassName, Witness, WitnessKind};
