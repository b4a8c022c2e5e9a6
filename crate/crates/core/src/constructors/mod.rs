//! Builders for every structure family, plus transversal reduction and
//! isotropy loops.
//!
//! Carriers of constructed structures are ordered lexicographically on the
//! underlying tuples, so output is reproducible byte for byte.

mod baer;
mod basic;
mod group;
mod isotropy;
mod phi;
mod product;
mod transversal;

pub use baer::{baer_projection, baer_transversal_loop};
pub use basic::{
    extended_trivial_semiloopoid, loop_from_table, pair_groupoid, pair_groupoid_on, trivial_semiloopoid,
    TrivialSpec,
};
pub use group::GroupTable;
pub use isotropy::{anchor_morphism, isotropy_loop};
pub use phi::{phi_ambient_transversal, phi_left_loopoid, OddPermutation};
pub use product::product_loop_pair_groupoid;
pub use transversal::{check_transversal, transversal_reduce, TransversalData, TransversalSide};

use thiserror::Error;

use crate::model::{ElementId, ModelError};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid projection: {0}")]
    InvalidProjection(ModelError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("the given subset is not a subgroup")]
    NotASubgroup,
    #[error("not a left transversal: coset of {0} holds {1} representatives")]
    NotATransversal(ElementId, usize),
    #[error("the transversal does not contain the identity")]
    IdentityNotInS,
    #[error("not a loop")]
    NotALoop,
    #[error("modulus {0} is even")]
    EvenModulus(usize),
    #[error("permutation is not odd at {0}")]
    NotOdd(usize),
    #[error("table is not a permutation of 0..{0}")]
    NotBijective(usize),
    #[error("invalid transversal data: {0}")]
    InvalidTransversal(String),
    #[error("transversality violated")]
    TransversalityViolated(Box<CheckReport>),
    #[error("element {0} is not a unit")]
    NotAUnit(ElementId),
    #[error("structure is not a loopoid")]
    NotALoopoid(Box<CheckReport>),
    #[error(transparent)]
    Model(#[from] ModelError),
}
