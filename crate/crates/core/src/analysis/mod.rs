//! Isomorphism, canonical forms and exhaustive enumeration of small structures.

mod canon;
mod enumerate;
mod experiment;
mod iso;
mod refine;

pub use canon::{canonical_form, canonical_labeling, canonical_representative, CanonicalForm, DEFAULT_CANON_CAP};
pub use enumerate::{enumerate, EnumMode, EnumerationSpec, Limits, DEFAULT_NODE_BUDGET};
pub use experiment::{
    equivalence_experiment, equivalence_experiment_with, inverse_identity_experiment, inverse_identity_experiment_with,
    ExperimentSummary,
};
pub use iso::isomorphic;

use thiserror::Error;

use crate::model::{ElementId, StructureTable, TableParts};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("carrier size {n} exceeds the cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("node budget of {budget} exhausted; {} partial results", partial.len())]
    BudgetExceeded { budget: u64, partial: Vec<StructureTable> },
    #[error("invalid enumeration request: {0}")]
    InvalidSpec(String),
}

/// Renames every element `g` to `sigma[g]`; labels travel with their elements.
pub fn relabel(g: &StructureTable, sigma: &[ElementId]) -> StructureTable {
    let n = g.n();
    assert_eq!(sigma.len(), n, "relabeling must cover the carrier");
    let s = |x: ElementId| sigma[x.index()];
    let mut back = vec![ElementId::new(0); n];
    for x in g.elements() {
        back[s(x).index()] = x;
    }
    let permute_map = |m: &[ElementId]| -> Vec<ElementId> { back.iter().map(|&old| s(m[old.index()])).collect() };
    TableParts {
        n,
        labels: Some(back.iter().map(|&old| g.label(old).to_string()).collect()),
        units: g.units().iter().map(|&u| s(u)).collect(),
        alpha: permute_map(g.alpha_map()),
        beta: permute_map(g.beta_map()),
        triples: g.triples().iter().map(|&(a, b, c)| (s(a), s(b), s(c))).collect(),
        inv: g.inv().map(permute_map),
        linv: g.linv().map(permute_map),
        rinv: g.rinv().map(permute_map),
    }
    .build()
    .expect("relabeling preserves well-formedness")
}
