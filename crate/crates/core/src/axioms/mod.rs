//! Decision procedures for every structure class, each producing a
//! [`CheckReport`] with counterexample witnesses.
//!
//! Every class checker reports the flags of the classes it builds on, so a
//! report for `loopoid` also carries the `semiloopoid` flags. Checkers never
//! repair or mutate their input.

mod classify;
mod inverse;
mod loops;
mod morphism;
mod partial;

pub use classify::{check_class, classify};
pub use inverse::find_inversions;
pub use morphism::MorphismData;

use thiserror::Error;

use crate::model::{MulTable, StructureTable};
use crate::report::{CheckReport, ClassName, WitnessKind, WitnessSink};

pub const DEFAULT_WITNESS_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("the {0} check needs an inversion map that the structure does not carry")]
    MissingInversion(&'static str),
    #[error("morphism leaves its codomain: {0}")]
    RangeError(String),
}

/// Runs checkers with a configurable per-axiom witness cap.
#[derive(Debug, Clone, Copy)]
pub struct Checker {
    pub witness_cap: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Checker { witness_cap: DEFAULT_WITNESS_CAP }
    }
}

impl Checker {
    pub fn new(witness_cap: usize) -> Self {
        Checker { witness_cap: witness_cap.max(1) }
    }

    pub(crate) fn sink(&self, axiom: &'static str) -> WitnessSink {
        WitnessSink::new(axiom, self.witness_cap)
    }

    /// The multiplication view, or a report whose only flag is the failed
    /// `single-valued` axiom.
    pub(crate) fn functional<'a>(
        &self,
        g: &'a StructureTable,
    ) -> Result<MulTable<'a>, CheckReport> {
        g.mul_table().map_err(|_| {
            let mut r = CheckReport::new();
            self.single_valued(g, &mut r);
            r
        })
    }

    pub(crate) fn single_valued(&self, g: &StructureTable, report: &mut CheckReport) {
        let mut sink = self.sink("single-valued");
        for (a, b) in g.multi_valued_cells() {
            if sink.is_full() {
                break;
            }
            sink.push(WitnessKind::Unequal, vec![a, b], "pair has two distinct products");
        }
        sink.finish(report);
    }

    pub fn semiloopoid(&self, g: &StructureTable) -> CheckReport {
        self.semiloopoid_sides(g, true, true)
    }

    pub fn left_semiloopoid(&self, g: &StructureTable) -> CheckReport {
        self.semiloopoid_sides(g, true, false)
    }

    pub fn right_semiloopoid(&self, g: &StructureTable) -> CheckReport {
        self.semiloopoid_sides(g, false, true)
    }

    fn semiloopoid_sides(&self, g: &StructureTable, left: bool, right: bool) -> CheckReport {
        let mut report = CheckReport::new();
        self.units_axiom(g, &mut report);
        self.single_valued(g, &mut report);
        if let Ok(m) = g.mul_table() {
            if left {
                self.translation_injective(g, m, true, &mut report);
            }
            if right {
                self.translation_injective(g, m, false, &mut report);
            }
        }
        report
    }

    fn units_axiom(&self, g: &StructureTable, report: &mut CheckReport) {
        let mut sink = self.sink("units");
        for x in g.elements() {
            if !g.contains_triple((g.alpha(x), x, x)) {
                sink.push(WitnessKind::Missing, vec![x], "alpha(g) g = g is not in the relation");
            }
            if !g.contains_triple((x, g.beta(x), x)) {
                sink.push(WitnessKind::Missing, vec![x], "g beta(g) = g is not in the relation");
            }
        }
        sink.finish(report);
    }

    fn translation_injective(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        left: bool,
        report: &mut CheckReport,
    ) {
        let n = g.n();
        let mut sink = self.sink(if left { "left-injective" } else { "right-injective" });
        let mut seen = vec![usize::MAX; n];
        for a in g.elements() {
            seen.fill(usize::MAX);
            for b in g.elements() {
                let k = if left { m.get(a, b) } else { m.get(b, a) };
                if let Some(k) = k {
                    let prev = seen[k.index()];
                    if prev == usize::MAX {
                        seen[k.index()] = b.index();
                    } else {
                        let detail = if left {
                            "two right factors give the same product"
                        } else {
                            "two left factors give the same product"
                        };
                        sink.push(
                            WitnessKind::NotInjective,
                            vec![a, crate::ElementId::new(prev), b],
                            detail,
                        );
                    }
                }
            }
        }
        sink.finish(report);
    }

    pub fn unities_associativity(&self, g: &StructureTable) -> CheckReport {
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.associativity_scan(g, m, true, &mut report);
        }
        report
    }

    pub fn anchor_compatibility(&self, g: &StructureTable) -> CheckReport {
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.composability(g, m, &mut report);
            self.anchor(g, m, &mut report);
        }
        report
    }

    pub fn loopoid(&self, g: &StructureTable) -> CheckReport {
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.associativity_scan(g, m, true, &mut report);
            self.fiber_bijection(g, m, true, &mut report);
            self.fiber_bijection(g, m, false, &mut report);
        }
        report
    }

    pub fn left_loopoid(&self, g: &StructureTable) -> CheckReport {
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.composability(g, m, &mut report);
            self.fiber_bijection(g, m, true, &mut report);
        }
        report
    }

    pub fn right_loopoid(&self, g: &StructureTable) -> CheckReport {
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.composability(g, m, &mut report);
            self.fiber_bijection(g, m, false, &mut report);
        }
        report
    }

    /// Semiloopoid, anchor compatibility, full conditional associativity and
    /// the inverse laws `g g⁻¹ = α(g)`, `g⁻¹ g = β(g)`.
    pub fn groupoid(&self, g: &StructureTable) -> Result<CheckReport, AxiomError> {
        let inv = g.inv().ok_or(AxiomError::MissingInversion("groupoid"))?;
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.composability(g, m, &mut report);
            self.anchor(g, m, &mut report);
            self.associativity_scan(g, m, false, &mut report);
            self.inverse_laws(g, m, inv, &mut report);
        }
        Ok(report)
    }
}

pub fn check_semiloopoid(g: &StructureTable) -> CheckReport {
    Checker::default().semiloopoid(g)
}

pub fn check_left_semiloopoid(g: &StructureTable) -> CheckReport {
    Checker::default().left_semiloopoid(g)
}

pub fn check_right_semiloopoid(g: &StructureTable) -> CheckReport {
    Checker::default().right_semiloopoid(g)
}

pub fn check_unities_associativity(g: &StructureTable) -> CheckReport {
    Checker::default().unities_associativity(g)
}

pub fn check_anchor_compatibility(g: &StructureTable) -> CheckReport {
    Checker::default().anchor_compatibility(g)
}

pub fn check_loopoid(g: &StructureTable) -> CheckReport {
    Checker::default().loopoid(g)
}

pub fn check_left_loopoid(g: &StructureTable) -> CheckReport {
    Checker::default().left_loopoid(g)
}

pub fn check_right_loopoid(g: &StructureTable) -> CheckReport {
    Checker::default().right_loopoid(g)
}

pub fn check_groupoid(g: &StructureTable) -> Result<CheckReport, AxiomError> {
    Checker::default().groupoid(g)
}

pub fn check_inverse_semiloopoid(g: &StructureTable) -> Result<CheckReport, AxiomError> {
    Checker::default().inverse_semiloopoid(g)
}

pub fn check_left_inverse_semiloopoid(g: &StructureTable) -> Result<CheckReport, AxiomError> {
    Checker::default().left_inverse_semiloopoid(g)
}

pub fn check_right_inverse_semiloopoid(g: &StructureTable) -> Result<CheckReport, AxiomError> {
    Checker::default().right_inverse_semiloopoid(g)
}

pub fn verify_inverse_identities(g: &StructureTable) -> Result<CheckReport, AxiomError> {
    Checker::default().inverse_identities(g)
}

pub fn check_loop(g: &StructureTable) -> CheckReport {
    Checker::default().loop_(g)
}

pub fn check_left_loop(g: &StructureTable) -> CheckReport {
    Checker::default().left_loop(g)
}

pub fn check_quasigroup(g: &StructureTable) -> CheckReport {
    Checker::default().quasigroup(g)
}

pub fn check_inverse_loop(g: &StructureTable) -> Result<CheckReport, AxiomError> {
    Checker::default().inverse_loop(g)
}

pub fn check_morphism(
    g: &StructureTable,
    h: &StructureTable,
    f: &MorphismData,
) -> Result<CheckReport, AxiomError> {
    Checker::default().morphism(g, h, f)
}

/// Maps a class to the checker that decides it.
pub(crate) fn run_class(
    checker: &Checker,
    g: &StructureTable,
    class: ClassName,
) -> Result<CheckReport, AxiomError> {
    Ok(match class {
        ClassName::LeftSemiloopoid => checker.left_semiloopoid(g),
        ClassName::RightSemiloopoid => checker.right_semiloopoid(g),
        ClassName::Semiloopoid => checker.semiloopoid(g),
        ClassName::LeftInverseSemiloopoid => checker.left_inverse_semiloopoid(g)?,
        ClassName::RightInverseSemiloopoid => checker.right_inverse_semiloopoid(g)?,
        ClassName::InverseSemiloopoid => checker.inverse_semiloopoid(g)?,
        ClassName::UnitiesAssociative => checker.unities_associativity(g),
        ClassName::AnchorCompatible => checker.anchor_compatibility(g),
        ClassName::LeftLoopoid => checker.left_loopoid(g),
        ClassName::RightLoopoid => checker.right_loopoid(g),
        ClassName::Loopoid => checker.loopoid(g),
        ClassName::Groupoid => checker.groupoid(g)?,
        ClassName::Loop => checker.loop_(g),
        ClassName::LeftLoop => checker.left_loop(g),
        ClassName::InverseLoop => checker.inverse_loop(g)?,
        ClassName::Quasigroup => checker.quasigroup(g),
    })
}
