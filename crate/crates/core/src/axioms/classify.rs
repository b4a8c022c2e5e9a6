use std::collections::BTreeMap;

use super::{run_class, AxiomError, Checker};
use crate::model::StructureTable;
use crate::report::{CheckReport, ClassName};

/// Runs the checker deciding `class`.
pub fn check_class(g: &StructureTable, class: ClassName) -> Result<CheckReport, AxiomError> {
    run_class(&Checker::default(), g, class)
}

/// Membership in every class. Classes whose checker needs an inversion map the
/// structure does not carry are reported as `false`.
pub fn classify(g: &StructureTable) -> BTreeMap<ClassName, bool> {
    let checker = Checker::new(1);
    let flags: BTreeMap<ClassName, bool> = ClassName::ALL
        .into_iter()
        .map(|c| (c, run_class(&checker, g, c).map(|r| r.passed()).unwrap_or(false)))
        .collect();
    debug_assert!(implications_hold(&flags), "class implication lattice violated: {flags:?}");
    flags
}

fn implications_hold(f: &BTreeMap<ClassName, bool>) -> bool {
    use ClassName::*;
    let imp = |a: ClassName, b: ClassName| !f[&a] || f[&b];
    imp(Groupoid, Loopoid)
        && imp(Loopoid, LeftLoopoid)
        && imp(Loopoid, RightLoopoid)
        && imp(LeftLoopoid, Semiloopoid)
        && imp(RightLoopoid, Semiloopoid)
        && imp(Semiloopoid, LeftSemiloopoid)
        && imp(Semiloopoid, RightSemiloopoid)
        && imp(InverseSemiloopoid, Semiloopoid)
        && imp(Loop, LeftLoop)
        && imp(Loop, Quasigroup)
        && imp(InverseLoop, Loop)
}
