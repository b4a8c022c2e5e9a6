use super::{AxiomError, Checker};
use crate::model::{MulTable, StructureTable};
use crate::report::{CheckReport, WitnessKind};

impl Checker {
    /// Total multiplication, a single two-sided identity, Latin rows and columns.
    pub fn loop_(&self, g: &StructureTable) -> CheckReport {
        let m = match self.functional(g) {
            Ok(m) => m,
            Err(r) => return r,
        };
        let mut report = CheckReport::new();
        self.single_valued(g, &mut report);
        self.totality(g, m, &mut report);
        self.identity(g, m, true, &mut report);
        self.latin(g, m, true, &mut report);
        self.latin(g, m, false, &mut report);
        report
    }

    /// Total multiplication, Latin rows, and a right identity `xe = x`.
    pub fn left_loop(&self, g: &StructureTable) -> CheckReport {
        let m = match self.functional(g) {
            Ok(m) => m,
            Err(r) => return r,
        };
        let mut report = CheckReport::new();
        self.single_valued(g, &mut report);
        self.totality(g, m, &mut report);
        self.identity(g, m, false, &mut report);
        self.latin(g, m, true, &mut report);
        report
    }

    pub fn quasigroup(&self, g: &StructureTable) -> CheckReport {
        let m = match self.functional(g) {
            Ok(m) => m,
            Err(r) => return r,
        };
        let mut report = CheckReport::new();
        self.single_valued(g, &mut report);
        self.totality(g, m, &mut report);
        self.latin(g, m, true, &mut report);
        self.latin(g, m, false, &mut report);
        report
    }

    /// A loop with `a⁻¹(ab) = (ba)a⁻¹ = b`, plus the derived identities.
    pub fn inverse_loop(&self, g: &StructureTable) -> Result<CheckReport, AxiomError> {
        let inv = g.inv().ok_or(AxiomError::MissingInversion("inverse-loop"))?;
        let mut report = self.loop_(g);
        if let Ok(m) = g.mul_table() {
            self.left_cancellation(g, m, inv, &mut report);
            self.right_cancellation(g, m, inv, &mut report);
            self.inverse_identity_flags(g, m, inv, &mut report);
        }
        Ok(report)
    }

    fn totality(&self, g: &StructureTable, m: MulTable<'_>, report: &mut CheckReport) {
        let mut sink = self.sink("totality");
        'outer: for a in g.elements() {
            for b in g.elements() {
                if !m.defined(a, b) {
                    sink.push(WitnessKind::Missing, vec![a, b], "product undefined");
                    if sink.is_full() {
                        break 'outer;
                    }
                }
            }
        }
        sink.finish(report);
    }

    /// `two_sided`: `ex = xe = x`; otherwise only `xe = x`. Either way the unit set
    /// must consist of exactly one element.
    fn identity(&self, g: &StructureTable, m: MulTable<'_>, two_sided: bool, report: &mut CheckReport) {
        let mut sink = self.sink(if two_sided { "identity" } else { "right-identity" });
        if g.units().len() != 1 {
            sink.push(WitnessKind::OutOfRange, g.units().to_vec(), "unit set must have exactly one element");
        } else {
            let e = g.units()[0];
            for x in g.elements() {
                if m.get(x, e) != Some(x) {
                    sink.push(WitnessKind::Unequal, vec![x], "xe != x");
                }
                if two_sided && m.get(e, x) != Some(x) {
                    sink.push(WitnessKind::Unequal, vec![x], "ex != x");
                }
            }
        }
        sink.finish(report);
    }

    /// Rows (left translations) or columns (right translations) are permutations
    /// of the whole carrier. Undefined cells are left to `totality`.
    fn latin(&self, g: &StructureTable, m: MulTable<'_>, rows: bool, report: &mut CheckReport) {
        let n = g.n();
        let mut sink = self.sink(if rows { "latin-rows" } else { "latin-columns" });
        let mut seen = vec![usize::MAX; n];
        for a in g.elements() {
            seen.fill(usize::MAX);
            for b in g.elements() {
                let k = if rows { m.get(a, b) } else { m.get(b, a) };
                if let Some(k) = k {
                    if seen[k.index()] != usize::MAX {
                        sink.push(
                            WitnessKind::NotInjective,
                            vec![a, crate::ElementId::new(seen[k.index()]), b],
                            if rows { "value repeated in row" } else { "value repeated in column" },
                        );
                    } else {
                        seen[k.index()] = b.index();
                    }
                }
            }
            for k in g.elements() {
                if seen[k.index()] == usize::MAX {
                    sink.push(
                        WitnessKind::NotSurjective,
                        vec![a, k],
                        if rows { "value missing from row" } else { "value missing from column" },
                    );
                }
            }
        }
        sink.finish(report);
    }
}
