use super::{AxiomError, Checker};
use crate::model::{ElementId, MulTable, StructureTable};
use crate::report::{CheckReport, WitnessKind};

impl Checker {
    /// Two-sided inversion: `g⁻¹(gh) = h` and `(ug)g⁻¹ = u` whenever `gh`, `ug` are defined.
    pub fn inverse_semiloopoid(&self, g: &StructureTable) -> Result<CheckReport, AxiomError> {
        let inv = g.inv().ok_or(AxiomError::MissingInversion("inverse-semiloopoid"))?;
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.left_cancellation(g, m, inv, &mut report);
            self.right_cancellation(g, m, inv, &mut report);
        }
        Ok(report)
    }

    /// `ι_l(g)(gh) = h` for the left inversion map.
    pub fn left_inverse_semiloopoid(&self, g: &StructureTable) -> Result<CheckReport, AxiomError> {
        let linv = g.linv().ok_or(AxiomError::MissingInversion("left-inverse-semiloopoid"))?;
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.left_cancellation(g, m, linv, &mut report);
        }
        Ok(report)
    }

    /// `(ug)ι_r(g) = u` for the right inversion map.
    pub fn right_inverse_semiloopoid(&self, g: &StructureTable) -> Result<CheckReport, AxiomError> {
        let rinv = g.rinv().ok_or(AxiomError::MissingInversion("right-inverse-semiloopoid"))?;
        let mut report = self.semiloopoid(g);
        if let Ok(m) = g.mul_table() {
            self.right_cancellation(g, m, rinv, &mut report);
        }
        Ok(report)
    }

    pub(crate) fn left_cancellation(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        inv: &[ElementId],
        report: &mut CheckReport,
    ) {
        let mut sink = self.sink("left-cancellation");
        for a in g.elements() {
            let ai = inv[a.index()];
            for b in g.elements() {
                if let Some(ab) = m.get(a, b) {
                    match m.get(ai, ab) {
                        None => sink.push(WitnessKind::Missing, vec![a, b], "g^-1 (gh) undefined"),
                        Some(k) if k != b => sink.push(WitnessKind::Unequal, vec![a, b], "g^-1 (gh) != h"),
                        _ => {}
                    }
                }
            }
        }
        sink.finish(report);
    }

    pub(crate) fn right_cancellation(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        inv: &[ElementId],
        report: &mut CheckReport,
    ) {
        let mut sink = self.sink("right-cancellation");
        for u in g.elements() {
            for a in g.elements() {
                if let Some(ua) = m.get(u, a) {
                    match m.get(ua, inv[a.index()]) {
                        None => sink.push(WitnessKind::Missing, vec![u, a], "(ug) g^-1 undefined"),
                        Some(k) if k != u => sink.push(WitnessKind::Unequal, vec![u, a], "(ug) g^-1 != u"),
                        _ => {}
                    }
                }
            }
        }
        sink.finish(report);
    }

    /// The consequences of two-sided inversion:
    /// `g⁻¹g = β(g) = α(g⁻¹)`, `gg⁻¹ = α(g) = β(g⁻¹)`, `(g⁻¹)⁻¹ = g`, and
    /// `(gh)⁻¹ = h⁻¹g⁻¹` with both sides defined together.
    ///
    /// Only the identities are reported; on an inverse semiloopoid they always hold.
    pub fn inverse_identities(&self, g: &StructureTable) -> Result<CheckReport, AxiomError> {
        let inv = g.inv().ok_or(AxiomError::MissingInversion("inverse-identities"))?;
        let m = match self.functional(g) {
            Ok(m) => m,
            Err(r) => return Ok(r),
        };
        let mut report = CheckReport::new();
        self.inverse_identity_flags(g, m, inv, &mut report);
        Ok(report)
    }

    pub(crate) fn inverse_identity_flags(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        inv: &[ElementId],
        report: &mut CheckReport,
    ) {
        let mut target = self.sink("inverse-target");
        let mut source = self.sink("inverse-source");
        let mut involution = self.sink("inverse-involution");
        let mut anti = self.sink("inverse-anti-multiplicative");
        for a in g.elements() {
            let ai = inv[a.index()];
            match m.get(ai, a) {
                None => target.push(WitnessKind::Missing, vec![a], "g^-1 g undefined"),
                Some(k) if k != g.beta(a) => target.push(WitnessKind::Unequal, vec![a], "g^-1 g != beta(g)"),
                _ => {}
            }
            if g.alpha(ai) != g.beta(a) {
                target.push(WitnessKind::Unequal, vec![a], "alpha(g^-1) != beta(g)");
            }
            match m.get(a, ai) {
                None => source.push(WitnessKind::Missing, vec![a], "g g^-1 undefined"),
                Some(k) if k != g.alpha(a) => source.push(WitnessKind::Unequal, vec![a], "g g^-1 != alpha(g)"),
                _ => {}
            }
            if g.beta(ai) != g.alpha(a) {
                source.push(WitnessKind::Unequal, vec![a], "beta(g^-1) != alpha(g)");
            }
            if inv[ai.index()] != a {
                involution.push(WitnessKind::Unequal, vec![a], "(g^-1)^-1 != g");
            }
            for b in g.elements() {
                let bi = inv[b.index()];
                let lhs = m.get(a, b).map(|ab| inv[ab.index()]);
                let rhs = m.get(bi, ai);
                match (lhs, rhs) {
                    (Some(_), None) => anti.push(WitnessKind::LeftOnly, vec![a, b], "(gh)^-1 defined, h^-1 g^-1 not"),
                    (None, Some(_)) => anti.push(WitnessKind::RightOnly, vec![a, b], "h^-1 g^-1 defined, (gh)^-1 not"),
                    (Some(l), Some(r)) if l != r => {
                        anti.push(WitnessKind::Unequal, vec![a, b], "(gh)^-1 != h^-1 g^-1")
                    }
                    _ => {}
                }
            }
        }
        target.finish(report);
        source.finish(report);
        involution.finish(report);
        anti.finish(report);
    }
}

/// Every map `ι` under which a single-valued table is an inverse semiloopoid.
///
/// The two cancellation laws constrain `ι(g)` through row and column `g` only,
/// so candidates are computed per element and combined. Returns an empty list
/// when some element has no admissible inverse or the table is multi-valued.
pub fn find_inversions(g: &StructureTable) -> Vec<Vec<ElementId>> {
    let Ok(m) = g.mul_table() else {
        return Vec::new();
    };
    let candidates: Vec<Vec<ElementId>> = g
        .elements()
        .map(|a| {
            g.elements()
                .filter(|&c| {
                    g.elements().all(|b| match m.get(a, b) {
                        Some(ab) => m.get(c, ab) == Some(b),
                        None => true,
                    }) && g.elements().all(|u| match m.get(u, a) {
                        Some(ua) => m.get(ua, c) == Some(u),
                        None => true,
                    })
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = vec![Vec::with_capacity(g.n())];
    for cands in &candidates {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                cands.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}
