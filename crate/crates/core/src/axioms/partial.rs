use rayon::prelude::*;

use super::Checker;
use crate::model::{ElementId, MulTable, StructureTable};
use crate::report::{CheckReport, WitnessKind};

type RawWitness = (WitnessKind, Vec<ElementId>, &'static str);

impl Checker {
    /// `G₂ = {(g,h) | β(g) = α(h)}`.
    pub(crate) fn composability(&self, g: &StructureTable, m: MulTable<'_>, report: &mut CheckReport) {
        let mut sink = self.sink("composability");
        for a in g.elements() {
            for b in g.elements() {
                let matching = g.beta(a) == g.alpha(b);
                match (matching, m.defined(a, b)) {
                    (true, false) => sink.push(
                        WitnessKind::Missing,
                        vec![a, b],
                        "beta(g) = alpha(h) but gh is undefined",
                    ),
                    (false, true) => sink.push(
                        WitnessKind::OutOfRange,
                        vec![a, b],
                        "gh is defined but beta(g) != alpha(h)",
                    ),
                    _ => {}
                }
            }
        }
        sink.finish(report);
    }

    /// `α(gh) = α(g)` and `β(gh) = β(h)` on every composable pair.
    pub(crate) fn anchor(&self, g: &StructureTable, m: MulTable<'_>, report: &mut CheckReport) {
        let mut source = self.sink("anchor-source");
        let mut target = self.sink("anchor-target");
        for a in g.elements() {
            for b in g.elements() {
                if let Some(k) = m.get(a, b) {
                    if g.alpha(k) != g.alpha(a) {
                        source.push(WitnessKind::Unequal, vec![a, b], "alpha(gh) != alpha(g)");
                    }
                    if g.beta(k) != g.beta(b) {
                        target.push(WitnessKind::Unequal, vec![a, b], "beta(gh) != beta(h)");
                    }
                }
            }
        }
        source.finish(report);
        target.finish(report);
    }

    /// Conditional associativity `(xy)z = x(yz)`: either side defined implies
    /// the other is defined and equal. With `units_only`, only triples where
    /// at least one of `x, y, z` is a unit are scanned.
    ///
    /// The scan is split over `x` across worker threads; witnesses come back
    /// in lexicographic order regardless of scheduling.
    pub(crate) fn associativity_scan(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        units_only: bool,
        report: &mut CheckReport,
    ) {
        let n = g.n();
        let cap = self.witness_cap.max(1);
        let per_x: Vec<(bool, Vec<RawWitness>)> = (0..n)
            .into_par_iter()
            .map(|xi| {
                let x = ElementId::new(xi);
                let mut found = false;
                let mut out = Vec::new();
                for y in g.elements() {
                    let xy = m.get(x, y);
                    for z in g.elements() {
                        if units_only && !(g.is_unit(x) || g.is_unit(y) || g.is_unit(z)) {
                            continue;
                        }
                        let lhs = xy.and_then(|xy| m.get(xy, z));
                        let rhs = m.get(y, z).and_then(|yz| m.get(x, yz));
                        let bad = match (lhs, rhs) {
                            (Some(_), None) => Some((WitnessKind::LeftOnly, "(xy)z defined, x(yz) not")),
                            (None, Some(_)) => Some((WitnessKind::RightOnly, "x(yz) defined, (xy)z not")),
                            (Some(l), Some(r)) if l != r => Some((WitnessKind::Unequal, "(xy)z != x(yz)")),
                            _ => None,
                        };
                        if let Some((kind, detail)) = bad {
                            found = true;
                            if out.len() < cap {
                                out.push((kind, vec![x, y, z], detail));
                            }
                        }
                    }
                }
                (found, out)
            })
            .collect();
        let mut sink = self.sink(if units_only { "unities-associativity" } else { "associativity" });
        for (found, ws) in per_x {
            debug_assert_eq!(found, !ws.is_empty());
            for (kind, els, detail) in ws {
                sink.push(kind, els, detail);
            }
        }
        sink.finish(report);
    }

    /// Left: `l_g` is a bijection `F^α(β(g)) → F^α(α(g))`.
    /// Right: `r_g` is a bijection `F^β(α(g)) → F^β(β(g))`.
    pub(crate) fn fiber_bijection(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        left: bool,
        report: &mut CheckReport,
    ) {
        let n = g.n();
        let (axiom, fiber_map) = if left {
            ("left-fiber-bijection", g.alpha_map())
        } else {
            ("right-fiber-bijection", g.beta_map())
        };
        let mut fibers: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        for x in g.elements() {
            fibers[fiber_map[x.index()].index()].push(x);
        }
        let mut sink = self.sink(axiom);
        let mut hit = vec![usize::MAX; n];
        for a in g.elements() {
            let (from, to) = if left {
                (g.beta(a), g.alpha(a))
            } else {
                (g.alpha(a), g.beta(a))
            };
            hit.fill(usize::MAX);
            for &b in &fibers[from.index()] {
                let k = if left { m.get(a, b) } else { m.get(b, a) };
                let Some(k) = k else {
                    sink.push(WitnessKind::Missing, vec![a, b], "translation undefined on its source fiber");
                    continue;
                };
                if fiber_map[k.index()] != to {
                    sink.push(WitnessKind::OutOfRange, vec![a, b], "translation leaves its target fiber");
                    continue;
                }
                if hit[k.index()] != usize::MAX {
                    sink.push(
                        WitnessKind::NotInjective,
                        vec![a, ElementId::new(hit[k.index()]), b],
                        "two fiber elements translate to the same element",
                    );
                } else {
                    hit[k.index()] = b.index();
                }
            }
            for &k in &fibers[to.index()] {
                if hit[k.index()] == usize::MAX {
                    sink.push(WitnessKind::NotSurjective, vec![a, k], "target fiber element not reached");
                }
            }
        }
        sink.finish(report);
    }

    /// `g g⁻¹ = α(g)` and `g⁻¹ g = β(g)`.
    pub(crate) fn inverse_laws(
        &self,
        g: &StructureTable,
        m: MulTable<'_>,
        inv: &[ElementId],
        report: &mut CheckReport,
    ) {
        let mut source = self.sink("inverse-law-source");
        let mut target = self.sink("inverse-law-target");
        for a in g.elements() {
            let ai = inv[a.index()];
            match m.get(a, ai) {
                None => source.push(WitnessKind::Missing, vec![a], "g g^-1 undefined"),
                Some(k) if k != g.alpha(a) => source.push(WitnessKind::Unequal, vec![a], "g g^-1 != alpha(g)"),
                _ => {}
            }
            match m.get(ai, a) {
                None => target.push(WitnessKind::Missing, vec![a], "g^-1 g undefined"),
                Some(k) if k != g.beta(a) => target.push(WitnessKind::Unequal, vec![a], "g^-1 g != beta(g)"),
                _ => {}
            }
        }
        source.finish(report);
        target.finish(report);
    }
}
