use std::collections::BTreeMap;

use super::{AxiomError, Checker};
use crate::model::{ElementId, StructureTable};
use crate::report::{CheckReport, WitnessKind};

/// A candidate morphism: an element map `Φ` and a base map `φ` on units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismData {
    pub element_map: Vec<ElementId>,
    pub base_map: BTreeMap<ElementId, ElementId>,
}

impl MorphismData {
    /// Uses the restriction of `element_map` to the units of `source` as base map.
    pub fn from_element_map(source: &StructureTable, element_map: Vec<ElementId>) -> Self {
        let base_map = source.units().iter().map(|&u| (u, element_map[u.index()])).collect();
        MorphismData { element_map, base_map }
    }

    pub fn identity(g: &StructureTable) -> Self {
        Self::from_element_map(g, g.elements().collect())
    }

    /// The inverse of a bijective element map.
    pub fn inverse(&self, target: &StructureTable) -> Option<MorphismData> {
        let n = self.element_map.len();
        let mut back = vec![None; n];
        for (i, &img) in self.element_map.iter().enumerate() {
            let slot = back.get_mut(img.index())?;
            if slot.is_some() {
                return None;
            }
            *slot = Some(ElementId::new(i));
        }
        let back: Vec<ElementId> = back.into_iter().collect::<Option<_>>()?;
        Some(MorphismData::from_element_map(target, back))
    }
}

impl Checker {
    pub fn morphism(
        &self,
        g: &StructureTable,
        h: &StructureTable,
        f: &MorphismData,
    ) -> Result<CheckReport, AxiomError> {
        if f.element_map.len() != g.n() {
            return Err(AxiomError::RangeError(format!(
                "element map has {} entries for a carrier of size {}",
                f.element_map.len(),
                g.n()
            )));
        }
        if let Some(bad) = f.element_map.iter().find(|x| x.index() >= h.n()) {
            return Err(AxiomError::RangeError(format!("element map hits {bad}, codomain has {} elements", h.n())));
        }
        for &u in g.units() {
            match f.base_map.get(&u) {
                None => return Err(AxiomError::RangeError(format!("base map undefined on unit {u}"))),
                Some(v) if v.index() >= h.n() || !h.is_unit(*v) => {
                    return Err(AxiomError::RangeError(format!("base map sends unit {u} to non-unit {v}")))
                }
                _ => {}
            }
        }
        if let Some(k) = f.base_map.keys().find(|k| k.index() >= g.n() || !g.is_unit(**k)) {
            return Err(AxiomError::RangeError(format!("base map defined on non-unit {k}")));
        }

        let phi = |x: ElementId| f.element_map[x.index()];
        let base = |u: ElementId| f.base_map[&u];
        let mut report = CheckReport::new();

        let mut restriction = self.sink("restriction");
        for &u in g.units() {
            if phi(u) != base(u) {
                restriction.push(WitnessKind::Unequal, vec![u], "Phi(u) != phi(u) on a unit");
            }
        }
        restriction.finish(&mut report);

        let mut source = self.sink("source-equivariance");
        let mut target = self.sink("target-equivariance");
        for x in g.elements() {
            if h.alpha(phi(x)) != base(g.alpha(x)) {
                source.push(WitnessKind::Unequal, vec![x], "alpha(Phi(g)) != phi(alpha(g))");
            }
            if h.beta(phi(x)) != base(g.beta(x)) {
                target.push(WitnessKind::Unequal, vec![x], "beta(Phi(g)) != phi(beta(g))");
            }
        }
        source.finish(&mut report);
        target.finish(&mut report);

        let mut mult = self.sink("multiplicativity");
        for &(a, b, c) in g.triples() {
            if !h.contains_triple((phi(a), phi(b), phi(c))) {
                mult.push(WitnessKind::Missing, vec![a, b, c], "image triple not in the codomain relation");
            }
        }
        mult.finish(&mut report);
        Ok(report)
    }
}
