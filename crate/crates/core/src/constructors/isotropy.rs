use super::{pair_groupoid_on, ConstructError};
use crate::axioms::{check_loopoid, MorphismData};
use crate::model::{ElementId, StructureTable, TableParts};

/// The isotropy loop `G_u = {g | α(g) = β(g) = u}` of a loopoid at unit `u`.
pub fn isotropy_loop(g: &StructureTable, u: ElementId) -> Result<StructureTable, ConstructError> {
    if u.index() >= g.n() || !g.is_unit(u) {
        return Err(ConstructError::NotAUnit(u));
    }
    let report = check_loopoid(g);
    if !report.passed() {
        return Err(ConstructError::NotALoopoid(Box::new(report)));
    }
    let members: Vec<ElementId> = g.elements().filter(|&x| g.alpha(x) == u && g.beta(x) == u).collect();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, x) in members.iter().enumerate() {
        pos[x.index()] = i;
    }
    let inside = |x: ElementId| pos[x.index()] != usize::MAX;
    let new = |x: ElementId| ElementId::new(pos[x.index()]);
    let triples = g
        .triples()
        .iter()
        .filter(|&&(a, b, c)| inside(a) && inside(b) && inside(c))
        .map(|&(a, b, c)| (new(a), new(b), new(c)))
        .collect();
    let restrict = |map: Option<&[ElementId]>| {
        map.filter(|m| members.iter().all(|&x| inside(m[x.index()])))
            .map(|m| members.iter().map(|&x| new(m[x.index()])).collect())
    };
    let k = members.len();
    Ok(TableParts {
        n: k,
        labels: Some(members.iter().map(|&x| g.label(x).to_string()).collect()),
        units: vec![new(u)],
        alpha: vec![new(u); k],
        beta: vec![new(u); k],
        triples,
        inv: restrict(g.inv()),
        linv: restrict(g.linv()),
        rinv: restrict(g.rinv()),
    }
    .build()?)
}

/// The anchor `g ↦ (α(g), β(g))` into the pair groupoid over the units of `g`,
/// together with that pair groupoid.
pub fn anchor_morphism(g: &StructureTable) -> (StructureTable, MorphismData) {
    let units = g.units();
    let k = units.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, u) in units.iter().enumerate() {
        pos[u.index()] = i;
    }
    let labels: Vec<String> = units.iter().map(|&u| g.label(u).to_string()).collect();
    let target = pair_groupoid_on(&labels);
    let element_map = g
        .elements()
        .map(|x| ElementId::new(pos[g.alpha(x).index()] * k + pos[g.beta(x).index()]))
        .collect();
    let base_map = units.iter().map(|&u| (u, ElementId::new(pos[u.index()] * (k + 1)))).collect();
    (target, MorphismData { element_map, base_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_loop;
    use crate::constructors::{pair_groupoid, OddPermutation};

    #[test]
    fn pair_groupoid_isotropy_is_trivial() {
        let g = pair_groupoid(3);
        for &u in g.units() {
            let l = isotropy_loop(&g, u).unwrap();
            assert_eq!(l.n(), 1);
            assert!(check_loop(&l).passed());
        }
    }

    #[test]
    fn errors() {
        let g = pair_groupoid(2);
        assert_eq!(isotropy_loop(&g, ElementId::new(1)), Err(ConstructError::NotAUnit(ElementId::new(1))));
        let phi = OddPermutation::power(5, 3).unwrap();
        let p = crate::constructors::phi_left_loopoid(5, &phi).unwrap();
        assert!(matches!(isotropy_loop(&p, p.units()[0]), Err(ConstructError::NotALoopoid(_))));
    }
}
