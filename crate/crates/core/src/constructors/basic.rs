use std::collections::{BTreeMap, BTreeSet};

use super::ConstructError;
use crate::model::{ElementId, StructureTable, TableParts};

/// Pair groupoid over `0..n`: elements `(u,v)` at index `u*n + v`.
pub fn pair_groupoid(n: usize) -> StructureTable {
    assert!(n >= 1, "pair groupoid needs at least one point");
    let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    pair_groupoid_on(&points)
}

/// Pair groupoid over labelled points, with `(u,v)(v,z) = (u,z)`, units on
/// the diagonal and inversion `(u,v) ↦ (v,u)`. Element labels are `(p,q)`.
pub fn pair_groupoid_on(points: &[String]) -> StructureTable {
    let m = points.len();
    assert!(m >= 1, "pair groupoid needs at least one point");
    let id = |u: usize, v: usize| ElementId::new(u * m + v);
    let mut labels = Vec::with_capacity(m * m);
    let mut alpha = Vec::with_capacity(m * m);
    let mut beta = Vec::with_capacity(m * m);
    let mut inv = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in 0..m {
            labels.push(format!("({},{})", points[u], points[v]));
            alpha.push(id(u, u));
            beta.push(id(v, v));
            inv.push(id(v, u));
        }
    }
    let mut triples = Vec::with_capacity(m * m * m);
    for u in 0..m {
        for v in 0..m {
            for z in 0..m {
                triples.push((id(u, v), id(v, z), id(u, z)));
            }
        }
    }
    TableParts {
        n: m * m,
        labels: Some(labels),
        units: (0..m).map(|u| id(u, u)).collect(),
        alpha,
        beta,
        triples,
        inv: Some(inv),
        ..Default::default()
    }
    .build()
    .expect("pair groupoid is well formed")
}

/// Carrier, units and projections shared by the trivial and extended semiloopoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialSpec {
    pub n: usize,
    pub units: Vec<ElementId>,
    pub alpha: Vec<ElementId>,
    pub beta: Vec<ElementId>,
}

impl TrivialSpec {
    fn triples(&self) -> Vec<(ElementId, ElementId, ElementId)> {
        (0..self.n)
            .map(ElementId::new)
            .flat_map(|g| [(self.alpha[g.index()], g, g), (g, self.beta[g.index()], g)])
            .collect()
    }

    fn validate(&self) -> Result<StructureTable, ConstructError> {
        TableParts {
            n: self.n,
            units: self.units.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            triples: self.triples(),
            ..Default::default()
        }
        .build()
        .map_err(ConstructError::InvalidProjection)
    }
}

/// Only the unit products `α(g)g = g = gβ(g)` are defined.
pub fn trivial_semiloopoid(spec: &TrivialSpec) -> Result<StructureTable, ConstructError> {
    spec.validate()
}

/// The trivial semiloopoid with one non-unit `g0` acting on `A` through `l0`.
///
/// Requires `g0` not a unit, `A ∩ units = {β(g0)}`, `l0` defined exactly on
/// `A`, injective, valued in non-units, with `l0(β(g0)) = g0`, and
/// `l0(h) ≠ h` for the remaining `h ∈ A` (otherwise `r_h` identifies `α(h)`
/// and `g0`).
pub fn extended_trivial_semiloopoid(
    base: &TrivialSpec,
    g0: ElementId,
    a: &[ElementId],
    l0: &BTreeMap<ElementId, ElementId>,
) -> Result<StructureTable, ConstructError> {
    let trivial = base.validate()?;
    let pre = |msg: &str| Err(ConstructError::PreconditionViolated(msg.to_string()));
    let n = base.n;
    if g0.index() >= n || a.iter().any(|x| x.index() >= n) || l0.values().any(|x| x.index() >= n) {
        return pre("element index out of range");
    }
    if trivial.is_unit(g0) {
        return pre("g0 must not be a unit");
    }
    let b0 = trivial.beta(g0);
    let a_set: BTreeSet<ElementId> = a.iter().copied().collect();
    let units_in_a: Vec<ElementId> = a_set.iter().copied().filter(|&x| trivial.is_unit(x)).collect();
    if units_in_a != [b0] {
        return pre("A must meet the units exactly in beta(g0)");
    }
    if l0.keys().copied().collect::<BTreeSet<_>>() != a_set {
        return pre("l0 must be defined exactly on A");
    }
    if l0.values().collect::<BTreeSet<_>>().len() != l0.len() {
        return pre("l0 must be injective");
    }
    if l0.values().any(|&v| trivial.is_unit(v)) {
        return pre("l0 must take values outside the units");
    }
    if l0[&b0] != g0 {
        return pre("l0(beta(g0)) must equal g0");
    }
    if l0.iter().any(|(&h, &v)| h != b0 && h == v) {
        return pre("l0(h) must differ from h for h in A other than beta(g0)");
    }
    let mut parts = trivial.to_parts();
    parts.triples.extend(l0.iter().map(|(&h, &v)| (g0, h, v)));
    Ok(parts.build()?)
}

/// A loop from a row-major Cayley table. The identity is located, and `inv`
/// is set when every element has a two-sided inverse.
pub fn loop_from_table(
    n: usize,
    table: &[usize],
    labels: Option<Vec<String>>,
) -> Result<StructureTable, ConstructError> {
    if n == 0 || table.len() != n * n || table.iter().any(|&v| v >= n) {
        return Err(ConstructError::NotALoop);
    }
    let m = |a: usize, b: usize| table[a * n + b];
    let e = (0..n)
        .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
        .ok_or(ConstructError::NotALoop)?;
    let latin = (0..n).all(|a| {
        let row: BTreeSet<usize> = (0..n).map(|b| m(a, b)).collect();
        let col: BTreeSet<usize> = (0..n).map(|b| m(b, a)).collect();
        row.len() == n && col.len() == n
    });
    if !latin {
        return Err(ConstructError::NotALoop);
    }
    let inv: Option<Vec<ElementId>> = (0..n)
        .map(|a| (0..n).find(|&b| m(a, b) == e && m(b, a) == e).map(ElementId::new))
        .collect();
    let e = ElementId::new(e);
    let triples = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (ElementId::new(a), ElementId::new(b), ElementId::new(m(a, b))))
        .collect();
    Ok(TableParts {
        n,
        labels,
        units: vec![e],
        alpha: vec![e; n],
        beta: vec![e; n],
        triples,
        inv,
        ..Default::default()
    }
    .build()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_anchor_compatibility, check_groupoid, check_semiloopoid};

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn pair_groupoid_counts() {
        let g = pair_groupoid(2);
        assert_eq!(g.n(), 4);
        assert_eq!(g.units(), [e(0), e(3)]);
        assert_eq!(g.triples().len(), 8);
        assert_eq!(g.label(e(1)), "(0,1)");
        assert!(check_groupoid(&pair_groupoid(3)).unwrap().passed());
    }

    #[test]
    fn trivial_three_points_one_unit() {
        let g = trivial_semiloopoid(&TrivialSpec {
            n: 3,
            units: vec![e(0)],
            alpha: vec![e(0); 3],
            beta: vec![e(0); 3],
        })
        .unwrap();
        assert_eq!(g.triples().len(), 5);
        assert!(check_semiloopoid(&g).passed());
    }

    #[test]
    fn trivial_mixed_projections_fail_anchor() {
        let g = trivial_semiloopoid(&TrivialSpec {
            n: 4,
            units: vec![e(0), e(1)],
            alpha: vec![e(0), e(1), e(0), e(1)],
            beta: vec![e(0), e(1), e(1), e(0)],
        })
        .unwrap();
        assert!(check_semiloopoid(&g).passed());
        let r = check_anchor_compatibility(&g);
        assert_eq!(r.flag("composability"), Some(false));
        // beta(2) = 1 = alpha(3) yet (2,3) is not composable
        assert!(r.witnesses_for("composability").any(|w| w.elements == [e(2), e(3)]));
    }

    #[test]
    fn trivial_rejects_bad_projection() {
        let err = trivial_semiloopoid(&TrivialSpec {
            n: 2,
            units: vec![e(0)],
            alpha: vec![e(1), e(0)],
            beta: vec![e(0), e(0)],
        })
        .unwrap_err();
        assert!(matches!(err, ConstructError::InvalidProjection(_)));
    }

    fn five_point_base() -> TrivialSpec {
        TrivialSpec { n: 5, units: vec![e(0)], alpha: vec![e(0); 5], beta: vec![e(0); 5] }
    }

    #[test]
    fn extended_example() {
        let l0 = BTreeMap::from([(e(0), e(1)), (e(2), e(3))]);
        let g = extended_trivial_semiloopoid(&five_point_base(), e(1), &[e(0), e(2)], &l0).unwrap();
        assert!(check_semiloopoid(&g).passed());
        assert_eq!(g.left_translation(e(1)).unwrap().len(), 2);
    }

    #[test]
    fn extended_with_only_beta_g0_is_trivial() {
        let base = five_point_base();
        let l0 = BTreeMap::from([(e(0), e(1))]);
        let g = extended_trivial_semiloopoid(&base, e(1), &[e(0)], &l0).unwrap();
        assert_eq!(g, trivial_semiloopoid(&base).unwrap());
    }

    #[test]
    fn extended_preconditions_name_the_clause() {
        let base = five_point_base();
        let cases = vec![
            (e(0), vec![e(0)], BTreeMap::from([(e(0), e(1))]), "g0 must not be a unit"),
            (e(1), vec![e(2)], BTreeMap::from([(e(2), e(3))]), "A must meet"),
            (e(1), vec![e(0), e(2)], BTreeMap::from([(e(0), e(1))]), "defined exactly on A"),
            (e(1), vec![e(0), e(2)], BTreeMap::from([(e(0), e(1)), (e(2), e(1))]), "injective"),
            (e(1), vec![e(0)], BTreeMap::from([(e(0), e(3))]), "l0(beta(g0))"),
            (e(1), vec![e(0), e(2)], BTreeMap::from([(e(0), e(1)), (e(2), e(2))]), "differ from h"),
        ];
        for (g0, a, l0, needle) in cases {
            match extended_trivial_semiloopoid(&base, g0, &a, &l0) {
                Err(ConstructError::PreconditionViolated(msg)) => assert!(msg.contains(needle), "{msg}"),
                other => panic!("expected precondition failure for {needle}, got {other:?}"),
            }
        }
    }

    #[test]
    fn non_injective_l0_breaks_left_injectivity() {
        // bypass the constructor: g0 = 1 sends both 0 and 2 to 1
        let mut parts = trivial_semiloopoid(&five_point_base()).unwrap().to_parts();
        parts.triples.extend([(e(1), e(2), e(1))]);
        let g = parts.build().unwrap();
        let r = check_semiloopoid(&g);
        assert_eq!(r.flag("left-injective"), Some(false));
        assert_eq!(r.witnesses_for("left-injective").next().unwrap().elements, [e(1), e(0), e(2)]);
    }

    #[test]
    fn loop_from_table_finds_identity_and_inverse() {
        let z3 = loop_from_table(3, &[0, 1, 2, 1, 2, 0, 2, 0, 1], None).unwrap();
        assert_eq!(z3.units(), [e(0)]);
        assert_eq!(z3.inv().unwrap(), [e(0), e(2), e(1)]);
        assert!(loop_from_table(2, &[0, 1, 1, 1], None).is_err());
    }
}
