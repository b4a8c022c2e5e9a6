use super::{ConstructError, GroupTable, TransversalData};
use crate::model::{ElementId, StructureTable, TableParts};

/// `p_S`: sends each group element to the member of `S` in its left coset `gH`.
fn coset_projection(
    g: &GroupTable,
    h: &[ElementId],
    s: &[ElementId],
) -> Result<Vec<ElementId>, ConstructError> {
    if !g.is_subgroup(h) {
        return Err(ConstructError::NotASubgroup);
    }
    if s.iter().any(|x| x.index() >= g.n()) {
        return Err(ConstructError::PreconditionViolated("transversal element out of range".into()));
    }
    if !s.contains(&g.identity()) {
        return Err(ConstructError::IdentityNotInS);
    }
    let mut in_h = vec![false; g.n()];
    for x in h {
        in_h[x.index()] = true;
    }
    g.elements()
        .map(|x| {
            let reps: Vec<ElementId> = s
                .iter()
                .copied()
                .filter(|&r| in_h[g.mul(g.inverse(r), x).index()])
                .collect();
            match reps.as_slice() {
                [r] => Ok(*r),
                _ => Err(ConstructError::NotATransversal(x, reps.len())),
            }
        })
        .collect()
}

/// The left loop on a left transversal `S ∋ e` of a subgroup `H`, with
/// `s ∘ s' = p_S(ss')`. Elements of `S` keep their group labels and order.
pub fn baer_transversal_loop(
    g: &GroupTable,
    h: &[ElementId],
    s: &[ElementId],
) -> Result<StructureTable, ConstructError> {
    let proj = coset_projection(g, h, s)?;
    let mut s_sorted = s.to_vec();
    s_sorted.sort();
    s_sorted.dedup();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, x) in s_sorted.iter().enumerate() {
        pos[x.index()] = i;
    }
    let k = s_sorted.len();
    let e = ElementId::new(pos[g.identity().index()]);
    let mut triples = Vec::with_capacity(k * k);
    for (i, &a) in s_sorted.iter().enumerate() {
        for (j, &b) in s_sorted.iter().enumerate() {
            let c = proj[g.mul(a, b).index()];
            triples.push((ElementId::new(i), ElementId::new(j), ElementId::new(pos[c.index()])));
        }
    }
    let out = TableParts {
        n: k,
        labels: Some(s_sorted.iter().map(|x| g.labels()[x.index()].clone()).collect()),
        units: vec![e],
        alpha: vec![e; k],
        beta: vec![e; k],
        triples,
        ..Default::default()
    }
    .build()?;
    debug_assert!(crate::axioms::check_left_loop(&out).passed());
    Ok(out)
}

/// `(S, p_S)` as a transversal of the group viewed as a one-unit structure.
pub fn baer_projection(
    g: &GroupTable,
    h: &[ElementId],
    s: &[ElementId],
) -> Result<TransversalData, ConstructError> {
    let proj = coset_projection(g, h, s)?;
    TransversalData::new(s.to_vec(), proj, g.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_left_loop;

    #[test]
    fn trivial_subgroup_gives_the_group() {
        let g = GroupTable::cyclic(4);
        let all: Vec<ElementId> = g.elements().collect();
        let l = baer_transversal_loop(&g, &[g.identity()], &all).unwrap();
        assert_eq!(l, g.to_structure().without_inversions());
    }

    #[test]
    fn whole_group_gives_one_point() {
        let g = GroupTable::symmetric(3);
        let all: Vec<ElementId> = g.elements().collect();
        let l = baer_transversal_loop(&g, &all, &[g.identity()]).unwrap();
        assert_eq!(l.n(), 1);
        assert!(check_left_loop(&l).passed());
    }

    #[test]
    fn errors() {
        let g = GroupTable::symmetric(3);
        let e = g.identity();
        let t12 = g.find_label("(12)").unwrap();
        let t13 = g.find_label("(13)").unwrap();
        let c123 = g.find_label("(123)").unwrap();
        let other = g.mul(c123, t12);
        assert_eq!(baer_transversal_loop(&g, &[e, c123], &[e]), Err(ConstructError::NotASubgroup));
        assert_eq!(baer_transversal_loop(&g, &[e, t12], &[c123, t13]), Err(ConstructError::IdentityNotInS));
        // (123) and (123)(12) share a left coset
        assert!(matches!(
            baer_transversal_loop(&g, &[e, t12], &[e, c123, other]),
            Err(ConstructError::NotATransversal(..))
        ));
    }
}
