use super::refine::refine_colors;
use crate::axioms::{check_morphism, MorphismData};
use crate::model::{ElementId, StructureTable};

/// A bijection `G → H` preserving units, `α`, `β` and the multiplication
/// relation in both directions, if one exists. Inversion maps are ignored.
pub fn isomorphic(g: &StructureTable, h: &StructureTable) -> Option<MorphismData> {
    if g.n() != h.n() || g.units().len() != h.units().len() || g.triples().len() != h.triples().len() {
        return None;
    }
    let colors = refine_colors(&[g, h]);
    let (cg, ch) = (&colors[0], &colors[1]);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }

    let n = g.n();
    let mut class_size = std::collections::HashMap::new();
    for &c in cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    // smallest colour classes first, then by colour for determinism
    let mut order: Vec<ElementId> = g.elements().collect();
    order.sort_by_key(|x| (class_size[&cg[x.index()]], cg[x.index()], *x));

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b, c)) in g.triples().iter().enumerate() {
        incident[a.index()].push(i);
        if b != a {
            incident[b.index()].push(i);
        }
        if c != a && c != b {
            incident[c.index()].push(i);
        }
    }

    let mut search = Search {
        g,
        h,
        cg,
        ch,
        order,
        incident,
        map: vec![None; n],
        used: vec![false; n],
    };
    if !search.extend(0) {
        return None;
    }
    let element_map: Vec<ElementId> = search.map.into_iter().map(Option::unwrap).collect();
    let f = MorphismData::from_element_map(g, element_map);
    debug_assert!(check_morphism(g, h, &f).map(|r| r.passed()).unwrap_or(false));
    Some(f)
}

struct Search<'a> {
    g: &'a StructureTable,
    h: &'a StructureTable,
    cg: &'a [u32],
    ch: &'a [u32],
    order: Vec<ElementId>,
    incident: Vec<Vec<usize>>,
    map: Vec<Option<ElementId>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for y in self.h.elements() {
            if self.used[y.index()] || self.ch[y.index()] != self.cg[x.index()] {
                continue;
            }
            self.map[x.index()] = Some(y);
            self.used[y.index()] = true;
            if self.consistent(x) && self.extend(depth + 1) {
                return true;
            }
            self.used[y.index()] = false;
            self.map[x.index()] = None;
        }
        false
    }

    /// Checks every constraint whose elements are all mapped and that involves `x`.
    fn consistent(&self, x: ElementId) -> bool {
        let (g, h) = (self.g, self.h);
        let m = |z: ElementId| self.map[z.index()];
        let y = m(x).unwrap();
        if g.is_unit(x) != h.is_unit(y) {
            return false;
        }
        for (ax, ay) in [(g.alpha(x), h.alpha(y)), (g.beta(x), h.beta(y))] {
            if let Some(img) = m(ax) {
                if img != ay {
                    return false;
                }
            }
        }
        // elements already mapped whose source or target is x
        for z in g.elements() {
            if let Some(w) = m(z) {
                if (g.alpha(z) == x && h.alpha(w) != y) || (g.beta(z) == x && h.beta(w) != y) {
                    return false;
                }
            }
        }
        self.incident[x.index()].iter().all(|&i| {
            let (a, b, c) = g.triples()[i];
            match (m(a), m(b), m(c)) {
                (Some(a), Some(b), Some(c)) => h.contains_triple((a, b, c)),
                _ => true,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::relabel;
    use crate::constructors::{pair_groupoid, trivial_semiloopoid, TrivialSpec};

    #[test]
    fn identity_on_self() {
        let g = pair_groupoid(2);
        let f = isomorphic(&g, &g).unwrap();
        assert!(check_morphism(&g, &g, &f).unwrap().passed());
    }

    #[test]
    fn recovers_a_relabeling() {
        let g = pair_groupoid(2);
        let e = ElementId::new;
        let h = relabel(&g, &[e(3), e(1), e(2), e(0)]);
        let f = isomorphic(&g, &h).unwrap();
        assert!(check_morphism(&g, &h, &f).unwrap().passed());
        let back = f.inverse(&h).unwrap();
        assert!(check_morphism(&h, &g, &back).unwrap().passed());
    }

    #[test]
    fn pair_groupoid_vs_trivial() {
        let t = trivial_semiloopoid(&TrivialSpec {
            n: 4,
            units: vec![ElementId::new(0), ElementId::new(3)],
            alpha: [0, 0, 3, 3].map(ElementId::new).to_vec(),
            beta: [0, 3, 0, 3].map(ElementId::new).to_vec(),
        })
        .unwrap();
        assert!(isomorphic(&pair_groupoid(2), &t).is_none());
    }
}
