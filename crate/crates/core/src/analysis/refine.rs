//! Isomorphism-invariant element colouring by iterated neighbourhood refinement.

use crate::model::StructureTable;

/// Colours the elements of all given structures jointly, so equal colours are
/// comparable across structures. Colours are ranks of sorted invariant keys.
pub(crate) fn refine_colors(structs: &[&StructureTable]) -> Vec<Vec<u32>> {
    let initial_keys: Vec<Vec<Vec<u32>>> = structs
        .iter()
        .map(|g| {
            let mut pos = vec![[0u32; 3]; g.n()];
            for &(a, b, c) in g.triples() {
                pos[a.index()][0] += 1;
                pos[b.index()][1] += 1;
                pos[c.index()][2] += 1;
            }
            // units sort first
            g.elements()
                .map(|x| {
                    let p = pos[x.index()];
                    vec![u32::from(!g.is_unit(x)), p[0], p[1], p[2]]
                })
                .collect()
        })
        .collect();
    let mut colors = rank(&initial_keys);
    let mut classes = count_classes(&colors);
    loop {
        let keys: Vec<Vec<Vec<u32>>> = structs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                let c = |x: crate::ElementId| col[x.index()];
                let mut keys: Vec<Vec<u32>> =
                    g.elements().map(|x| vec![c(x), c(g.alpha(x)), c(g.beta(x))]).collect();
                let mut incident: Vec<Vec<[u32; 4]>> = vec![Vec::new(); g.n()];
                for &(a, b, d) in g.triples() {
                    let sig = [c(a), c(b), c(d)];
                    incident[a.index()].push([0, sig[0], sig[1], sig[2]]);
                    incident[b.index()].push([1, sig[0], sig[1], sig[2]]);
                    incident[d.index()].push([2, sig[0], sig[1], sig[2]]);
                }
                for (key, mut inc) in keys.iter_mut().zip(incident) {
                    inc.sort_unstable();
                    key.extend(inc.into_iter().flatten());
                }
                keys
            })
            .collect();
        let next = rank(&keys);
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn rank(keys: &[Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    let mut all: Vec<&Vec<u32>> = keys.iter().flatten().collect();
    all.sort();
    all.dedup();
    keys.iter()
        .map(|ks| ks.iter().map(|k| all.binary_search(&k).unwrap() as u32).collect())
        .collect()
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}
