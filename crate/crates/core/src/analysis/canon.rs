use std::fmt;

use super::refine::refine_colors;
use super::{relabel, AnalysisError};
use crate::model::{default_labels, ElementId, StructureTable, TableParts};

pub const DEFAULT_CANON_CAP: usize = 8;

/// Relabeling-invariant byte encoding of a structure: carrier size, sorted
/// units, `α`, `β` and sorted triples under the lexicographically least
/// admissible relabeling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Encodes `g` after renaming each element `x` to `sigma[x]`.
pub(crate) fn encode(g: &StructureTable, sigma: &[ElementId]) -> Vec<u8> {
    let n = g.n();
    let s = |x: ElementId| sigma[x.index()].index() as u8;
    let mut back = vec![0usize; n];
    for x in g.elements() {
        back[sigma[x.index()].index()] = x.index();
    }
    let mut out = Vec::with_capacity(4 + 3 * n + 3 * g.triples().len());
    out.push(n as u8);
    let mut units: Vec<u8> = g.units().iter().map(|&u| s(u)).collect();
    units.sort_unstable();
    out.push(units.len() as u8);
    out.extend(units);
    out.extend(back.iter().map(|&old| s(g.alpha(ElementId::new(old)))));
    out.extend(back.iter().map(|&old| s(g.beta(ElementId::new(old)))));
    let mut triples: Vec<[u8; 3]> = g.triples().iter().map(|&(a, b, c)| [s(a), s(b), s(c)]).collect();
    triples.sort_unstable();
    out.extend((triples.len() as u16).to_be_bytes());
    out.extend(triples.into_iter().flatten());
    out
}

/// The canonical form with a relabeling that attains it.
///
/// Elements are first coloured by refinement; only relabelings that place
/// colour classes in colour order are tried, which keeps the minimum
/// invariant under isomorphism.
pub fn canonical_labeling(
    g: &StructureTable,
    cap: usize,
) -> Result<(CanonicalForm, Vec<ElementId>), AnalysisError> {
    let n = g.n();
    if n > cap || n > u8::MAX as usize {
        return Err(AnalysisError::SizeCapExceeded { n, cap });
    }
    let colors = refine_colors(&[g]).pop().unwrap();
    // slot_color[p]: colour that position p must receive
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();

    let mut best: Option<(Vec<u8>, Vec<ElementId>)> = None;
    let mut sigma = vec![ElementId::new(0); n];
    let mut used = vec![false; n];
    fn rec(
        g: &StructureTable,
        colors: &[u32],
        slot_color: &[u32],
        pos: usize,
        sigma: &mut Vec<ElementId>,
        used: &mut Vec<bool>,
        best: &mut Option<(Vec<u8>, Vec<ElementId>)>,
    ) {
        if pos == slot_color.len() {
            let code = encode(g, sigma);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, sigma.clone()));
            }
            return;
        }
        for x in 0..colors.len() {
            if !used[x] && colors[x] == slot_color[pos] {
                used[x] = true;
                sigma[x] = ElementId::new(pos);
                rec(g, colors, slot_color, pos + 1, sigma, used, best);
                used[x] = false;
            }
        }
    }
    rec(g, &colors, &slot_color, 0, &mut sigma, &mut used, &mut best);
    let (code, sigma) = best.expect("at least one relabeling");
    Ok((CanonicalForm(code), sigma))
}

pub fn canonical_form(g: &StructureTable) -> Result<CanonicalForm, AnalysisError> {
    canonical_labeling(g, DEFAULT_CANON_CAP).map(|(c, _)| c)
}

/// `g` relabeled canonically, with decimal labels and no inversion maps.
pub fn canonical_representative(g: &StructureTable, cap: usize) -> Result<(CanonicalForm, StructureTable), AnalysisError> {
    let (form, sigma) = canonical_labeling(g, cap)?;
    let r = relabel(&g.without_inversions(), &sigma);
    let rep = TableParts { labels: Some(default_labels(r.n())), ..r.to_parts() }
        .build()
        .expect("relabeled table is well formed");
    Ok((form, rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{pair_groupoid, GroupTable};

    #[test]
    fn one_point_group_constant() {
        let g = pair_groupoid(1);
        // n, |units|, unit, alpha, beta, triple count, triple
        assert_eq!(canonical_form(&g).unwrap().as_bytes(), [1, 1, 0, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(canonical_form(&GroupTable::cyclic(1).to_structure()).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn size_cap() {
        let g = pair_groupoid(3);
        assert_eq!(canonical_form(&g), Err(AnalysisError::SizeCapExceeded { n: 9, cap: DEFAULT_CANON_CAP }));
        assert!(canonical_labeling(&g, 9).is_ok());
    }

    #[test]
    fn z4_and_klein_differ() {
        let z4 = GroupTable::cyclic(4).to_structure();
        let v4 = GroupTable::new(4, &[0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0], None)
            .unwrap()
            .to_structure();
        assert_ne!(canonical_form(&z4).unwrap(), canonical_form(&v4).unwrap());
    }
}
