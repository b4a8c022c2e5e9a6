//! Finite structures with a partially defined multiplication.
//!
//! A [`StructureTable`] stores a carrier `0..n`, a subset of units, the source
//! and target projections onto the units, and the multiplication as a ternary
//! relation. The relation is arbitrary: it does not have to be the graph of a
//! map, and translations do not have to be injective. Those properties are
//! decided by the checkers in [`crate::axioms`].

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Index of an element inside the carrier of its owning structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u32);

impl ElementId {
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId::new(i)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One entry `(g, h, k)` of the multiplication relation, read as `gh = k`.
pub type Triple = (ElementId, ElementId, ElementId);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("{what}: element index {index} out of range for carrier of size {n}")]
    IndexOutOfRange { what: &'static str, index: usize, n: usize },
    #[error("{what}: expected {expected} entries, found {found}")]
    LengthMismatch { what: &'static str, expected: usize, found: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("label {0:?} is empty or contains whitespace")]
    InvalidLabel(String),
    #[error("{which}({g}) = {image} is not a unit")]
    ImageNotUnit { which: &'static str, g: ElementId, image: ElementId },
    #[error("unit {u} is not fixed by {which}: {which}({u}) = {image}")]
    UnitNotFixed { which: &'static str, u: ElementId, image: ElementId },
    #[error("no unit e with (e,{0},{0}) or ({0},e,{0}) in the relation")]
    MissingUnit(ElementId),
    #[error("more than one candidate unit for element {0}")]
    AmbiguousUnit(ElementId),
    #[error("product of ({0},{1}) is not single-valued")]
    MultiValued(ElementId, ElementId),
    #[error("element {0} is not a unit")]
    NotAUnit(ElementId),
}

/// Raw ingredients for a [`StructureTable`]; validated by [`TableParts::build`].
#[derive(Debug, Clone, Default)]
pub struct TableParts {
    pub n: usize,
    /// Display names; `None` means decimal indices.
    pub labels: Option<Vec<String>>,
    pub units: Vec<ElementId>,
    pub alpha: Vec<ElementId>,
    pub beta: Vec<ElementId>,
    pub triples: Vec<Triple>,
    pub inv: Option<Vec<ElementId>>,
    pub linv: Option<Vec<ElementId>>,
    pub rinv: Option<Vec<ElementId>>,
}

impl TableParts {
    pub fn build(self) -> Result<StructureTable, ModelError> {
        StructureTable::from_parts(self)
    }
}

const UNDEFINED: u32 = u32::MAX;

/// A finite candidate structure: carrier, units, `alpha`, `beta`, the
/// multiplication relation, and optional inversion maps.
///
/// Immutable once built. Equality compares every stored field, labels included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    labels: Vec<String>,
    units: Vec<ElementId>,
    is_unit: Vec<bool>,
    alpha: Vec<ElementId>,
    beta: Vec<ElementId>,
    triples: Vec<Triple>,
    inv: Option<Vec<ElementId>>,
    linv: Option<Vec<ElementId>>,
    rinv: Option<Vec<ElementId>>,
    // first value of each cell, row-major; UNDEFINED when empty
    cells: Vec<u32>,
    // lexicographically first conflicting cell, if the relation is not a map
    conflict: Option<(ElementId, ElementId)>,
}

fn check_map(what: &'static str, map: &[ElementId], n: usize) -> Result<(), ModelError> {
    if map.len() != n {
        return Err(ModelError::LengthMismatch { what, expected: n, found: map.len() });
    }
    check_ids(what, map.iter().copied(), n)
}

fn check_ids(
    what: &'static str,
    ids: impl IntoIterator<Item = ElementId>,
    n: usize,
) -> Result<(), ModelError> {
    for id in ids {
        if id.index() >= n {
            return Err(ModelError::IndexOutOfRange { what, index: id.index(), n });
        }
    }
    Ok(())
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl StructureTable {
    pub fn from_parts(parts: TableParts) -> Result<Self, ModelError> {
        let TableParts { n, labels, units, alpha, beta, triples, inv, linv, rinv } = parts;
        if n == 0 {
            return Err(ModelError::EmptyCarrier);
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(ModelError::LengthMismatch {
                        what: "labels",
                        expected: n,
                        found: l.len(),
                    });
                }
                let mut seen = BTreeSet::new();
                for s in &l {
                    if s.is_empty() || s.chars().any(char::is_whitespace) {
                        return Err(ModelError::InvalidLabel(s.clone()));
                    }
                    if !seen.insert(s.as_str()) {
                        return Err(ModelError::DuplicateLabel(s.clone()));
                    }
                }
                l
            }
            None => default_labels(n),
        };
        check_ids("units", units.iter().copied(), n)?;
        check_map("alpha", &alpha, n)?;
        check_map("beta", &beta, n)?;
        for (what, m) in [("inv", &inv), ("linv", &linv), ("rinv", &rinv)] {
            if let Some(m) = m {
                check_map(what, m, n)?;
            }
        }
        for &(a, b, c) in &triples {
            check_ids("triples", [a, b, c], n)?;
        }

        let units: Vec<ElementId> = units.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut is_unit = vec![false; n];
        for u in &units {
            is_unit[u.index()] = true;
        }
        for (which, map) in [("alpha", &alpha), ("beta", &beta)] {
            for (g, &img) in map.iter().enumerate() {
                if !is_unit[img.index()] {
                    return Err(ModelError::ImageNotUnit { which, g: ElementId::new(g), image: img });
                }
            }
            for &u in &units {
                let img = map[u.index()];
                if img != u {
                    return Err(ModelError::UnitNotFixed { which, u, image: img });
                }
            }
        }

        let mut triples = triples;
        triples.sort_unstable();
        triples.dedup();
        let mut cells = vec![UNDEFINED; n * n];
        let mut conflict = None;
        for &(g, h, k) in &triples {
            let cell = &mut cells[g.index() * n + h.index()];
            if *cell == UNDEFINED {
                *cell = k.0;
            } else if conflict.is_none() {
                conflict = Some((g, h));
            }
        }

        Ok(StructureTable {
            labels,
            units,
            is_unit,
            alpha,
            beta,
            triples,
            inv,
            linv,
            rinv,
            cells,
            conflict,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.n()).map(ElementId::new)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: ElementId) -> &str {
        &self.labels[g.index()]
    }

    /// True when the labels are the default decimal indices.
    pub fn has_default_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
    }

    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId::new)
    }

    /// Units in ascending order.
    pub fn units(&self) -> &[ElementId] {
        &self.units
    }

    #[inline]
    pub fn is_unit(&self, g: ElementId) -> bool {
        self.is_unit[g.index()]
    }

    #[inline]
    pub fn alpha(&self, g: ElementId) -> ElementId {
        self.alpha[g.index()]
    }

    #[inline]
    pub fn beta(&self, g: ElementId) -> ElementId {
        self.beta[g.index()]
    }

    pub fn alpha_map(&self) -> &[ElementId] {
        &self.alpha
    }

    pub fn beta_map(&self) -> &[ElementId] {
        &self.beta
    }

    /// The multiplication relation, sorted lexicographically and free of duplicates.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn contains_triple(&self, t: Triple) -> bool {
        self.triples.binary_search(&t).is_ok()
    }

    pub fn inv(&self) -> Option<&[ElementId]> {
        self.inv.as_deref()
    }

    pub fn linv(&self) -> Option<&[ElementId]> {
        self.linv.as_deref()
    }

    pub fn rinv(&self) -> Option<&[ElementId]> {
        self.rinv.as_deref()
    }

    /// Decomposes the table back into its raw parts.
    pub fn to_parts(&self) -> TableParts {
        TableParts {
            n: self.n(),
            labels: Some(self.labels.clone()),
            units: self.units.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            triples: self.triples.clone(),
            inv: self.inv.clone(),
            linv: self.linv.clone(),
            rinv: self.rinv.clone(),
        }
    }

    /// The same structure with all inversion maps dropped.
    pub fn without_inversions(&self) -> StructureTable {
        StructureTable { inv: None, linv: None, rinv: None, ..self.clone() }
    }

    /// Replaces the inversion maps, validating their ranges.
    pub fn with_inversions(
        &self,
        inv: Option<Vec<ElementId>>,
        linv: Option<Vec<ElementId>>,
        rinv: Option<Vec<ElementId>>,
    ) -> Result<StructureTable, ModelError> {
        TableParts { inv, linv, rinv, ..self.to_parts() }.build()
    }

    /// Some cell `(g, h)` holding two different products, if any.
    pub fn multi_valued_cell(&self) -> Option<(ElementId, ElementId)> {
        self.conflict
    }

    pub fn is_single_valued(&self) -> bool {
        self.conflict.is_none()
    }

    /// Every cell with at least two distinct products, in lexicographic order.
    pub fn multi_valued_cells(&self) -> Vec<(ElementId, ElementId)> {
        let mut out: Vec<(ElementId, ElementId)> = self
            .triples
            .windows(2)
            .filter(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1)
            .map(|w| (w[0].0, w[0].1))
            .collect();
        out.dedup();
        out
    }

    /// The product `gh`, or `None` when `(g, h)` is not composable.
    pub fn product(&self, g: ElementId, h: ElementId) -> Result<Option<ElementId>, ModelError> {
        let n = self.n();
        let c = self.cells[g.index() * n + h.index()];
        if c == UNDEFINED {
            return Ok(None);
        }
        if self.conflict.is_some() {
            let lo = self.triples.partition_point(|t| (t.0, t.1) < (g, h));
            if lo + 1 < self.triples.len() {
                let (a, b, _) = self.triples[lo + 1];
                if a == g && b == h {
                    return Err(ModelError::MultiValued(g, h));
                }
            }
        }
        Ok(Some(ElementId(c)))
    }

    /// Infallible view of the multiplication, available only for single-valued tables.
    pub fn mul_table(&self) -> Result<MulTable<'_>, ModelError> {
        match self.conflict {
            Some((g, h)) => Err(ModelError::MultiValued(g, h)),
            None => Ok(MulTable { n: self.n(), cells: &self.cells }),
        }
    }

    /// The composable pairs: projection of the relation onto its first two factors.
    pub fn composable_pairs(&self) -> BTreeSet<(ElementId, ElementId)> {
        self.triples.iter().map(|&(g, h, _)| (g, h)).collect()
    }

    pub fn alpha_fiber(&self, u: ElementId) -> Result<Vec<ElementId>, ModelError> {
        self.fiber(u, &self.alpha)
    }

    pub fn beta_fiber(&self, u: ElementId) -> Result<Vec<ElementId>, ModelError> {
        self.fiber(u, &self.beta)
    }

    fn fiber(&self, u: ElementId, map: &[ElementId]) -> Result<Vec<ElementId>, ModelError> {
        if u.index() >= self.n() || !self.is_unit(u) {
            return Err(ModelError::NotAUnit(u));
        }
        Ok(self.elements().filter(|g| map[g.index()] == u).collect())
    }

    /// `h ↦ gh` on its domain, as `(h, gh)` pairs sorted by `h`.
    pub fn left_translation(
        &self,
        g: ElementId,
    ) -> Result<Vec<(ElementId, ElementId)>, ModelError> {
        let mut out = Vec::new();
        for h in self.elements() {
            if let Some(k) = self.product(g, h)? {
                out.push((h, k));
            }
        }
        Ok(out)
    }

    /// `h ↦ hg` on its domain, as `(h, hg)` pairs sorted by `h`.
    pub fn right_translation(
        &self,
        g: ElementId,
    ) -> Result<Vec<(ElementId, ElementId)>, ModelError> {
        let mut out = Vec::new();
        for h in self.elements() {
            if let Some(k) = self.product(h, g)? {
                out.push((h, k));
            }
        }
        Ok(out)
    }
}

/// Dense view of a single-valued multiplication.
#[derive(Clone, Copy)]
pub struct MulTable<'a> {
    n: usize,
    cells: &'a [u32],
}

impl MulTable<'_> {
    #[inline]
    pub fn get(&self, g: ElementId, h: ElementId) -> Option<ElementId> {
        let c = self.cells[g.index() * self.n + h.index()];
        (c != UNDEFINED).then_some(ElementId(c))
    }

    #[inline]
    pub fn defined(&self, g: ElementId, h: ElementId) -> bool {
        self.cells[g.index() * self.n + h.index()] != UNDEFINED
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Rebuilds `alpha`, `beta` and the unit set from the relation alone.
///
/// `alpha(g)` is the unique `e` with `(e, g, g)` in the relation, `beta(g)` the
/// unique `e` with `(g, e, g)`. Every `e` found this way must itself be fixed
/// by both maps.
pub fn infer_structure(triples: &[Triple], n: usize) -> Result<StructureTable, ModelError> {
    if n == 0 {
        return Err(ModelError::EmptyCarrier);
    }
    for &(a, b, c) in triples {
        check_ids("triples", [a, b, c], n)?;
    }
    let mut alpha: Vec<Option<ElementId>> = vec![None; n];
    let mut beta: Vec<Option<ElementId>> = vec![None; n];
    let mut sorted = triples.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &(a, b, c) in &sorted {
        if b == c {
            let slot = &mut alpha[b.index()];
            match slot {
                None => *slot = Some(a),
                Some(prev) if *prev != a => return Err(ModelError::AmbiguousUnit(b)),
                _ => {}
            }
        }
        if a == c {
            let slot = &mut beta[a.index()];
            match slot {
                None => *slot = Some(b),
                Some(prev) if *prev != b => return Err(ModelError::AmbiguousUnit(a)),
                _ => {}
            }
        }
    }
    let alpha: Vec<ElementId> = alpha
        .into_iter()
        .enumerate()
        .map(|(g, a)| a.ok_or(ModelError::MissingUnit(ElementId::new(g))))
        .collect::<Result<_, _>>()?;
    let beta: Vec<ElementId> = beta
        .into_iter()
        .enumerate()
        .map(|(g, b)| b.ok_or(ModelError::MissingUnit(ElementId::new(g))))
        .collect::<Result<_, _>>()?;
    let units: BTreeSet<ElementId> = alpha.iter().chain(beta.iter()).copied().collect();
    TableParts {
        n,
        labels: None,
        units: units.into_iter().collect(),
        alpha,
        beta,
        triples: sorted,
        ..Default::default()
    }
    .build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    fn one_point() -> StructureTable {
        TableParts {
            n: 1,
            units: vec![e(0)],
            alpha: vec![e(0)],
            beta: vec![e(0)],
            triples: vec![(e(0), e(0), e(0))],
            ..Default::default()
        }
        .build()
        .unwrap()
    }

    #[test]
    fn one_point_basics() {
        let g = one_point();
        assert_eq!(g.product(e(0), e(0)).unwrap(), Some(e(0)));
        assert_eq!(g.composable_pairs().len(), 1);
        assert_eq!(g.alpha_fiber(e(0)).unwrap(), vec![e(0)]);
        assert!(g.has_default_labels());
    }

    #[test]
    fn rejects_unit_not_fixed() {
        let err = TableParts {
            n: 2,
            units: vec![e(0), e(1)],
            alpha: vec![e(1), e(1)],
            beta: vec![e(0), e(1)],
            ..Default::default()
        }
        .build()
        .unwrap_err();
        assert!(matches!(err, ModelError::UnitNotFixed { which: "alpha", .. }));
    }

    #[test]
    fn rejects_image_outside_units() {
        let err = TableParts {
            n: 2,
            units: vec![e(0)],
            alpha: vec![e(0), e(1)],
            beta: vec![e(0), e(0)],
            ..Default::default()
        }
        .build()
        .unwrap_err();
        assert!(matches!(err, ModelError::ImageNotUnit { .. }));
    }

    #[test]
    fn rejects_out_of_range_and_bad_labels() {
        let base = TableParts {
            n: 1,
            units: vec![e(0)],
            alpha: vec![e(0)],
            beta: vec![e(0)],
            ..Default::default()
        };
        let err = TableParts { triples: vec![(e(0), e(0), e(3))], ..base.clone() }
            .build()
            .unwrap_err();
        assert!(matches!(err, ModelError::IndexOutOfRange { index: 3, .. }));
        let err = TableParts { labels: Some(vec!["a b".into()]), ..base.clone() }
            .build()
            .unwrap_err();
        assert!(matches!(err, ModelError::InvalidLabel(_)));
        let err = TableParts {
            n: 2,
            labels: Some(vec!["x".into(), "x".into()]),
            units: vec![e(0), e(1)],
            alpha: vec![e(0), e(1)],
            beta: vec![e(0), e(1)],
            ..Default::default()
        }
        .build()
        .unwrap_err();
        assert_eq!(err, ModelError::DuplicateLabel("x".into()));
    }

    #[test]
    fn multi_valued_product_is_an_error() {
        let g = TableParts {
            n: 2,
            units: vec![e(0)],
            alpha: vec![e(0), e(0)],
            beta: vec![e(0), e(0)],
            triples: vec![
                (e(0), e(1), e(1)),
                (e(1), e(0), e(1)),
                (e(0), e(0), e(0)),
                (e(1), e(1), e(0)),
                (e(1), e(1), e(1)),
            ],
            ..Default::default()
        }
        .build()
        .unwrap();
        assert_eq!(g.product(e(1), e(1)), Err(ModelError::MultiValued(e(1), e(1))));
        assert_eq!(g.product(e(0), e(1)), Ok(Some(e(1))));
        assert_eq!(g.multi_valued_cells(), vec![(e(1), e(1))]);
        assert!(g.mul_table().is_err());
    }

    #[test]
    fn infer_detects_missing_and_ambiguous_units() {
        assert_eq!(infer_structure(&[], 1).unwrap_err(), ModelError::MissingUnit(e(0)));
        let t = vec![
            (e(0), e(2), e(2)),
            (e(1), e(2), e(2)),
            (e(2), e(0), e(2)),
            (e(0), e(0), e(0)),
            (e(1), e(1), e(1)),
        ];
        assert_eq!(infer_structure(&t, 3).unwrap_err(), ModelError::AmbiguousUnit(e(2)));
    }

    #[test]
    fn infer_one_point() {
        assert_eq!(infer_structure(&[(e(0), e(0), e(0))], 1).unwrap(), one_point());
    }

    #[test]
    fn fiber_of_non_unit_is_an_error() {
        let g = TableParts {
            n: 2,
            units: vec![e(0)],
            alpha: vec![e(0), e(0)],
            beta: vec![e(0), e(0)],
            ..Default::default()
        }
        .build()
        .unwrap();
        assert_eq!(g.alpha_fiber(e(1)), Err(ModelError::NotAUnit(e(1))));
        assert_eq!(g.beta_fiber(e(0)).unwrap(), vec![e(0), e(1)]);
        assert!(g.composable_pairs().is_empty());
    }
}
