use super::ConstructError;
use crate::axioms::Checker;
use crate::model::{ElementId, StructureTable, TableParts};
use crate::report::{CheckReport, WitnessKind};

/// A subset `T` with a projection `π` onto it (`π(t) = t` on `T`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalData {
    subset: Vec<ElementId>,
    projection: Vec<ElementId>,
}

impl TransversalData {
    /// `n` is the carrier size of the ambient structure.
    pub fn new(subset: Vec<ElementId>, projection: Vec<ElementId>, n: usize) -> Result<Self, ConstructError> {
        let bad = |m: String| Err(ConstructError::InvalidTransversal(m));
        if projection.len() != n {
            return bad(format!("projection has {} entries for {n} elements", projection.len()));
        }
        let mut subset = subset;
        subset.sort();
        subset.dedup();
        if subset.is_empty() {
            return bad("subset is empty".into());
        }
        if let Some(x) = subset.iter().chain(&projection).find(|x| x.index() >= n) {
            return bad(format!("element {x} out of range"));
        }
        let mut member = vec![false; n];
        for t in &subset {
            member[t.index()] = true;
        }
        if let Some(t) = subset.iter().find(|t| projection[t.index()] != **t) {
            return bad(format!("projection moves {t}, an element of the subset"));
        }
        if let Some(g) = (0..n).find(|&g| !member[projection[g].index()]) {
            return bad(format!("projection sends {g} outside the subset"));
        }
        Ok(TransversalData { subset, projection })
    }

    /// `T = G`, `π = id`.
    pub fn full(g: &StructureTable) -> Self {
        TransversalData { subset: g.elements().collect(), projection: g.elements().collect() }
    }

    pub fn subset(&self) -> &[ElementId] {
        &self.subset
    }

    pub fn projection(&self) -> &[ElementId] {
        &self.projection
    }

    pub fn project(&self, g: ElementId) -> ElementId {
        self.projection[g.index()]
    }
}

/// Which translation relations must be transversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransversalSide {
    Left,
    Right,
    Both,
}

impl TransversalSide {
    fn left(self) -> bool {
        matches!(self, TransversalSide::Left | TransversalSide::Both)
    }

    fn right(self) -> bool {
        matches!(self, TransversalSide::Right | TransversalSide::Both)
    }
}

/// Checks `α(T) ∪ β(T) ⊆ T` and that `π∘l_t` (resp. `π∘r_t`) restricted to
/// `T` is injective for every `t ∈ T`.
pub fn check_transversal(
    g: &StructureTable,
    t: &TransversalData,
    side: TransversalSide,
) -> Result<CheckReport, ConstructError> {
    if t.projection.len() != g.n() {
        return Err(ConstructError::InvalidTransversal("projection does not match the carrier".into()));
    }
    let checker = Checker::default();
    let m = match checker.functional(g) {
        Ok(m) => m,
        Err(r) => return Ok(r),
    };
    let mut report = CheckReport::new();
    let mut member = vec![false; g.n()];
    for x in &t.subset {
        member[x.index()] = true;
    }
    let mut closed = checker.sink("transversal-units");
    for &x in &t.subset {
        if !member[g.alpha(x).index()] {
            closed.push(WitnessKind::OutOfRange, vec![x], "alpha(t) not in T");
        }
        if !member[g.beta(x).index()] {
            closed.push(WitnessKind::OutOfRange, vec![x], "beta(t) not in T");
        }
    }
    closed.finish(&mut report);

    for left in [true, false] {
        if (left && !side.left()) || (!left && !side.right()) {
            continue;
        }
        let mut sink = checker.sink(if left { "left-transversality" } else { "right-transversality" });
        let mut seen = vec![usize::MAX; g.n()];
        for &a in &t.subset {
            seen.fill(usize::MAX);
            for &b in &t.subset {
                let k = if left { m.get(a, b) } else { m.get(b, a) };
                if let Some(k) = k {
                    let p = t.project(k);
                    if seen[p.index()] != usize::MAX {
                        sink.push(
                            WitnessKind::NotInjective,
                            vec![a, ElementId::new(seen[p.index()]), b],
                            "two elements of T give products in the same fiber of pi",
                        );
                    } else {
                        seen[p.index()] = b.index();
                    }
                }
            }
        }
        sink.finish(&mut report);
    }
    Ok(report)
}

/// The structure on `T` with `t • t' = π(tt')` on `G₂ ∩ (T×T)`, units
/// `α(T) = β(T)` and the restricted projections. Inversion maps are not carried.
pub fn transversal_reduce(
    g: &StructureTable,
    t: &TransversalData,
    side: TransversalSide,
) -> Result<StructureTable, ConstructError> {
    let report = check_transversal(g, t, side)?;
    if !report.passed() {
        return Err(ConstructError::TransversalityViolated(Box::new(report)));
    }
    let m = g.mul_table()?;
    let mut pos = vec![usize::MAX; g.n()];
    for (i, x) in t.subset.iter().enumerate() {
        pos[x.index()] = i;
    }
    let new = |x: ElementId| ElementId::new(pos[x.index()]);
    let mut triples = Vec::new();
    for &a in &t.subset {
        for &b in &t.subset {
            if let Some(k) = m.get(a, b) {
                triples.push((new(a), new(b), new(t.project(k))));
            }
        }
    }
    Ok(TableParts {
        n: t.subset.len(),
        labels: Some(t.subset.iter().map(|&x| g.label(x).to_string()).collect()),
        units: t.subset.iter().copied().filter(|&x| g.is_unit(x)).map(new).collect(),
        alpha: t.subset.iter().map(|&x| new(g.alpha(x))).collect(),
        beta: t.subset.iter().map(|&x| new(g.beta(x))).collect(),
        triples,
        ..Default::default()
    }
    .build()?)
}
