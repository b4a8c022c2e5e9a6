use super::ConstructError;
use crate::axioms::{check_inverse_loop, check_loop};
use crate::model::{ElementId, StructureTable, TableParts};

/// The loopoid `X × N × N` over `{(e,s,s)}` with `(x,s,t)(y,t,r) = (xy,s,r)`.
///
/// Element `(x,s,t)` sits at index `x·n² + s·n + t`. When `X` carries an
/// inversion under which it is an inverse loop, `ι(x,s,t) = (x⁻¹,t,s)`.
pub fn product_loop_pair_groupoid(x: &StructureTable, n: usize) -> Result<StructureTable, ConstructError> {
    if n == 0 {
        return Err(ConstructError::PreconditionViolated("n must be positive".into()));
    }
    if !check_loop(x).passed() {
        return Err(ConstructError::NotALoop);
    }
    let m = x.mul_table()?;
    let e = x.units()[0];
    let id = |a: ElementId, s: usize, t: usize| ElementId::new(a.index() * n * n + s * n + t);
    let size = x.n() * n * n;
    let mut labels = Vec::with_capacity(size);
    let mut alpha = Vec::with_capacity(size);
    let mut beta = Vec::with_capacity(size);
    for a in x.elements() {
        for s in 0..n {
            for t in 0..n {
                labels.push(format!("({},{s},{t})", x.label(a)));
                alpha.push(id(e, s, s));
                beta.push(id(e, t, t));
            }
        }
    }
    let mut triples = Vec::with_capacity(x.n() * x.n() * n * n * n);
    for a in x.elements() {
        for b in x.elements() {
            let ab = m.get(a, b).expect("loops are total");
            for s in 0..n {
                for t in 0..n {
                    for r in 0..n {
                        triples.push((id(a, s, t), id(b, t, r), id(ab, s, r)));
                    }
                }
            }
        }
    }
    let inv = match x.inv() {
        Some(xi) if check_inverse_loop(x).map(|r| r.passed()).unwrap_or(false) => Some(
            x.elements()
                .flat_map(|a| (0..n).flat_map(move |s| (0..n).map(move |t| (a, s, t))))
                .map(|(a, s, t)| id(xi[a.index()], t, s))
                .collect(),
        ),
        _ => None,
    };
    Ok(TableParts {
        n: size,
        labels: Some(labels),
        units: (0..n).map(|s| id(e, s, s)).collect(),
        alpha,
        beta,
        triples,
        inv,
        ..Default::default()
    }
    .build()?)
}
