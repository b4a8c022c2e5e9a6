use super::{pair_groupoid_on, ConstructError, TransversalData};
use crate::model::{ElementId, StructureTable, TableParts};

/// A permutation `φ` of `ℤₙ` with `φ(-x) = -φ(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPermutation {
    table: Vec<usize>,
}

impl OddPermutation {
    pub fn new(table: Vec<usize>) -> Result<Self, ConstructError> {
        let n = table.len();
        if n == 0 {
            return Err(ConstructError::NotBijective(0));
        }
        let mut seen = vec![false; n];
        for &v in &table {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(ConstructError::NotBijective(n));
            }
        }
        if let Some(x) = (0..n).find(|&x| table[(n - x) % n] != (n - table[x]) % n) {
            return Err(ConstructError::NotOdd(x));
        }
        Ok(OddPermutation { table })
    }

    pub fn identity(n: usize) -> Self {
        OddPermutation { table: (0..n).collect() }
    }

    /// `x ↦ c·x mod n`; `c` must be a unit mod `n`.
    pub fn linear(n: usize, c: usize) -> Result<Self, ConstructError> {
        Self::new((0..n).map(|x| c * x % n).collect())
    }

    /// `x ↦ x^k mod n`, a permutation only for suitable `k`.
    pub fn power(n: usize, k: u32) -> Result<Self, ConstructError> {
        Self::new((0..n).map(|x| (0..k).fold(1 % n, |acc, _| acc * x % n)).collect())
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x % self.table.len()]
    }
}

struct PhiCarrier {
    n: usize,
    // (a1, b1, a2, b2) in lexicographic order
    elements: Vec<[usize; 4]>,
    // n^4 slots: index in `elements`, or usize::MAX
    position: Vec<usize>,
}

impl PhiCarrier {
    fn new(n: usize, phi: &OddPermutation) -> Self {
        let mut elements = Vec::with_capacity(n * n * n);
        let mut position = vec![usize::MAX; n * n * n * n];
        for a1 in 0..n {
            for b1 in 0..n {
                for a2 in 0..n {
                    for b2 in 0..n {
                        if (a1 + n - a2) % n == phi.apply((b1 + n - b2) % n) {
                            position[((a1 * n + b1) * n + a2) * n + b2] = elements.len();
                            elements.push([a1, b1, a2, b2]);
                        }
                    }
                }
            }
        }
        PhiCarrier { n, elements, position }
    }

    fn id(&self, a1: usize, b1: usize, a2: usize, b2: usize) -> ElementId {
        let n = self.n;
        let p = self.position[((a1 * n + b1) * n + a2) * n + b2];
        debug_assert!(p != usize::MAX, "(({a1},{b1}),({a2},{b2})) outside the carrier");
        ElementId::new(p)
    }
}

fn check_modulus(n: usize, phi: &OddPermutation) -> Result<(), ConstructError> {
    if n.is_multiple_of(2) {
        return Err(ConstructError::EvenModulus(n));
    }
    if phi.n() != n {
        return Err(ConstructError::NotBijective(n));
    }
    Ok(())
}

/// The left loopoid on `{((a₁,b₁),(a₂,b₂)) ∈ (ℤₙ²)² | a₁ − a₂ = φ(b₁ − b₂)}`.
///
/// Source and target come from the ambient pair groupoid, composable pairs
/// share their middle point, and
/// `((a₁,b₁),(a₂,b₂))·((a₂,b₂),(a₃,b₃)) = ((a₁,b₁),(a₁+φ(b₃−b₁),b₃))`.
/// Both `linv` and `inv` are set to the pair swap; `linv` is a genuine left
/// inversion for every `φ`, `inv` is two-sided only for linear `φ`.
pub fn phi_left_loopoid(n: usize, phi: &OddPermutation) -> Result<StructureTable, ConstructError> {
    check_modulus(n, phi)?;
    let c = PhiCarrier::new(n, phi);
    let size = c.elements.len();
    let mut labels = Vec::with_capacity(size);
    let mut alpha = Vec::with_capacity(size);
    let mut beta = Vec::with_capacity(size);
    let mut swap = Vec::with_capacity(size);
    for &[a1, b1, a2, b2] in &c.elements {
        labels.push(format!("(({a1},{b1}),({a2},{b2}))"));
        alpha.push(c.id(a1, b1, a1, b1));
        beta.push(c.id(a2, b2, a2, b2));
        swap.push(c.id(a2, b2, a1, b1));
    }
    // composable pairs share the middle point; group right factors by first point
    let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for (j, &[a2, b2, _, _]) in c.elements.iter().enumerate() {
        by_first[a2 * n + b2].push(j);
    }
    let mut triples = Vec::with_capacity(size * n * n);
    for (i, &[a1, b1, a2, b2]) in c.elements.iter().enumerate() {
        for &j in &by_first[a2 * n + b2] {
            let b3 = c.elements[j][3];
            let prod = c.id(a1, b1, (a1 + phi.apply((b3 + n - b1) % n)) % n, b3);
            triples.push((ElementId::new(i), ElementId::new(j), prod));
        }
    }
    let units = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| c.id(a, b, a, b)).collect();
    Ok(TableParts {
        n: size,
        labels: Some(labels),
        units,
        alpha,
        beta,
        triples,
        inv: Some(swap.clone()),
        linv: Some(swap),
        ..Default::default()
    }
    .build()?)
}

/// The pair groupoid over `ℤₙ²` (points labelled `(a,b)`) and the transversal
/// `(T, π)` with `T` the carrier of [`phi_left_loopoid`] and
/// `π((a₁,b₁),(a₂,b₂)) = ((a₁,b₁),(a₁+φ(b₂−b₁),b₂))`.
pub fn phi_ambient_transversal(
    n: usize,
    phi: &OddPermutation,
) -> Result<(StructureTable, TransversalData), ConstructError> {
    check_modulus(n, phi)?;
    let points: Vec<String> = (0..n).flat_map(|a| (0..n).map(move |b| format!("({a},{b})"))).collect();
    let ambient = pair_groupoid_on(&points);
    let m = n * n;
    let id = |a1: usize, b1: usize, a2: usize, b2: usize| ElementId::new((a1 * n + b1) * m + a2 * n + b2);
    let mut subset = Vec::new();
    let mut projection = Vec::with_capacity(m * m);
    for a1 in 0..n {
        for b1 in 0..n {
            for a2 in 0..n {
                for b2 in 0..n {
                    if (a1 + n - a2) % n == phi.apply((b1 + n - b2) % n) {
                        subset.push(id(a1, b1, a2, b2));
                    }
                    projection.push(id(a1, b1, (a1 + phi.apply((b2 + n - b1) % n)) % n, b2));
                }
            }
        }
    }
    let t = TransversalData::new(subset, projection, ambient.n())?;
    Ok((ambient, t))
}
