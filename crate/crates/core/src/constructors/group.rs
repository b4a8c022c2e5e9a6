use super::ConstructError;
use crate::model::{ElementId, StructureTable, TableParts};

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<ElementId>,
    identity: ElementId,
    inv: Vec<ElementId>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses of a row-major table.
    pub fn new(n: usize, table: &[usize], labels: Option<Vec<String>>) -> Result<Self, ConstructError> {
        if n == 0 {
            return Err(ConstructError::NotAGroup("empty carrier".into()));
        }
        if table.len() != n * n {
            return Err(ConstructError::NotAGroup(format!("table has {} cells, expected {}", table.len(), n * n)));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(ConstructError::NotAGroup(format!("entry {bad} out of range")));
        }
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(ConstructError::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| ConstructError::NotAGroup("no identity".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| m(a, b) == e && m(b, a) == e)
                    .map(ElementId::new)
                    .ok_or_else(|| ConstructError::NotAGroup(format!("{a} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let labels = labels.unwrap_or_else(|| crate::model::default_labels(n));
        if labels.len() != n {
            return Err(ConstructError::NotAGroup("label count mismatch".into()));
        }
        Ok(GroupTable {
            n,
            mul: table.iter().map(|&v| ElementId::new(v)).collect(),
            identity: ElementId::new(e),
            inv,
            labels,
        })
    }

    /// `ℤₙ` under addition.
    pub fn cyclic(n: usize) -> Self {
        let table: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        GroupTable::new(n, &table, None).expect("cyclic table is a group")
    }

    /// The symmetric group on `k` points, elements in lexicographic order of
    /// their one-line notation, product `(στ)(x) = σ(τ(x))`. Labels use
    /// one-based cycle notation with `e` for the identity.
    pub fn symmetric(k: usize) -> Self {
        assert!((1..=6).contains(&k), "symmetric group supported for 1..=6 points");
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).unwrap();
        let n = perms.len();
        let mut table = vec![0; n * n];
        for (i, s) in perms.iter().enumerate() {
            for (j, t) in perms.iter().enumerate() {
                let st: Vec<usize> = (0..k).map(|x| s[t[x]]).collect();
                table[i * n + j] = index(&st);
            }
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        GroupTable::new(n, &table, Some(labels)).expect("symmetric table is a group")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.index() * self.n + b.index()]
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inv[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n).map(ElementId::new)
    }

    /// The group as a one-unit structure with total multiplication and its inversion.
    pub fn to_structure(&self) -> StructureTable {
        let e = self.identity;
        let triples = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| (a, b, self.mul(a, b)))
            .collect();
        TableParts {
            n: self.n,
            labels: Some(self.labels.clone()),
            units: vec![e],
            alpha: vec![e; self.n],
            beta: vec![e; self.n],
            triples,
            inv: Some(self.inv.clone()),
            ..Default::default()
        }
        .build()
        .expect("group tables are well formed")
    }

    pub fn is_subgroup(&self, h: &[ElementId]) -> bool {
        let mut member = vec![false; self.n];
        for &x in h {
            if x.index() >= self.n {
                return false;
            }
            member[x.index()] = true;
        }
        member[self.identity.index()]
            && h.iter().all(|&a| member[self.inverse(a).index()])
            && h.iter().all(|&a| h.iter().all(|&b| member[self.mul(a, b).index()]))
    }

    /// All subgroups, each sorted, found by scanning every subset.
    pub fn subgroups(&self) -> Vec<Vec<ElementId>> {
        assert!(self.n <= 20, "subgroup scan is exhaustive over subsets");
        (0u32..1 << self.n)
            .map(|mask| self.elements().filter(|x| mask >> x.index() & 1 == 1).collect::<Vec<_>>())
            .filter(|h| self.is_subgroup(h))
            .collect()
    }

    /// The left cosets `gH` of a subgroup, each sorted, ordered by smallest element.
    pub fn left_cosets(&self, h: &[ElementId]) -> Vec<Vec<ElementId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for g in self.elements() {
            if seen[g.index()] {
                continue;
            }
            let mut coset: Vec<ElementId> = h.iter().map(|&x| self.mul(g, x)).collect();
            coset.sort();
            coset.dedup();
            for x in &coset {
                seen[x.index()] = true;
            }
            out.push(coset);
        }
        out
    }

    /// Every left transversal of `h` containing the identity, each sorted.
    pub fn left_transversals(&self, h: &[ElementId]) -> Vec<Vec<ElementId>> {
        let cosets = self.left_cosets(h);
        let mut out: Vec<Vec<ElementId>> = vec![Vec::new()];
        for coset in &cosets {
            let choices: Vec<ElementId> = if coset.contains(&self.identity) {
                vec![self.identity]
            } else {
                coset.clone()
            };
            out = out
                .into_iter()
                .flat_map(|p| {
                    choices.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        for s in &mut out {
            s.sort();
        }
        out
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = p[x];
        }
        s.push(')');
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_labels_and_order() {
        let g = GroupTable::symmetric(3);
        assert_eq!(g.labels(), ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        let a = g.find_label("(123)").unwrap();
        assert_eq!(g.mul(a, a), g.find_label("(132)").unwrap());
        assert_eq!(g.mul(a, g.inverse(a)), g.identity());
    }

    #[test]
    fn s3_has_six_subgroups() {
        let g = GroupTable::symmetric(3);
        let sizes: Vec<usize> = g.subgroups().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn transversal_count_matches_coset_product() {
        let g = GroupTable::symmetric(3);
        let h = vec![g.identity(), g.find_label("(12)").unwrap()];
        // three cosets of size two, identity coset fixed
        assert_eq!(g.left_transversals(&h).len(), 4);
    }

    #[test]
    fn rejects_non_group() {
        // 2x2 table without inverses
        assert!(GroupTable::new(2, &[0, 0, 0, 1], None).is_err());
        assert!(GroupTable::new(2, &[0, 1, 1, 0], None).is_ok());
    }
}
