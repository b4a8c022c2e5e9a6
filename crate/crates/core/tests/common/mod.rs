//! Helpers shared by the integration tests. The oracles here deliberately use
//! nothing from the library except plain data types, so they can check it.

#![allow(dead_code)]

use std::collections::BTreeSet;

use loopoid::constructors::{GroupTable, OddPermutation};
use loopoid::{ElementId, StructureTable};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<ElementId> {
    let mut p: Vec<ElementId> = (0..n).map(ElementId::new).collect();
    p.shuffle(rng);
    p
}

pub fn phi_cube() -> OddPermutation {
    OddPermutation::new(vec![0, 1, 3, 2, 4]).unwrap()
}

pub fn z(n: usize) -> StructureTable {
    GroupTable::cyclic(n).to_structure()
}

/// The left loop on `S = {e, (123), (132)}` for `H = {e, (12)}` in `S₃`.
pub fn s3_baer_loop() -> StructureTable {
    let g = GroupTable::symmetric(3);
    let l = |s: &str| g.find_label(s).unwrap();
    loopoid::constructors::baer_transversal_loop(&g, &[l("e"), l("(12)")], &[l("e"), l("(123)"), l("(132)")])
        .unwrap()
}

/// Loops of order `n` up to isomorphism, counted over all Latin squares whose
/// first row and column are the identity `0`. Classes are told apart by the
/// least relabeled table over all permutations fixing `0`.
pub fn latin_loop_classes(n: usize) -> usize {
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        table[x] = x;
        table[x * n] = x;
    }
    let mut squares = Vec::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &(a, b) in &free {
            table[a * n + b] = c % n;
            c /= n;
        }
        let latin = (0..n).all(|i| {
            let row: BTreeSet<usize> = (0..n).map(|j| table[i * n + j]).collect();
            let col: BTreeSet<usize> = (0..n).map(|j| table[j * n + i]).collect();
            row.len() == n && col.len() == n
        });
        if latin {
            squares.push(table.clone());
        }
    }
    let perms = permutations_fixing_zero(n);
    let classes: BTreeSet<Vec<usize>> = squares
        .iter()
        .map(|t| {
            perms
                .iter()
                .map(|s| {
                    let mut r = vec![0; n * n];
                    for a in 0..n {
                        for b in 0..n {
                            r[s[a] * n + s[b]] = s[t[a * n + b]];
                        }
                    }
                    r
                })
                .min()
                .unwrap()
        })
        .collect();
    classes.len()
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut out);
    out.into_iter()
        .map(|p| std::iter::once(0).chain(p).collect())
        .collect()
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Tallies over every labeled single-valued semiloopoid on `n` elements.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CensusTally {
    pub semiloopoids: usize,
    pub unities_associative: usize,
    /// Unities associative but some `β(g) = α(h)` pair left undefined.
    pub ua_with_gap: usize,
    /// Pairs (structure, inversion map) satisfying both cancellation laws.
    pub inverse_pairs: usize,
}

/// Brute force over every unit set, projection pair and partial table.
pub fn semiloopoid_census(n: usize) -> CensusTally {
    const U: usize = usize::MAX;
    let mut tally = CensusTally::default();
    for mask in 1u32..1 << n {
        let units: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let non_units: Vec<usize> = (0..n).filter(|i| !units.contains(i)).collect();
        let k = units.len();
        for code in 0..k.pow(2 * non_units.len() as u32) {
            let mut alpha: Vec<usize> = (0..n).collect();
            let mut beta = alpha.clone();
            let mut c = code;
            for &g in &non_units {
                alpha[g] = units[c % k];
                c /= k;
                beta[g] = units[c % k];
                c /= k;
            }
            for t in 0..(n + 1).pow((n * n) as u32) {
                let mut cells = vec![U; n * n];
                let mut c = t;
                for cell in cells.iter_mut() {
                    let v = c % (n + 1);
                    c /= n + 1;
                    if v < n {
                        *cell = v;
                    }
                }
                let m = |a: usize, b: usize| cells[a * n + b];
                let units_ok = (0..n).all(|g| m(alpha[g], g) == g && m(g, beta[g]) == g);
                let inj = (0..n).all(|a| {
                    let row: Vec<usize> = (0..n).map(|b| m(a, b)).filter(|&v| v != U).collect();
                    let col: Vec<usize> = (0..n).map(|b| m(b, a)).filter(|&v| v != U).collect();
                    row.iter().collect::<BTreeSet<_>>().len() == row.len()
                        && col.iter().collect::<BTreeSet<_>>().len() == col.len()
                });
                if !(units_ok && inj) {
                    continue;
                }
                tally.semiloopoids += 1;
                let get = |a: usize, b: usize| if a == U || b == U { U } else { m(a, b) };
                let is_unit = |x: usize| mask >> x & 1 == 1;
                let ua = (0..n).all(|x| {
                    (0..n).all(|y| {
                        (0..n).all(|z| {
                            !(is_unit(x) || is_unit(y) || is_unit(z))
                                || get(get(x, y), z) == get(x, get(y, z))
                        })
                    })
                });
                if ua {
                    tally.unities_associative += 1;
                    let gap = (0..n).any(|g| (0..n).any(|h| beta[g] == alpha[h] && m(g, h) == U));
                    if gap {
                        tally.ua_with_gap += 1;
                    }
                }
                let inverses: usize = (0..n)
                    .map(|a| {
                        (0..n)
                            .filter(|&c| {
                                (0..n).all(|b| m(a, b) == U || get(c, m(a, b)) == b)
                                    && (0..n).all(|u| m(u, a) == U || get(m(u, a), c) == u)
                            })
                            .count()
                    })
                    .product();
                tally.inverse_pairs += inverses;
            }
        }
    }
    tally
}

/// `p_S(x)`: the member of `S` whose left coset `sH` contains `x`.
pub fn baer_projection_oracle(g: &GroupTable, h: &[ElementId], s: &[ElementId]) -> Vec<ElementId> {
    g.elements()
        .map(|x| {
            let owners: Vec<ElementId> =
                s.iter().copied().filter(|&r| h.iter().any(|&k| g.mul(r, k) == x)).collect();
            assert_eq!(owners.len(), 1, "S is not a left transversal");
            owners[0]
        })
        .collect()
}
