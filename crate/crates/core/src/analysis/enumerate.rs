//! Exhaustive search over partial multiplication tables.
//!
//! A configuration fixes the unit set and the projections `α`, `β`. Cells of
//! the form `(α(g), g)` and `(g, β(g))` are forced to `g`; every other cell is
//! either undefined or holds an element, subject to rows and columns never
//! repeating a value (injective translations). Loopoid mode additionally
//! restricts defined cells to `β(g) = α(h)` with values in the matching
//! `α`/`β` fibres, which unities associativity forces; survivors are then
//! filtered by the full loopoid check.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::canon::{canonical_representative, encode, CanonicalForm};
use super::AnalysisError;
use crate::axioms::check_loopoid;
use crate::model::{ElementId, StructureTable, TableParts};

pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;
const RELATIONAL_CAP: usize = 4;
const LOOP_CAP: usize = 6;
const HARD_CAP: usize = 15;
const NONE: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    Semiloopoid,
    Loopoid,
    Loop,
}

impl FromStr for EnumMode {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "semiloopoid" => Ok(EnumMode::Semiloopoid),
            "loopoid" => Ok(EnumMode::Loopoid),
            "loop" => Ok(EnumMode::Loop),
            other => Err(AnalysisError::InvalidSpec(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Limits {
    /// Search nodes before giving up; `None` means [`DEFAULT_NODE_BUDGET`].
    pub max_nodes: Option<u64>,
    /// Lift the default size caps (4 for relational modes, 6 for loops).
    pub allow_oversize: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    /// Fixed unit subset; `None` ranges over all non-empty subsets.
    pub units: Option<Vec<ElementId>>,
    pub mode: EnumMode,
    pub up_to_iso: bool,
    pub limits: Limits,
}

impl EnumerationSpec {
    pub fn new(mode: EnumMode, n: usize) -> Self {
        EnumerationSpec { n, units: None, mode, up_to_iso: false, limits: Limits::default() }
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_iso = true;
        self
    }

    pub fn with_units(mut self, units: Vec<ElementId>) -> Self {
        self.units = Some(units);
        self
    }
}

#[derive(Debug, Clone)]
struct Config {
    units: Vec<usize>,
    alpha: Vec<u8>,
    beta: Vec<u8>,
}

#[derive(Debug, Clone, Copy)]
struct FreeCell {
    row: usize,
    col: usize,
    allow_none: bool,
    mask: u16,
}

struct Shared {
    budget: u64,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

#[derive(Default)]
struct Found {
    iso: BTreeMap<CanonicalForm, StructureTable>,
    labeled: Vec<(Vec<u8>, StructureTable)>,
}

/// All structures of the requested class, in sorted order of their (canonical,
/// when `up_to_iso`) encodings.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<StructureTable>, AnalysisError> {
    let n = spec.n;
    let cap = match spec.mode {
        EnumMode::Loop => LOOP_CAP,
        _ => RELATIONAL_CAP,
    };
    if n == 0 {
        return Err(AnalysisError::InvalidSpec("carrier size must be positive".into()));
    }
    if n > HARD_CAP || (n > cap && !spec.limits.allow_oversize) {
        return Err(AnalysisError::SizeCapExceeded { n, cap: if n > HARD_CAP { HARD_CAP } else { cap } });
    }
    let configs = configurations(spec)?;
    let shared = Shared {
        budget: spec.limits.max_nodes.unwrap_or(DEFAULT_NODE_BUDGET),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    // split at the first branching cell: at most n + 1 choices there
    let tasks: Vec<(usize, usize)> =
        (0..configs.len()).flat_map(|c| (0..=n).map(move |i| (c, i))).collect();
    let results: Vec<Found> = tasks
        .par_iter()
        .map(|&(c, first)| run_task(spec, &configs[c], first, &shared))
        .collect();

    let mut out: Vec<StructureTable> = if spec.up_to_iso {
        let mut all = BTreeMap::new();
        for f in results {
            all.extend(f.iso);
        }
        all.into_values().collect()
    } else {
        let mut all: Vec<(Vec<u8>, StructureTable)> = results.into_iter().flat_map(|f| f.labeled).collect();
        all.sort_by(|a, b| a.0.cmp(&b.0));
        all.into_iter().map(|(_, t)| t).collect()
    };
    if shared.aborted.load(Ordering::Relaxed) {
        out.shrink_to_fit();
        return Err(AnalysisError::BudgetExceeded { budget: shared.budget, partial: out });
    }
    Ok(out)
}

fn configurations(spec: &EnumerationSpec) -> Result<Vec<Config>, AnalysisError> {
    let n = spec.n;
    let unit_sets: Vec<Vec<usize>> = match &spec.units {
        Some(u) => {
            let mut u: Vec<usize> = u.iter().map(|x| x.index()).collect();
            u.sort_unstable();
            u.dedup();
            if u.is_empty() || u.iter().any(|&x| x >= n) {
                return Err(AnalysisError::InvalidSpec("unit subset must be non-empty and in range".into()));
            }
            if spec.mode == EnumMode::Loop && u.len() != 1 {
                return Err(AnalysisError::InvalidSpec("a loop has exactly one unit".into()));
            }
            vec![u]
        }
        None => match (spec.mode, spec.up_to_iso) {
            (EnumMode::Loop, true) => vec![vec![0]],
            (EnumMode::Loop, false) => (0..n).map(|e| vec![e]).collect(),
            (_, true) => (1..=n).map(|k| (0..k).collect()).collect(),
            (_, false) => (1u32..1 << n)
                .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
                .collect(),
        },
    };
    let mut configs = Vec::new();
    for units in unit_sets {
        let non_units: Vec<usize> = (0..n).filter(|x| !units.contains(x)).collect();
        let k = units.len();
        let slots = 2 * non_units.len();
        let total = k.pow(slots as u32);
        for code in 0..total {
            let mut alpha: Vec<u8> = (0..n as u8).collect();
            let mut beta = alpha.clone();
            let mut c = code;
            for &g in &non_units {
                alpha[g] = units[c % k] as u8;
                c /= k;
                beta[g] = units[c % k] as u8;
                c /= k;
            }
            if spec.mode == EnumMode::Loop {
                // loops only admit the constant maps onto their single unit
                debug_assert!(alpha.iter().all(|&a| a as usize == units[0]));
            }
            configs.push(Config { units: units.clone(), alpha, beta });
        }
    }
    Ok(configs)
}

struct Frame<'a> {
    spec: &'a EnumerationSpec,
    cfg: &'a Config,
    table: Vec<u8>,
    row_used: Vec<u16>,
    col_used: Vec<u16>,
    free: Vec<FreeCell>,
    shared: &'a Shared,
    found: Found,
}

fn run_task(spec: &EnumerationSpec, cfg: &Config, first: usize, shared: &Shared) -> Found {
    let Some(mut frame) = Frame::new(spec, cfg, shared) else {
        return Found::default();
    };
    if frame.free.is_empty() {
        if first == 0 {
            frame.leaf();
        }
        return frame.found;
    }
    let choices = frame.choices(0);
    if let Some(&v) = choices.get(first) {
        frame.assign(0, v);
        frame.search(1);
    }
    frame.found
}

impl<'a> Frame<'a> {
    fn new(spec: &'a EnumerationSpec, cfg: &'a Config, shared: &'a Shared) -> Option<Self> {
        let n = spec.n;
        let mut table = vec![NONE; n * n];
        let mut row_used = vec![0u16; n];
        let mut col_used = vec![0u16; n];
        let mut forced: Vec<(usize, usize, u8)> = Vec::new();
        for g in 0..n {
            forced.push((cfg.alpha[g] as usize, g, g as u8));
            forced.push((g, cfg.beta[g] as usize, g as u8));
        }
        if spec.mode == EnumMode::Loop {
            let e = cfg.units[0];
            for g in 0..n {
                forced.push((e, g, g as u8));
                forced.push((g, e, g as u8));
            }
        }
        for (r, c, v) in forced {
            let cell = &mut table[r * n + c];
            if *cell == v {
                continue;
            }
            if *cell != NONE || row_used[r] >> v & 1 == 1 || col_used[c] >> v & 1 == 1 {
                return None;
            }
            *cell = v;
            row_used[r] |= 1 << v;
            col_used[c] |= 1 << v;
        }
        let all: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut free = Vec::new();
        for r in 0..n {
            for c in 0..n {
                if table[r * n + c] != NONE {
                    continue;
                }
                let cell = match spec.mode {
                    EnumMode::Semiloopoid => FreeCell { row: r, col: c, allow_none: true, mask: all },
                    EnumMode::Loop => FreeCell { row: r, col: c, allow_none: false, mask: all },
                    EnumMode::Loopoid => {
                        if cfg.beta[r] != cfg.alpha[c] {
                            continue;
                        }
                        let mask = (0..n)
                            .filter(|&k| cfg.alpha[k] == cfg.alpha[r] && cfg.beta[k] == cfg.beta[c])
                            .fold(0u16, |m, k| m | 1 << k);
                        FreeCell { row: r, col: c, allow_none: false, mask }
                    }
                };
                free.push(cell);
            }
        }
        Some(Frame { spec, cfg, table, row_used, col_used, free, shared, found: Found::default() })
    }

    fn choices(&self, idx: usize) -> Vec<u8> {
        let f = self.free[idx];
        let blocked = self.row_used[f.row] | self.col_used[f.col];
        let mut out = Vec::with_capacity(self.spec.n + 1);
        if f.allow_none {
            out.push(NONE);
        }
        out.extend((0..self.spec.n as u8).filter(|&v| f.mask >> v & 1 == 1 && blocked >> v & 1 == 0));
        out
    }

    fn assign(&mut self, idx: usize, v: u8) {
        let f = self.free[idx];
        self.table[f.row * self.spec.n + f.col] = v;
        if v != NONE {
            self.row_used[f.row] |= 1 << v;
            self.col_used[f.col] |= 1 << v;
        }
    }

    fn unassign(&mut self, idx: usize) {
        let f = self.free[idx];
        let cell = &mut self.table[f.row * self.spec.n + f.col];
        let v = std::mem::replace(cell, NONE);
        if v != NONE {
            self.row_used[f.row] &= !(1 << v);
            self.col_used[f.col] &= !(1 << v);
        }
    }

    fn search(&mut self, idx: usize) {
        if self.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        if idx == self.free.len() {
            self.leaf();
            return;
        }
        for v in self.choices(idx) {
            if self.shared.nodes.fetch_add(1, Ordering::Relaxed) >= self.shared.budget {
                self.shared.aborted.store(true, Ordering::Relaxed);
                return;
            }
            self.assign(idx, v);
            self.search(idx + 1);
            self.unassign(idx);
        }
    }

    fn leaf(&mut self) {
        let n = self.spec.n;
        let e = ElementId::new;
        let triples = (0..n * n)
            .filter(|&i| self.table[i] != NONE)
            .map(|i| (e(i / n), e(i % n), e(self.table[i] as usize)))
            .collect();
        let table = TableParts {
            n,
            labels: None,
            units: self.cfg.units.iter().map(|&u| e(u)).collect(),
            alpha: self.cfg.alpha.iter().map(|&a| e(a as usize)).collect(),
            beta: self.cfg.beta.iter().map(|&b| e(b as usize)).collect(),
            triples,
            ..Default::default()
        }
        .build()
        .expect("enumerated tables are well formed");
        match self.spec.mode {
            EnumMode::Loopoid => {
                if !check_loopoid(&table).passed() {
                    return;
                }
            }
            EnumMode::Semiloopoid => debug_assert!(crate::axioms::check_semiloopoid(&table).passed()),
            EnumMode::Loop => debug_assert!(crate::axioms::check_loop(&table).passed()),
        }
        if self.spec.up_to_iso {
            let (form, rep) = canonical_representative(&table, HARD_CAP).expect("within hard cap");
            self.found.iso.entry(form).or_insert(rep);
        } else {
            let id: Vec<ElementId> = table.elements().collect();
            self.found.labeled.push((encode(&table, &id), table));
        }
    }
}
