use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::model::ElementId;

/// How a witness violates its axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WitnessKind {
    /// A required element, pair or triple is absent.
    Missing,
    /// A conditional equality whose left side is defined but right side is not.
    LeftOnly,
    /// A conditional equality whose right side is defined but left side is not.
    RightOnly,
    /// Both sides defined, values differ.
    Unequal,
    /// Two inputs with the same output.
    NotInjective,
    /// A target element that is never reached.
    NotSurjective,
    /// A value lands outside its required set.
    OutOfRange,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::Missing => "missing",
            WitnessKind::LeftOnly => "left-only",
            WitnessKind::RightOnly => "right-only",
            WitnessKind::Unequal => "unequal",
            WitnessKind::NotInjective => "not-injective",
            WitnessKind::NotSurjective => "not-surjective",
            WitnessKind::OutOfRange => "out-of-range",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub axiom: String,
    pub elements: Vec<ElementId>,
    pub kind: WitnessKind,
    pub detail: String,
}

/// Per-axiom flags with counterexamples for every failed axiom.
///
/// Flags are exact; witness lists are capped per axiom.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub flags: BTreeMap<String, bool>,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Conjunction of all flags.
    pub fn passed(&self) -> bool {
        self.flags.values().all(|&f| f)
    }

    pub fn flag(&self, axiom: &str) -> Option<bool> {
        self.flags.get(axiom).copied()
    }

    pub fn witnesses_for<'a>(&'a self, axiom: &'a str) -> impl Iterator<Item = &'a Witness> + 'a {
        self.witnesses.iter().filter(move |w| w.axiom == axiom)
    }

    /// Records the outcome of one axiom. `witnesses` must be empty iff the axiom holds.
    pub fn record(&mut self, axiom: &str, witnesses: Vec<Witness>) {
        let ok = witnesses.is_empty();
        let entry = self.flags.entry(axiom.to_string()).or_insert(true);
        *entry &= ok;
        self.witnesses.extend(witnesses);
    }

    /// Adds every flag and witness of `other`; flags present in both are conjoined.
    pub fn merge(&mut self, other: CheckReport) {
        for (k, v) in other.flags {
            *self.flags.entry(k).or_insert(true) &= v;
        }
        for w in other.witnesses {
            if !self.witnesses.contains(&w) {
                self.witnesses.push(w);
            }
        }
    }
}

/// Collects witnesses for a single axiom up to a cap, remembering whether any occurred.
pub(crate) struct WitnessSink {
    axiom: &'static str,
    cap: usize,
    found: bool,
    out: Vec<Witness>,
}

impl WitnessSink {
    pub(crate) fn new(axiom: &'static str, cap: usize) -> Self {
        WitnessSink { axiom, cap, found: false, out: Vec::new() }
    }

    pub(crate) fn push(&mut self, kind: WitnessKind, elements: Vec<ElementId>, detail: impl Into<String>) {
        self.found = true;
        if self.out.len() < self.cap.max(1) {
            self.out.push(Witness {
                axiom: self.axiom.to_string(),
                elements,
                kind,
                detail: detail.into(),
            });
        }
    }

    pub(crate) fn is_full(&self) -> bool {
        self.out.len() >= self.cap.max(1)
    }

    pub(crate) fn finish(self, report: &mut CheckReport) {
        debug_assert_eq!(self.found, !self.out.is_empty());
        report.record(self.axiom, self.out);
    }
}

/// The structure classes that have a decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassName {
    LeftSemiloopoid,
    RightSemiloopoid,
    Semiloopoid,
    LeftInverseSemiloopoid,
    RightInverseSemiloopoid,
    InverseSemiloopoid,
    UnitiesAssociative,
    AnchorCompatible,
    LeftLoopoid,
    RightLoopoid,
    Loopoid,
    Groupoid,
    Loop,
    LeftLoop,
    InverseLoop,
    Quasigroup,
}

impl ClassName {
    pub const ALL: [ClassName; 16] = [
        ClassName::LeftSemiloopoid,
        ClassName::RightSemiloopoid,
        ClassName::Semiloopoid,
        ClassName::LeftInverseSemiloopoid,
        ClassName::RightInverseSemiloopoid,
        ClassName::InverseSemiloopoid,
        ClassName::UnitiesAssociative,
        ClassName::AnchorCompatible,
        ClassName::LeftLoopoid,
        ClassName::RightLoopoid,
        ClassName::Loopoid,
        ClassName::Groupoid,
        ClassName::Loop,
        ClassName::LeftLoop,
        ClassName::InverseLoop,
        ClassName::Quasigroup,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::LeftSemiloopoid => "left-semiloopoid",
            ClassName::RightSemiloopoid => "right-semiloopoid",
            ClassName::Semiloopoid => "semiloopoid",
            ClassName::LeftInverseSemiloopoid => "left-inverse-semiloopoid",
            ClassName::RightInverseSemiloopoid => "right-inverse-semiloopoid",
            ClassName::InverseSemiloopoid => "inverse-semiloopoid",
            ClassName::UnitiesAssociative => "unities-associative",
            ClassName::AnchorCompatible => "anchor-compatible",
            ClassName::LeftLoopoid => "left-loopoid",
            ClassName::RightLoopoid => "right-loopoid",
            ClassName::Loopoid => "loopoid",
            ClassName::Groupoid => "groupoid",
            ClassName::Loop => "loop",
            ClassName::LeftLoop => "left-loop",
            ClassName::InverseLoop => "inverse-loop",
            ClassName::Quasigroup => "quasigroup",
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown structure class {0:?}")]
pub struct UnknownClass(pub String);

impl FromStr for ClassName {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}
