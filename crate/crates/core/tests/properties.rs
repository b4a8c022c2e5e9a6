mod common;

use std::sync::OnceLock;

use loopoid::analysis::{canonical_form, enumerate, isomorphic, relabel, EnumMode, EnumerationSpec};
use loopoid::axioms::{check_morphism, classify, Checker, MorphismData};
use loopoid::constructors::{pair_groupoid, phi_left_loopoid, product_loop_pair_groupoid};
use loopoid::io::{parse, print};
use loopoid::{infer_structure, ClassName, ElementId, StructureTable, WitnessKind};
use proptest::prelude::*;

/// Labeled semiloopoids up to order 3 plus a few constructed structures.
fn corpus() -> &'static [StructureTable] {
    static CORPUS: OnceLock<Vec<StructureTable>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = Vec::new();
        for n in 1..=3 {
            all.extend(enumerate(&EnumerationSpec::new(EnumMode::Semiloopoid, n)).unwrap());
        }
        for n in 1..=4 {
            all.extend(enumerate(&EnumerationSpec::new(EnumMode::Loop, n).up_to_iso()).unwrap());
        }
        all.push(pair_groupoid(2));
        all.push(product_loop_pair_groupoid(&common::z(2), 2).unwrap());
        all
    })
}

fn structure() -> impl Strategy<Value = StructureTable> {
    (0..corpus().len()).prop_map(|i| corpus()[i].clone())
}

fn with_permutation() -> impl Strategy<Value = (StructureTable, Vec<ElementId>)> {
    (structure(), any::<u64>()).prop_map(|(g, seed)| {
        let p = common::random_permutation(&mut common::rng(seed), g.n());
        (g, p)
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_relabeling((g, sigma) in with_permutation()) {
        let h = relabel(&g, &sigma);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn relabeling_is_an_isomorphism((g, sigma) in with_permutation()) {
        let h = relabel(&g, &sigma);
        let f = isomorphic(&g, &h).expect("relabeled copy is isomorphic");
        prop_assert!(check_morphism(&g, &h, &f).unwrap().passed());
        let back = f.inverse(&h).unwrap();
        prop_assert!(check_morphism(&h, &g, &back).unwrap().passed());
        let direct = MorphismData::from_element_map(&g, sigma);
        prop_assert!(check_morphism(&g, &h, &direct).unwrap().passed());
    }

    #[test]
    fn inference_recovers_projections(g in structure()) {
        let h = infer_structure(g.triples(), g.n()).unwrap();
        prop_assert_eq!(h.units(), g.units());
        prop_assert_eq!(h.alpha_map(), g.alpha_map());
        prop_assert_eq!(h.beta_map(), g.beta_map());
    }

    #[test]
    fn print_parse_round_trip((g, sigma) in with_permutation()) {
        let g = relabel(&g, &sigma);
        let text = print(&g);
        let back = parse(&text).unwrap();
        prop_assert_eq!(print(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn class_lattice(g in structure()) {
        let f = classify(&g);
        let imp = |a: ClassName, b: ClassName| !f[&a] || f[&b];
        use ClassName::*;
        for (a, b) in [
            (Groupoid, Loopoid), (Loopoid, LeftLoopoid), (Loopoid, RightLoopoid),
            (Loopoid, UnitiesAssociative), (AnchorCompatible, UnitiesAssociative),
            (LeftLoopoid, Semiloopoid), (Semiloopoid, LeftSemiloopoid), (Semiloopoid, RightSemiloopoid),
            (Loop, LeftLoop), (Loop, Quasigroup), (Loop, Loopoid),
        ] {
            prop_assert!(imp(a, b), "{} holds but {} does not", a, b);
        }
    }

    #[test]
    fn isomorphism_agrees_with_canonical_form(g in structure(), h in structure()) {
        let same_form = canonical_form(&g).unwrap() == canonical_form(&h).unwrap();
        prop_assert_eq!(isomorphic(&g, &h).is_some(), same_form);
    }

    #[test]
    fn associativity_witnesses_are_genuine(g in structure()) {
        let report = Checker::new(usize::MAX).unities_associativity(&g);
        let m = g.mul_table().unwrap();
        let get = |a: Option<ElementId>, b: Option<ElementId>| a.zip(b).and_then(|(a, b)| m.get(a, b));
        for w in report.witnesses_for("unities-associativity") {
            let [x, y, z] = w.elements[..] else { panic!("triple expected") };
            prop_assert!(g.is_unit(x) || g.is_unit(y) || g.is_unit(z));
            let lhs = get(get(Some(x), Some(y)), Some(z));
            let rhs = get(Some(x), get(Some(y), Some(z)));
            match w.kind {
                WitnessKind::LeftOnly => prop_assert!(lhs.is_some() && rhs.is_none()),
                WitnessKind::RightOnly => prop_assert!(lhs.is_none() && rhs.is_some()),
                WitnessKind::Unequal => prop_assert!(lhs.is_some() && rhs.is_some() && lhs != rhs),
                other => prop_assert!(false, "unexpected kind {:?}", other),
            }
        }
        prop_assert_eq!(report.flag("unities-associativity"), Some(report.witnesses_for("unities-associativity").next().is_none()));
    }
}

#[test]
fn up_to_iso_outputs_are_pairwise_distinct() {
    for mode in [EnumMode::Semiloopoid, EnumMode::Loopoid] {
        for n in 1..=3 {
            let reps = enumerate(&EnumerationSpec::new(mode, n).up_to_iso()).unwrap();
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    assert!(isomorphic(a, b).is_none(), "{mode:?} order {n}");
                }
            }
        }
    }
}

#[test]
fn anchor_witnesses_on_phi_are_genuine() {
    let g = phi_left_loopoid(5, &common::phi_cube()).unwrap();
    let report = Checker::new(usize::MAX).anchor_compatibility(&g);
    assert_eq!(report.flag("anchor-target"), Some(false));
    assert_eq!(report.flag("anchor-source"), Some(true));
    let m = g.mul_table().unwrap();
    for w in report.witnesses_for("anchor-target") {
        let gh = m.get(w.elements[0], w.elements[1]).unwrap();
        assert_ne!(g.beta(gh), g.beta(w.elements[1]));
    }
}
