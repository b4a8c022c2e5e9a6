use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use loopoid::analysis::{canonical_form, enumerate, EnumMode, EnumerationSpec};
use loopoid::axioms::{check_left_loopoid, check_loopoid, check_unities_associativity};
use loopoid::constructors::{pair_groupoid, phi_left_loopoid, OddPermutation};

fn checkers(c: &mut Criterion) {
    let phi = phi_left_loopoid(5, &OddPermutation::new(vec![0, 1, 3, 2, 4]).unwrap()).unwrap();
    let pair = pair_groupoid(6);
    c.bench_function("phi5/unities_associativity", |b| b.iter(|| check_unities_associativity(black_box(&phi))));
    c.bench_function("phi5/left_loopoid", |b| b.iter(|| check_left_loopoid(black_box(&phi))));
    c.bench_function("pair6/loopoid", |b| b.iter(|| check_loopoid(black_box(&pair))));
}

fn analysis(c: &mut Criterion) {
    let loops = enumerate(&EnumerationSpec::new(EnumMode::Loop, 5).up_to_iso()).unwrap();
    c.bench_function("canonical_form/order5_loops", |b| {
        b.iter(|| loops.iter().map(|g| canonical_form(black_box(g)).unwrap()).collect::<Vec<_>>())
    });
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("loops_order5_up_to_iso", |b| {
        b.iter(|| enumerate(black_box(&EnumerationSpec::new(EnumMode::Loop, 5).up_to_iso())).unwrap().len())
    });
    group.bench_function("semiloopoids_order3_labeled", |b| {
        b.iter(|| enumerate(black_box(&EnumerationSpec::new(EnumMode::Semiloopoid, 3))).unwrap().len())
    });
    group.finish();
}

criterion_group!(benches, checkers, analysis);
criterion_main!(benches);
