use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use relcomm_core::commutators::{ideal_lattice, loop_commutator_sweep, relcomm_loops, relcomm_oracle, relcomm_words};
use relcomm_core::corpus;
use relcomm_core::varieties::verbal_subobject;
use relcomm_core::{Budget, Ideal, VarietyDescriptor};

fn verbal(c: &mut Criterion) {
    let mut g = c.benchmark_group("verbal_subobject");
    let varieties = [
        VarietyDescriptor::ab(),
        VarietyDescriptor::nil(2).unwrap(),
        VarietyDescriptor::sol(2).unwrap(),
    ];
    for name in ["s3", "d4", "a4"] {
        let a = corpus::bundled(name).unwrap().algebra;
        for v in &varieties {
            g.bench_with_input(BenchmarkId::new(v.name(), name), &a, |b, a| {
                b.iter(|| verbal_subobject(black_box(a), v).unwrap())
            });
        }
    }
    g.finish();
}

fn commutators(c: &mut Criterion) {
    let mut g = c.benchmark_group("commutator");
    let a4 = corpus::bundled("a4").unwrap().algebra;
    let full = Ideal::full(&a4);
    let ab = VarietyDescriptor::ab();
    g.bench_function("words/a4", |b| b.iter(|| relcomm_words(&full, &full, &ab).unwrap()));
    g.bench_function("oracle/a4", |b| {
        b.iter(|| relcomm_oracle(&full, &full, &ab, Budget::default()).unwrap())
    });
    let l5 = corpus::bundled("l5").unwrap().algebra;
    let whole = Ideal::full(&l5);
    g.bench_function("loops/l5", |b| b.iter(|| relcomm_loops(&whole, &whole).unwrap()));
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    let loops = corpus::loops_of_order(6).unwrap();
    let last = &loops[loops.len() - 1];
    g.bench_function("ideal_lattice/order6", |b| {
        b.iter(|| ideal_lattice(&last.algebra, Budget::default()).unwrap())
    });
    g.bench_function("loop_commutators/order5", |b| {
        b.iter(|| {
            for e in corpus::loops_of_order(5).unwrap() {
                loop_commutator_sweep(&e.id, &e.algebra, Budget::default()).unwrap();
            }
        })
    });
    g.finish();
}

criterion_group!(benches, verbal, commutators, sweeps);
criterion_main!(benches);
