use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use splitfactor::{build_by_enumeration, build_by_formula, two_switch_degree};
use splitfactor_bench::{example, random_instances};

fn construction(c: &mut Criterion) {
    let s = example();
    c.bench_function("formula/example", |b| {
        b.iter(|| build_by_formula(black_box(&s)))
    });

    let mut group = c.benchmark_group("construction");
    for n in [4usize, 8, 12] {
        let graphs = random_instances(n, n, 64);
        group.bench_with_input(BenchmarkId::new("formula", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(build_by_formula).count())
        });
        group.bench_with_input(BenchmarkId::new("enumeration", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(build_by_enumeration).count())
        });
        group.bench_with_input(BenchmarkId::new("switch_degree", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(two_switch_degree).sum::<u64>())
        });
    }
    group.finish();
}

criterion_group!(benches, construction);
criterion_main!(benches);
