use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use restricted_congruence::oracle::{count_by_convolution, count_by_enumeration, DEFAULT_ENUMERATION_BUDGET};
use restricted_congruence::{count_solutions, ConstraintProfile};

fn routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    for (n, kappa) in [
        (12u64, vec![(1u64, 3u64)]),
        (30, vec![(1, 2), (2, 1), (5, 1)]),
        (60, vec![(1, 2), (4, 2)]),
    ] {
        let p = ConstraintProfile::new(n, kappa).unwrap();
        let label = p.to_string();
        group.bench_with_input(BenchmarkId::new("formula", &label), &p, |b, p| {
            b.iter(|| count_solutions(black_box(p), 1).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("convolution", &label), &p, |b, p| {
            b.iter(|| count_by_convolution(black_box(p), 1).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("enumeration", &label), &p, |b, p| {
            b.iter(|| count_by_enumeration(black_box(p), 1, DEFAULT_ENUMERATION_BUDGET).unwrap())
        });
    }
    group.finish();

    let big = ConstraintProfile::new(720720, [(1, 40), (2, 30), (13, 20), (720720, 10)]).unwrap();
    c.bench_function("formula n=720720 k=100", |b| {
        b.iter(|| count_solutions(black_box(&big), 7).unwrap())
    });
}

criterion_group!(benches, routes);
criterion_main!(benches);
