use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use splinum::numbers::{apostol_bernoulli_poly, eulerian_row, ApostolMethod};
use splinum::spline::{bspline_leibniz, bspline_segment, bspline_via_bernstein};
use splinum::suite::run_suite;

fn segments(c: &mut Criterion) {
    let mut g = c.benchmark_group("segment");
    for n in [4usize, 8, 12] {
        let p = n as i64 / 2;
        g.bench_with_input(BenchmarkId::new("schoenberg", n), &n, |b, &n| b.iter(|| bspline_segment(black_box(n), p)));
        g.bench_with_input(BenchmarkId::new("bernstein", n), &n, |b, &n| {
            b.iter(|| bspline_via_bernstein(black_box(n), p).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("leibniz", n), &n, |b, &n| {
            b.iter(|| bspline_leibniz(black_box(n - 1), p, 1).unwrap())
        });
    }
    g.finish();
}

fn apostol(c: &mut Criterion) {
    let mut g = c.benchmark_group("apostol_bernoulli_poly");
    for m in ApostolMethod::ALL {
        g.bench_function(m.name(), |b| b.iter(|| apostol_bernoulli_poly(black_box(8), m).unwrap()));
    }
    g.finish();
}

fn eulerian(c: &mut Criterion) {
    c.bench_function("eulerian_row/40", |b| b.iter(|| eulerian_row(black_box(40))));
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("exact_max_n_6", |b| b.iter(|| run_suite(black_box("eulerian-*"), 6).unwrap()));
    g.finish();
}

criterion_group!(benches, segments, apostol, eulerian, suite);
criterion_main!(benches);
