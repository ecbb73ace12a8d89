use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cpdist_bench::{book_distance, book_rmat_nc, order};
use cpdist_core::{char_poly_exact, det_exact};

fn bareiss(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_exact");
    for (n, b) in [(5, 2), (8, 5), (10, 5)] {
        let d = book_distance(n, b);
        group.bench_with_input(BenchmarkId::from_parameter(order(n, b)), &d, |bench, d| {
            bench.iter(|| det_exact(black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn faddeev_leverrier(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly_exact");
    group.sample_size(20);
    for (n, b) in [(5, 2), (8, 3), (10, 5)] {
        let r = book_rmat_nc(n, b);
        group.bench_with_input(BenchmarkId::from_parameter(r.rows()), &r, |bench, r| {
            bench.iter(|| char_poly_exact(black_box(r)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bareiss, faddeev_leverrier);
criterion_main!(benches);
