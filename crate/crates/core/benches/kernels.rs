//! Kernel benchmarks. With the `parallel` feature each kernel runs twice:
//! on a one-thread rayon pool (`seq`) and on the global pool (`par`).
//! `cargo bench --no-default-features` measures the plain sequential build.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use qvir::characters::{all_irreducible_characters, modular_check};
use qvir::extensions::scan_extensions;
use qvir::minimal_models::MinimalModel;
use qvir::qseries::{euler_product, partition_numbers};
use qvir::rational::rat;

#[cfg(feature = "parallel")]
fn modes() -> Vec<(&'static str, Option<rayon::ThreadPool>)> {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool");
    vec![("seq", Some(single)), ("par", None)]
}

#[cfg(feature = "parallel")]
fn in_mode<R: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn modes() -> Vec<(&'static str, Option<()>)> {
    vec![("seq", None)]
}

#[cfg(not(feature = "parallel"))]
fn in_mode<R>(_: &Option<()>, f: impl FnOnce() -> R) -> R {
    f()
}

fn series_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    let e = euler_product(1500, 1);
    let dense = e.invert().unwrap();
    for (mode, pool) in modes() {
        group.bench_function(BenchmarkId::new("mul_1500", mode), |b| {
            b.iter(|| in_mode(&pool, || black_box(dense.mul(&dense))))
        });
        group.bench_function(BenchmarkId::new("pow_rational_1000", mode), |b| {
            let base = euler_product(1000, 1);
            b.iter(|| in_mode(&pool, || black_box(base.pow_rational(&rat(-22, 5)).unwrap())))
        });
    }
    group.bench_function("partition_numbers_5000", |b| b.iter(|| black_box(partition_numbers(5000))));
    group.finish();
}

fn character_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("characters");
    group.sample_size(10);
    let model = MinimalModel::new(5, 6).unwrap();
    for (mode, pool) in modes() {
        group.bench_function(BenchmarkId::new("all_characters_5_6_1000", mode), |b| {
            b.iter(|| in_mode(&pool, || black_box(all_irreducible_characters(&model, 1000))))
        });
        group.bench_function(BenchmarkId::new("modular_check_3_4_500", mode), |b| {
            b.iter(|| in_mode(&pool, || black_box(modular_check(3, 4, Complex64::new(0.0, 1.0), 500).unwrap())))
        });
        group.bench_function(BenchmarkId::new("scan_5_6_bound_4", mode), |b| {
            b.iter(|| in_mode(&pool, || black_box(scan_extensions(5, 6, 4, 300).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, series_kernels, character_kernels);
criterion_main!(benches);
