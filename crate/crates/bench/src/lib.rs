//! Criterion benchmarks for the hot paths of `fdpi-core`.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use fdpi_core::{primes_up_to, quartic_roots, scan_to_vec, sqrt_mod, BiquadraticField, Prime};

fn modular(c: &mut Criterion) {
    let primes: Vec<Prime> = primes_up_to(200_000)
        .into_iter()
        .filter(|p| p.get() > 100_000)
        .collect();
    // p ≡ 1 mod 2^k exercises the Tonelli–Shanks loop
    let deep = Prime::new(998_244_353).unwrap();

    c.bench_function("sqrt_mod/primes_100k_200k", |b| {
        b.iter(|| {
            primes
                .iter()
                .map(|&p| sqrt_mod(black_box(1_234_567), p).len())
                .sum::<usize>()
        })
    });
    c.bench_function("sqrt_mod/two_adic", |b| {
        b.iter(|| sqrt_mod(black_box(5), deep))
    });
    c.bench_function("quartic_roots/primes_100k_200k", |b| {
        b.iter(|| {
            primes
                .iter()
                .map(|&p| quartic_roots(black_box(50), black_box(155), p).len())
                .sum::<usize>()
        })
    });
}

fn factor_base(c: &mut Criterion) {
    let field = BiquadraticField::new(50, 155).unwrap();
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for pmax in [10_000u64, 100_000, 1_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(pmax), &pmax, |b, &pmax| {
            b.iter(|| scan_to_vec(&field, None, pmax).unwrap().len())
        });
    }
    group.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    modular(c);
    factor_base(c);
}
