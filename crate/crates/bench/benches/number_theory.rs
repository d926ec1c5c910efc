use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dcl_core::number_theory::{
    carmichael_lambda, carmichael_numbers_up_to, factorize, generates_full_group, korselt_check,
    multiplicative_order, nth_prime,
};
use num_bigint::BigUint;

fn lambda_and_korselt(c: &mut Criterion) {
    let n = BigUint::from(561u32);
    c.bench_function("carmichael_lambda(561)", |b| b.iter(|| carmichael_lambda(black_box(&n))));
    c.bench_function("korselt_check(561)", |b| b.iter(|| korselt_check(black_box(&n))));
    let big = BigUint::from(9_999_999_967u64) * BigUint::from(2_305_843_009_213_693_951u64);
    c.bench_function("carmichael_lambda(94-bit)", |b| b.iter(|| carmichael_lambda(black_box(&big))));
}

fn factoring(c: &mut Criterion) {
    let mut group = c.benchmark_group("factorize");
    for (name, n) in [
        ("u64 semiprime", BigUint::from(4_294_967_291u64) * BigUint::from(4_294_967_279u64)),
        ("96-bit, 32-bit factor", BigUint::from(4_294_967_291u64) * BigUint::from(18_446_744_073_709_551_557u64)),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &n, |b, n| b.iter(|| factorize(n)));
    }
    group.finish();
}

fn orders(c: &mut Criterion) {
    let n = BigUint::from(1_000_000_007u64 * 998_244_353);
    let a = BigUint::from(3u32);
    c.bench_function("multiplicative_order(3, p*q)", |b| b.iter(|| multiplicative_order(black_box(&a), &n)));
    let gens = [BigUint::from(2u32), BigUint::from(5u32), BigUint::from(13u32)];
    let m = BigUint::from(561u32);
    c.bench_function("generates_full_group(561)", |b| b.iter(|| generates_full_group(black_box(&gens), &m)));
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    group.bench_function("carmichael_numbers_up_to(1e5)", |b| b.iter(|| carmichael_numbers_up_to(black_box(100_000))));
    group.bench_function("nth_prime(1e6), warm", |b| b.iter(|| nth_prime(black_box(1_000_000))));
    group.finish();
}

criterion_group!(benches, lambda_and_korselt, factoring, orders, scans);
criterion_main!(benches);
