use std::hint::black_box;

use azumaya_bench::{matrices, unitary, units};
use azumaya_core::hilbert90::h90_witness;
use azumaya_core::norm_principle::{np_bruteforce_check, np_witness, pm_split};
use azumaya_core::{samples, RingSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    let f9 = samples::gaussian(3).unwrap().ring().clone();
    for (name, ring) in [("F7", RingSpec::prime_field(7).unwrap()), ("Z9", RingSpec::zmod(9).unwrap()), ("F9", f9)] {
        for n in [2, 4, 8] {
            let ms = matrices(&ring, n, 32, 1);
            group.bench_with_input(BenchmarkId::new(name, n), &ms, |b, ms| {
                b.iter(|| ms.iter().map(|m| m.char_poly().unwrap()).count())
            });
        }
    }
    group.finish();
}

fn reduced_norm(c: &mut Criterion) {
    let mut group = c.benchmark_group("nrd");
    let split = samples::m2_gaussian3([1, 0, 0, 1]).unwrap();
    let xs = units(&split, 64, 3);
    let table = split.algebra().to_table_form().unwrap();
    group.bench_function("split", |b| b.iter(|| xs.iter().map(|x| split.algebra().nrd(x).unwrap()).count()));
    // Same elements through center detection and root extraction.
    group.bench_function("table", |b| b.iter(|| xs.iter().map(|x| table.nrd(x).unwrap()).count()));
    group.finish();
}

fn witnesses(c: &mut Criterion) {
    let a = samples::m2_gaussian3([0, 1, 1, 0]).unwrap();
    let split = pm_split(&a).unwrap();
    let us = unitary(&a, 1);
    let xs = units(&a, 64, 5);
    c.bench_function("h90_witness", |b| b.iter(|| us.iter().map(|x| h90_witness(&a, x).unwrap()).count()));
    c.bench_function("np_witness", |b| b.iter(|| xs.iter().map(|x| np_witness(&split, x, 7).unwrap()).count()));
}

fn bruteforce(c: &mut Criterion) {
    let mut group = c.benchmark_group("np_bruteforce");
    group.sample_size(10);
    let a = samples::m2_gaussian3([1, 0, 0, 1]).unwrap();
    group.bench_function("M2(F3[i])", |b| b.iter(|| np_bruteforce_check(black_box(&a)).unwrap()));
    group.finish();
}

criterion_group!(benches, char_poly, reduced_norm, witnesses, bruteforce);
criterion_main!(benches);
