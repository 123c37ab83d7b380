use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use class_spectrum::{divgraph::height_of_sorted, partitions, psi_set, sieve, spectrum, Convention, GroupKind};

fn bench_partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partitions");
    for m in [20usize, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| b.iter(|| partitions(black_box(m)).count()));
    }
    group.finish();
}

fn bench_spectrum(c: &mut Criterion) {
    c.bench_function("spectrum sym 30", |b| b.iter(|| spectrum(GroupKind::Sym, black_box(30)).unwrap()));
}

fn bench_psi_height(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi height");
    group.sample_size(20);
    for m in [6usize, 12, 18] {
        let n = 1345;
        let psi = psi_set(GroupKind::Sym, n, n - m, None).unwrap();
        group.bench_with_input(BenchmarkId::new("psi_set", m), &m, |b, &m| {
            b.iter(|| psi_set(GroupKind::Sym, n, n - m, None).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("height", m), &psi, |b, psi| {
            b.iter(|| height_of_sorted(psi.values(), Convention::Vertices))
        });
    }
    group.finish();
}

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("sieve 1e7", |b| b.iter(|| sieve(black_box(10_000_000)).pi(10_000_000)));
}

criterion_group!(benches, bench_partitions, bench_spectrum, bench_psi_height, bench_sieve);
criterion_main!(benches);
