use std::hint::black_box;

use bdh_bench::{instance, SIZES, TWIN_PROBS};
use bdh_core::{apply_sequence, compute_bdh_diagram, fast_compute_bdh_diagram};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn by_size(c: &mut Criterion) {
    let mut group = c.benchmark_group("by_size");
    for &n in &SIZES {
        let seq = instance(n, 0.5);
        let m = apply_sequence(&seq).unwrap().m();
        group.throughput(Throughput::Elements(m as u64));
        group.bench_with_input(BenchmarkId::new("explicit", n), &seq, |b, s| {
            b.iter(|| compute_bdh_diagram(black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("compact", n), &seq, |b, s| {
            b.iter(|| fast_compute_bdh_diagram(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn by_twin_prob(c: &mut Criterion) {
    let mut group = c.benchmark_group("by_twin_prob");
    for &p in &TWIN_PROBS {
        let seq = instance(10_000, p);
        group.bench_with_input(BenchmarkId::new("explicit", p), &seq, |b, s| {
            b.iter(|| compute_bdh_diagram(black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("compact", p), &seq, |b, s| {
            b.iter(|| fast_compute_bdh_diagram(black_box(s)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, by_size, by_twin_prob);
criterion_main!(benches);
