use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

use k3lattice::clifford::TraceForm;
use k3lattice::enumeration::enumerate_lattices;
use k3lattice::lattice::{direct_sum_all, e8, hyperbolic_u, rank_one};
use k3lattice::roots::{min_polarization_degree, short_vectors};
use k3lattice::Parallelism;

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn bench_short_vectors(c: &mut Criterion) {
    let n = e8();
    let target = BigInt::from(4);
    let mut group = c.benchmark_group("short_vectors_e8_norm4");
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| short_vectors(black_box(&n), &target, mode).unwrap())
        });
    }
    group.finish();
}

fn bench_mindeg(c: &mut Criterion) {
    let n = direct_sum_all([&hyperbolic_u(), &rank_one(-2), &rank_one(-2)]);
    let mut group = c.benchmark_group("mindeg_u_a1_a1");
    group.sample_size(20);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| min_polarization_degree(black_box(&n), 12, 3, mode).unwrap())
        });
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_rank3_disc20");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_lattices(3, black_box(20), false, mode).unwrap())
        });
    }
    group.finish();
}

fn bench_trace_form(c: &mut Criterion) {
    let host = Arc::new(direct_sum_all([
        &hyperbolic_u(),
        &hyperbolic_u(),
        &hyperbolic_u(),
    ]));
    let mut group = c.benchmark_group("trace_form_u3");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| TraceForm::new(black_box(&host), mode).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_short_vectors,
    bench_mindeg,
    bench_enumerate,
    bench_trace_form
);
criterion_main!(benches);
