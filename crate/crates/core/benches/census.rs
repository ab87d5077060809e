use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use genergy::census::{run_census, CensusInput};
use genergy::enumerate::connected_graphs;
use genergy::{ToleranceConfig, Workers};

fn modes() -> [(&'static str, Workers); 2] {
    [("sequential", Workers::ONE), ("parallel", Workers::available())]
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [6, 7] {
        for (mode, workers) in modes() {
            group.bench_with_input(BenchmarkId::new(mode, n), &n, |b, &n| {
                b.iter(|| connected_graphs(black_box(n), workers).unwrap().len())
            });
        }
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    let tol = ToleranceConfig::default();
    for n in [6, 7] {
        let input = CensusInput::builtin(n, Workers::available()).unwrap();
        for (mode, workers) in modes() {
            group.bench_with_input(BenchmarkId::new(mode, n), &input, |b, input| {
                b.iter(|| run_census(black_box(input), &tol, workers, false).unwrap().row.total)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, classification);
criterion_main!(benches);
