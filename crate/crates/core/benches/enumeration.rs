use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use distinguish::action::SymmetryAction;
use distinguish::verify::{default_grid, run, TheoremId};
use distinguish::{Budget, Graph};

fn modes() -> [(&'static str, Budget); 2] {
    [("sequential", Budget::default().sequential()), ("parallel", Budget::default())]
}

fn distinguishing_number(c: &mut Criterion) {
    let mut group = c.benchmark_group("distinguishing_number");
    group.sample_size(10);
    let graphs = [("petersen", Graph::petersen()), ("K4,5", Graph::complete_bipartite(4, 5).unwrap())];
    for (name, g) in &graphs {
        for (mode, budget) in modes() {
            let a = SymmetryAction::full(g, &budget).unwrap();
            group.bench_with_input(BenchmarkId::new(mode, name), &a, |b, a| {
                b.iter(|| a.distinguishing_number(black_box(&budget)).unwrap())
            });
        }
    }
    group.finish();
}

fn partition_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_counts");
    group.sample_size(10);
    let g = Graph::cycle(11).unwrap();
    for (mode, budget) in modes() {
        let a = SymmetryAction::full(&g, &budget).unwrap();
        group.bench_function(BenchmarkId::new(mode, "C11, k ≤ 4"), |b| b.iter(|| a.partition_counts(black_box(4), &budget).unwrap()));
    }
    group.finish();
}

fn colorings(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_colorings");
    group.sample_size(10);
    let g = Graph::petersen();
    for (mode, budget) in modes() {
        let a = SymmetryAction::full(&g, &budget).unwrap();
        group.bench_function(BenchmarkId::new(mode, "petersen, k = 3"), |b| b.iter(|| a.count_colorings(black_box(3), &budget).unwrap()));
    }
    group.finish();
}

fn verify_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for id in [TheoremId::RootedD, TheoremId::CoronaD] {
        for (mode, budget) in modes() {
            let grid = default_grid(id, &budget).unwrap();
            group.bench_function(BenchmarkId::new(mode, id.id()), |b| b.iter(|| run(id, grid.clone(), &budget)));
        }
    }
    group.finish();
}

criterion_group!(benches, distinguishing_number, partition_counts, colorings, verify_grid);
criterion_main!(benches);
