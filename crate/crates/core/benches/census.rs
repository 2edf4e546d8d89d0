use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use circtrans::census::run_census_with;
use circtrans::oracle::{build_class_graph, GraphCache};

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n_max in [8, 10] {
        for (label, parallel) in [("sequential", false), ("parallel", true)] {
            group.bench_with_input(BenchmarkId::new(label, n_max), &n_max, |b, &n_max| {
                b.iter(|| run_census_with(&GraphCache::new(), n_max, parallel).unwrap())
            });
        }
    }
    group.finish();
}

fn all_pairs(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_pairs");
    group.sample_size(10);
    for (n, ones) in [(12, 5), (14, 6)] {
        let graph = build_class_graph(n, ones).unwrap();
        let id = format!("{n}/{ones}");
        group.bench_function(BenchmarkId::new("sequential", &id), |b| b.iter(|| graph.all_pairs_sequential()));
        group.bench_function(BenchmarkId::new("parallel", &id), |b| b.iter(|| graph.all_pairs()));
    }
    group.finish();
}

criterion_group!(benches, census, all_pairs);
criterion_main!(benches);
