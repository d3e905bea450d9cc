use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use girth_core::*;
use std::hint::black_box;

fn instance(n: usize, p: f64, seed: u64) -> WeightedGraph {
    generate(&GenSpec::new(GenKind::ErdosRenyi { p, connected: true }, n, Weights::Int { max: 16 }), seed).unwrap()
}

fn bench_hbd(c: &mut Criterion) {
    let mut group = c.benchmark_group("hbd");
    for n in [256, 1024] {
        let g = instance(n, 0.05, 1);
        let t = exact_girth(&g).weight().unwrap();
        group.bench_with_input(BenchmarkId::new("single", n), &g, |b, g| b.iter(|| hbd(g, black_box(0), t)));
        group.bench_with_input(BenchmarkId::new("threshold_int", n), &g, |b, g| {
            b.iter(|| min_detecting_threshold_int(g, black_box(0), 1, 2 * 16 * n as u64))
        });
    }
    group.finish();
}

fn bench_hitting(c: &mut Criterion) {
    let mut group = c.benchmark_group("hitting");
    for n in [256, 1024, 4096] {
        let g = instance(n, 8.0 / n as f64, 2);
        group.bench_with_input(BenchmarkId::new("structure", n), &g, |b, g| {
            b.iter(|| build_hitting_structure(g, default_r(g.n())).unwrap())
        });
    }
    group.finish();
}

fn bench_algorithms(c: &mut Criterion) {
    let mut group = c.benchmark_group("algorithms");
    group.sample_size(10);
    for n in [128, 512] {
        let g = instance(n, 0.1, 3);
        group.bench_with_input(BenchmarkId::new("exact", n), &g, |b, g| b.iter(|| exact_girth(g)));
        group.bench_with_input(BenchmarkId::new("approx2", n), &g, |b, g| b.iter(|| subquadratic_approx(g).unwrap()));
        group.bench_with_input(BenchmarkId::new("approx2eps", n), &g, |b, g| b.iter(|| approx_general(g, 0.5).unwrap()));
        group.bench_with_input(BenchmarkId::new("poly", n), &g, |b, g| b.iter(|| poly_girth(g, &SmallGirth::default()).unwrap()));
        group.bench_with_input(BenchmarkId::new("dense8", n), &g, |b, g| b.iter(|| controlled_density_approx(g, 0.5).unwrap()));
        group.bench_with_input(BenchmarkId::new("approx4", n), &g, |b, g| b.iter(|| derandomized_4eps(g, 0.5).unwrap()));
    }
    group.finish();
}

fn bench_prefix(c: &mut Criterion) {
    let mut group = c.benchmark_group("prefix");
    for n in [256, 1024] {
        let g = instance(n, 0.5, 4);
        group.bench_with_input(BenchmarkId::new("lightest_k", n), &g, |b, g| b.iter(|| build_prefix_subgraph(g)));
        group.bench_with_input(BenchmarkId::new("find_c4", n), &g, |b, g| b.iter(|| find_c4(g)));
    }
    group.finish();
}

criterion_group!(benches, bench_hbd, bench_hitting, bench_algorithms, bench_prefix);
criterion_main!(benches);
