use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use iset_core::bounds::{lower_bound_log, sandwich, upper_bound_log};
use iset_core::count::{count, isp};
use iset_core::{Graph, Rational};

fn random_avg_degree(n: usize, avg: u32, seed: u64) -> Graph {
    let p = Rational::from((avg, n as u32 - 1));
    Graph::random(n, &p, seed).unwrap()
}

fn bench_exact_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_count");
    for &n in &[30usize, 50, 80] {
        let g = random_avg_degree(n, 3, 42);
        group.bench_with_input(BenchmarkId::new("avg_degree_3", n), &g, |b, g| {
            b.iter(|| count(black_box(g)).unwrap())
        });
    }
    let dense = Graph::random(28, &Rational::from((1, 3)), 7).unwrap();
    group.bench_function("n28_p_one_third", |b| {
        b.iter(|| count(black_box(&dense)).unwrap())
    });
    group.finish();
}

fn bench_polynomial(c: &mut Criterion) {
    let g = random_avg_degree(40, 3, 11);
    c.bench_function("isp_n40_avg_degree_3", |b| {
        b.iter(|| isp(black_box(&g)).unwrap())
    });
}

fn bench_bounds(c: &mut Criterion) {
    let g = random_avg_degree(200, 4, 3);
    let lambda = Rational::from(1);
    let mut group = c.benchmark_group("bounds_n200");
    group.bench_function("lower_256_bits", |b| {
        b.iter(|| lower_bound_log(black_box(&g), &lambda, 256))
    });
    group.bench_function("upper_256_bits", |b| {
        b.iter(|| upper_bound_log(black_box(&g), &lambda, 256))
    });
    group.finish();
}

fn bench_sandwich(c: &mut Criterion) {
    let g = random_avg_degree(24, 3, 5);
    let lambda = Rational::from((1, 2));
    c.bench_function("sandwich_n24", |b| {
        b.iter(|| sandwich(black_box(&g), &lambda, 256).unwrap())
    });
}

criterion_group!(
    benches,
    bench_exact_count,
    bench_polynomial,
    bench_bounds,
    bench_sandwich
);
criterion_main!(benches);
