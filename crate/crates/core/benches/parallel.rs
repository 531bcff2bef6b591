use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use morikawa::algebra::Rational;
use morikawa::galois::sample_cycle_types_with;
use morikawa::geometry::{brute_force_mu_with, Scene};
use morikawa::Strategy;

const STRATEGIES: [(&str, Strategy); 2] =
    [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn theta_sweep(c: &mut Criterion) {
    let scene = Scene::new(4.0).unwrap();
    let mut group = c.benchmark_group("theta_sweep");
    group.sample_size(10);
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, 400), &strategy, |b, &s| {
            b.iter(|| brute_force_mu_with(&scene, 400, s).unwrap())
        });
    }
    group.finish();
}

fn prime_sampling(c: &mut Criterion) {
    let k0 = Rational::from_integer(2.into());
    let mut group = c.benchmark_group("prime_sampling");
    group.sample_size(10);
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, 200), &strategy, |b, &s| {
            b.iter(|| sample_cycle_types_with(&k0, 200, 1, s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, theta_sweep, prime_sampling);
criterion_main!(benches);
