use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use superq::entanglement::{concurrence_gram, reduced_boson_density};
use superq::fock::displacement_operator;
use superq::superstate::super_coherent_state;
use superq::uncertainty::{fibonacci_record_with, QuadratureOracle};
use superq::{CoherentParams, ExtendedComplex, SuperQubitParams, C64};

fn params(alpha: C64) -> CoherentParams {
    let zeta = ExtendedComplex::finite(C64::new(2.0, 1.0)).unwrap();
    CoherentParams::new(alpha, SuperQubitParams::new(1.1, 0.7, zeta).unwrap()).unwrap()
}

fn displacement(c: &mut Criterion) {
    let mut group = c.benchmark_group("displacement_operator");
    for dim in [36, 64, 96, 128] {
        group.bench_with_input(BenchmarkId::from_parameter(dim), &dim, |b, &dim| {
            b.iter(|| displacement_operator(black_box(C64::new(1.2, -0.3)), dim).unwrap())
        });
    }
    group.finish();
}

fn coherent_state(c: &mut Criterion) {
    let p = params(C64::new(1.2, -0.3));
    c.bench_function("super_coherent_state/64", |b| {
        b.iter(|| super_coherent_state(black_box(p), 64).unwrap())
    });
}

fn entanglement(c: &mut Criterion) {
    let state = super_coherent_state(params(C64::new(-1.5, 1.3)), 64).unwrap();
    c.bench_function("concurrence_gram/64", |b| {
        b.iter(|| concurrence_gram(black_box(&state)).unwrap())
    });
    c.bench_function("reduced_density_entropy/64", |b| {
        b.iter(|| {
            reduced_boson_density(black_box(&state))
                .unwrap()
                .entropy_bits()
        })
    });
}

fn fibonacci(c: &mut Criterion) {
    let oracle = QuadratureOracle::new(64).unwrap();
    c.bench_function("fibonacci_records/3..=20", |b| {
        b.iter(|| {
            (3..=20)
                .map(|n| {
                    fibonacci_record_with(n, &oracle, 64)
                        .unwrap()
                        .dispersion_numeric
                })
                .sum::<f64>()
        })
    });
}

criterion_group!(
    benches,
    displacement,
    coherent_state,
    entanglement,
    fibonacci
);
criterion_main!(benches);
