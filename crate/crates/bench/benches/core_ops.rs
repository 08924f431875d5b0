//! Hot paths: power-subalgebra closure, enrichment, the spectrum, and the
//! symbolic chain. Sizes are picked so a run finishes in seconds while the
//! closure and quotient costs still dominate.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use km_forge::{
    delta_min, enumerate_fragment, free_one_generator, km_completion, one_step, sigma, spectrum,
    FiniteHeytingAlgebra, FinitePoset,
};

const CAP: usize = 1 << 20;

fn bench_one_step(c: &mut Criterion) {
    let chain5 = FiniteHeytingAlgebra::chain(5);
    c.bench_function("one_step/chain5/bot", |b| {
        b.iter(|| one_step(black_box(&chain5), 0, CAP).unwrap())
    });
}

fn bench_free(c: &mut Criterion) {
    let chain3 = FiniteHeytingAlgebra::chain(3);
    c.bench_function("free_one_generator/chain3", |b| {
        b.iter(|| free_one_generator(black_box(&chain3), CAP).unwrap())
    });
}

fn bench_km_completion(c: &mut Criterion) {
    let chain4 = FiniteHeytingAlgebra::chain(4);
    c.bench_function("km_completion/chain4", |b| {
        b.iter(|| km_completion(black_box(&chain4), 2, CAP).unwrap())
    });
}

fn bench_duality(c: &mut Criterion) {
    let b8 = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(3)).unwrap();
    c.bench_function("spectrum_sigma/boolean8", |b| {
        b.iter(|| {
            let spec = spectrum(black_box(&b8)).unwrap();
            let iso = sigma(black_box(&b8)).unwrap();
            (spec.len(), iso.map.len())
        })
    });
}

fn bench_delta_table(c: &mut Criterion) {
    let b8 = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(3)).unwrap();
    c.bench_function("delta_min/boolean8/full_table", |b| {
        b.iter(|| {
            (0..b8.size())
                .map(|a| delta_min(black_box(&b8), a))
                .collect::<Vec<_>>()
        })
    });
}

fn bench_omega(c: &mut Criterion) {
    c.bench_function("omega/enumerate_fragment/depth2", |b| {
        b.iter(|| enumerate_fragment(black_box(2), &[]).len())
    });
}

criterion_group!(
    benches,
    bench_one_step,
    bench_free,
    bench_km_completion,
    bench_duality,
    bench_delta_table,
    bench_omega
);
criterion_main!(benches);
