use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use altrank_core::constructions::build;
use altrank_core::cpr::graph_to_generators;
use altrank_core::perm::{
    intersection, IntersectionOptions, IntersectionStrategy, StabilizerChain,
};
use altrank_core::verifier::{verify, VerifyOptions};

fn chains(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain");
    for (n, r) in [(13, 6), (19, 9), (24, 11)] {
        let (g, ..) = build(n, r, false).unwrap();
        let gens = graph_to_generators(&g).unwrap().into_generators();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{n}x{r}")),
            &gens,
            |b, gens| b.iter(|| StabilizerChain::new(black_box(gens)).unwrap()),
        );
    }
    group.finish();
}

fn intersections(c: &mut Criterion) {
    let (g, ..) = build(19, 5, false).unwrap();
    let gens = graph_to_generators(&g).unwrap().into_generators();
    let left = StabilizerChain::new(&gens[1..]).unwrap();
    let right = StabilizerChain::new(&gens[..gens.len() - 1]).unwrap();
    let mut group = c.benchmark_group("outer_parabolics_19x5");
    group.sample_size(10);
    for strategy in [
        IntersectionStrategy::CosetOrbit,
        IntersectionStrategy::Backtrack,
    ] {
        let opts = IntersectionOptions {
            threshold: 0,
            strategy,
        };
        group.bench_function(format!("{strategy:?}"), |b| {
            b.iter(|| intersection(black_box(&left), black_box(&right), &opts).unwrap())
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let opts = VerifyOptions {
        timings: false,
        ..VerifyOptions::default()
    };
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (n, r) in [(14, 6), (17, 8), (20, 9)] {
        group.bench_function(format!("{n}x{r}"), |b| {
            b.iter(|| verify(black_box(n), r, &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, chains, intersections, verification);
criterion_main!(benches);
