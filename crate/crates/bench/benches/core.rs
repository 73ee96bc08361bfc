use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use lumbral_core::algebra::{rat, EgfSeries};
use lumbral_core::kernels::Lambda;
use lumbral_core::triangles::TableKind;
use lumbral_core::umbral::{connection_coefficients, sheffer_generate, ShefferPair};
use lumbral_core::verify::{verify_with, IdentityId, SuiteConfig};

fn lambda() -> Lambda {
    Lambda::new(rat(1, 3)).unwrap()
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for n in [16usize, 32] {
        let l = lambda();
        let f = ShefferPair::bell(&l, n).f().clone();
        group.bench_with_input(BenchmarkId::new("comp_inverse", n), &f, |b, f| {
            b.iter(|| black_box(f.comp_inverse().unwrap()))
        });
        let g = EgfSeries::from_fn(n + 1, |i| rat(i as i64 + 1, 2));
        group.bench_with_input(BenchmarkId::new("compose", n), &(g, f), |b, (g, f)| {
            b.iter(|| black_box(g.compose(f).unwrap()))
        });
    }
    group.finish();
}

fn triangles(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangles");
    let l = lambda();
    for kind in [TableKind::DegStirling2, TableKind::DegWhitney2, TableKind::RWhitney1] {
        group.bench_function(kind.name(), |b| b.iter(|| black_box(kind.build(24, &l, 2, 1).unwrap())));
    }
    group.finish();
}

fn sheffer(c: &mut Criterion) {
    let l = lambda();
    let bell = ShefferPair::bell(&l, 13);
    let dowling = ShefferPair::dowling(2, &l, 13).unwrap();
    c.bench_function("sheffer_generate/bell/12", |b| b.iter(|| black_box(sheffer_generate(&bell, 12).unwrap())));
    c.bench_function("connection/dowling-bell/12", |b| {
        b.iter(|| black_box(connection_coefficients(&dowling, &bell, 12).unwrap()))
    });
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let config = SuiteConfig::default();
    for id in [IdentityId::BellTriangleSum, IdentityId::DowlingInBell] {
        group.bench_function(id.name(), |b| b.iter(|| black_box(verify_with(id, 6, &config).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, series, triangles, sheffer, verify);
criterion_main!(benches);
