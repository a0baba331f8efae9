use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hecke_core::hecke::{self, AffineWeylGroup, HeckeAlgebra};
use hecke_core::nilorbits::{build_nqs, decompose, FieldOrbits};
use hecke_core::{partitions, QOrder, RootSystem, RootSystemType, SignConvention, WeylGroup};

fn root_systems(c: &mut Criterion) {
    c.bench_function("build E8", |b| b.iter(|| RootSystem::build(black_box(RootSystemType::of("E8")))));
    let rs = RootSystem::build(RootSystemType::of("E8")).unwrap();
    c.bench_function("structure constants E8", |b| {
        b.iter(|| rs.structure_constants(black_box(SignConvention::Positive)))
    });
}

fn weyl(c: &mut Criterion) {
    let rs = RootSystem::build(RootSystemType::of("F4")).unwrap();
    c.bench_function("enumerate W(F4)", |b| b.iter(|| WeylGroup::enumerate(&rs, 10_000_000).unwrap().order()));
    let mut g = c.benchmark_group("classes");
    g.sample_size(10);
    let rs = RootSystem::build(RootSystemType::of("E6")).unwrap();
    g.bench_function("conjugacy classes W(E6)", |b| {
        b.iter(|| WeylGroup::enumerate(&rs, 10_000_000).unwrap().conjugacy_class_count())
    });
    g.finish();
}

fn partition_numbers(c: &mut Criterion) {
    c.bench_function("p(500)", |b| b.iter(|| partitions::p(black_box(500))));
    c.bench_function("tau check n=40", |b| b.iter(|| partitions::check_tau(black_box(40))));
}

fn orbits(c: &mut Criterion) {
    let rs = RootSystem::build(RootSystemType::of("E8")).unwrap();
    let nm = build_nqs(&rs, QOrder::Finite(16)).unwrap();
    let sc = rs.structure_constants(SignConvention::Positive);
    let comps = decompose(&rs, &nm, &sc);
    let biggest = comps.iter().max_by_key(|m| m.dim()).unwrap();
    let mut g = c.benchmark_group("orbits");
    g.sample_size(10);
    g.bench_function("E8 o16 largest component over F17", |b| {
        b.iter(|| FieldOrbits::compute(&rs, &sc, &biggest.support, &nm.generators, 17, 12, 4_000_000).unwrap().orbits)
    });
    g.finish();
}

fn hecke_products(c: &mut Criterion) {
    let group = AffineWeylGroup::new(RootSystemType::of("B2")).unwrap();
    let alg = HeckeAlgebra::new(&group);
    let x = hecke::weight(&[2, -1]);
    let y = hecke::weight(&[-1, 2]);
    c.bench_function("theta product B2", |b| {
        b.iter(|| alg.mul(&alg.theta(black_box(&x)), &alg.theta(black_box(&y))).unwrap())
    });
}

criterion_group!(benches, root_systems, weyl, partition_numbers, orbits, hecke_products);
criterion_main!(benches);
