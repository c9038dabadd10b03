//! Benchmarks for the hot paths: axiom verification, representation-level
//! ring relations, quantization, and raw tensor multiplication.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cartier_bench::{dense_e1_spec, dense_e2_spec};
use cartier_core::cartier_ring::{check_cartier_ring_relations, ModuleRep};
use cartier_core::families::build_en;
use cartier_core::precartier::{quantize, verify_precartier, Scale};
use cartier_core::quasibialgebra::{verify_quasibialgebra, verify_quasitriangular};

fn bench_verification(c: &mut Criterion) {
    let p = build_en(&dense_e2_spec(), 0);
    c.bench_function("verify quasi-bialgebra axioms, E(2)", |b| {
        b.iter(|| verify_quasibialgebra(black_box(p.base())))
    });
    c.bench_function("verify quasitriangularity, E(2)", |b| {
        b.iter(|| verify_quasitriangular(black_box(p.qt())))
    });
    c.bench_function("verify pre-Cartier axioms, E(2)", |b| {
        b.iter(|| verify_precartier(black_box(&p)))
    });
}

fn bench_ring_relations(c: &mut Criterion) {
    let p = build_en(&dense_e1_spec(), 0);
    let module = ModuleRep::regular(p.algebra());
    c.bench_function("ring relations on 3 strands, E(1) regular module", |b| {
        b.iter(|| check_cartier_ring_relations(black_box(&p), black_box(&module), 3).unwrap())
    });
    c.bench_function("ring relations on 4 strands, E(1) regular module", |b| {
        b.iter(|| check_cartier_ring_relations(black_box(&p), black_box(&module), 4).unwrap())
    });
}

fn bench_quantization(c: &mut Criterion) {
    let p = build_en(&dense_e2_spec(), 0);
    c.bench_function("quantize to order 3, E(2)", |b| {
        b.iter(|| quantize(black_box(&p), Scale::Half, 3).unwrap())
    });
}

fn bench_tensor_product(c: &mut Criterion) {
    let p = build_en(&dense_e2_spec(), 3);
    let r = p.qt().rmatrix();
    let chi13 = p.chi().embed_legs(&[1, 3], 3).unwrap();
    let r12 = r.embed_legs(&[1, 2], 3).unwrap();
    c.bench_function("triple-leg tensor multiply, E(2) at order 3", |b| {
        b.iter(|| black_box(&chi13) * black_box(&r12))
    });
}

criterion_group!(
    benches,
    bench_verification,
    bench_ring_relations,
    bench_quantization,
    bench_tensor_product
);
criterion_main!(benches);
