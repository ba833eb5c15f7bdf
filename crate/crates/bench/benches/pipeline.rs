use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use domtilt::classify::{canonical_injective_pd1, classify};
use domtilt::exactla::{Matrix, PrimeField, DEFAULT_PRIME};
use domtilt::fixtures;
use domtilt::homo::{ext_dims, min_inj_coresolution};
use domtilt::qh::{is_quasi_hereditary, PartialOrder};
use domtilt::repmod::{decompose, Module};
use domtilt::tilt::tilting_chain;
use domtilt_bench::algebra;

const BOUND: usize = 8;

fn random_matrix(n: usize, seed: u64) -> Matrix {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..DEFAULT_PRIME as i64)).collect();
    Matrix::from_i64(&f, n, n, &entries)
}

fn linear_algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [32, 64, 128] {
        let m = random_matrix(n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    g.finish();
}

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for name in ["e1", "e3_n5", "aus_kx2"] {
        let file = fixtures::file(name);
        g.bench_function(name, |b| b.iter(|| black_box(file.build(None, None).unwrap())));
    }
    g.finish();
}

fn homological(c: &mut Criterion) {
    let mut g = c.benchmark_group("homological");
    for name in ["e1", "e4", "e3_n5"] {
        let a = algebra(name);
        let reg = Module::regular(&a);
        g.bench_function(format!("coresolution/{name}"), |b| b.iter(|| black_box(min_inj_coresolution(&reg, BOUND))));
    }
    let a = algebra("e2");
    let i = Module::injective(&a, 1);
    let s = Module::simple(&a, 1);
    g.bench_function("ext/e2", |b| b.iter(|| black_box(ext_dims(&i, &s, 3))));
    g.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    for name in ["e4", "e3_n5"] {
        let a = algebra(name);
        let m = Module::regular(&a).plus(&Module::dual_regular(&a));
        g.bench_function(name, |b| b.iter(|| black_box(decompose(&m))));
    }
    g.finish();
}

fn pipelines(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    let e1 = algebra("e1");
    let q = domtilt::repmod::ModuleEnv::from_file(&e1, &fixtures::file("e1")).unwrap().get("Q").unwrap().clone();
    let reg = Module::regular(&e1);
    g.bench_function("tilting_chain/e1", |b| b.iter(|| black_box(tilting_chain(&reg, &q, BOUND).unwrap())));
    let e4 = algebra("e4");
    let i = canonical_injective_pd1(&e4);
    let reg4 = Module::regular(&e4);
    g.bench_function("tilting_chain/e4", |b| b.iter(|| black_box(tilting_chain(&reg4, &i, BOUND).unwrap())));
    for name in ["e4", "e3_n5"] {
        let a = algebra(name);
        g.bench_function(format!("classify/{name}"), |b| b.iter(|| black_box(classify(&a, BOUND).unwrap())));
    }
    let ord = PartialOrder::parse(e4.quiver(), "2<3<1<4").unwrap();
    g.bench_function("qh/e4", |b| b.iter(|| black_box(is_quasi_hereditary(&e4, &ord, BOUND).unwrap())));
    g.finish();
}

criterion_group!(benches, linear_algebra, build, homological, decomposition, pipelines);
criterion_main!(benches);
