use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use nonassoc::builtin::builtin;
use nonassoc::fl::{exp_identity_check, fl_mul, FLElement};
use nonassoc::identities::{check_identity, Mode};
use nonassoc::near::kalscheuer::kalscheuer_mul;
use nonassoc::near::pnr::{pnr_mul, random_word};
use nonassoc::near::{ApproxQuaternion, NearFieldParams};
use nonassoc::octonion::ExactOctonion;
use nonassoc::scalar::random_vector;

fn octonions(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (x, y) = (ExactOctonion::random(&mut rng), ExactOctonion::random(&mut rng));
    c.bench_function("exact octonion product", |b| b.iter(|| black_box(&x).mul(black_box(&y))));
}

fn structure_products(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for name in ["H3", "H4"] {
        let a = builtin(name).unwrap();
        let (x, y) = (random_vector(&mut rng, a.dim()), random_vector(&mut rng, a.dim()));
        c.bench_function(&format!("{name} product"), |b| b.iter(|| a.mul_vec(black_box(&x), black_box(&y))));
    }
}

fn identity_checks(c: &mut Criterion) {
    let h3 = builtin("H3").unwrap();
    let mut g = c.benchmark_group("identity checks");
    g.sample_size(10);
    g.bench_function("H3 jordan-identity, 20 trials", |b| {
        b.iter(|| check_identity(&h3, "jordan-identity", Mode::Randomized { trials: 20, seed: 1 }).unwrap())
    });
    g.finish();
}

fn near_structures(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = NearFieldParams::with_w(1.0);
    let (x, y) = (ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng));
    c.bench_function("kalscheuer product", |b| b.iter(|| kalscheuer_mul(black_box(&x), black_box(&y), &p)));
    let (f, g) = (random_word(&mut rng, 4), random_word(&mut rng, 4));
    c.bench_function("near-ring product", |b| b.iter(|| pnr_mul(black_box(&f), black_box(&g)).unwrap()));
}

fn fundamental_length(c: &mut Criterion) {
    let x = FLElement::monomial(20, 40).unwrap();
    c.bench_function("x^20 x^20", |b| b.iter(|| fl_mul(black_box(&x), black_box(&x)).unwrap()));
    let mut g = c.benchmark_group("exponential identity");
    g.sample_size(10);
    g.bench_function("total degree 12", |b| b.iter(|| exp_identity_check(12)));
    g.finish();
}

criterion_group!(kernels, octonions, structure_products, identity_checks, near_structures, fundamental_length);
criterion_main!(kernels);
