use criterion::{criterion_group, criterion_main, Criterion};
use dhl_core::combinat::{Bipartition, IntVector, Partition};
use dhl_core::dhall::generic_multiply;
use dhl_core::dlambda::{
    double_hl_with_order, to_dhl_basis, vmon_multiply, AlgebraElement, Basis, PeelOrder, Side,
};
use dhl_core::genfun::{verify_identity, Identity};
use dhl_core::pieri::pieri_horizontal;
use dhl_core::ratfun::{RatFun, Variable};
use std::hint::black_box;

fn bip(plus: &[u32], minus: &[u32]) -> Bipartition {
    Bipartition::new(
        Partition::new(plus.to_vec()),
        Partition::new(minus.to_vec()),
    )
}

// the MinusFirst order is never cached, so this times the raw recursion
fn bench_double_hl(c: &mut Criterion) {
    let plus = IntVector::new(vec![2, 2, 1]);
    let minus = IntVector::new(vec![2, 1]);
    c.bench_function("double_hl 2,2,1|2,1 (uncached)", |b| {
        b.iter(|| double_hl_with_order(black_box(&plus), black_box(&minus), PeelOrder::MinusFirst))
    });
}

fn bench_to_dhl(c: &mut Criterion) {
    let x = AlgebraElement::term(Basis::Vmon, bip(&[2, 1], &[1]), RatFun::one(Variable::T));
    let y = AlgebraElement::term(Basis::Vmon, bip(&[1, 1], &[1]), RatFun::one(Variable::T));
    let product = vmon_multiply(&x, &y);
    c.bench_function("to_dhl_basis of a size-7 product", |b| {
        b.iter(|| to_dhl_basis(black_box(&product)))
    });
}

fn bench_pieri(c: &mut Criterion) {
    let rho = Partition::new(vec![2, 1]);
    let nu = Partition::new(vec![1]);
    c.bench_function("pieri_horizontal 2,1|1 r=3", |b| {
        b.iter(|| pieri_horizontal(black_box(&rho), black_box(&nu), 3, Side::Plus))
    });
}

fn bench_derived_product(c: &mut Criterion) {
    let a = AlgebraElement::term(Basis::HallU, bip(&[2, 1], &[1]), RatFun::one(Variable::T));
    let b2 = AlgebraElement::term(Basis::HallU, bip(&[1, 1], &[1]), RatFun::one(Variable::T));
    c.bench_function("generic_multiply u[2,1|1] * u[1,1|1]", |b| {
        b.iter(|| generic_multiply(black_box(&a), black_box(&b2)))
    });
}

fn bench_genfun(c: &mut Criterion) {
    c.bench_function("verify_identity transition_theta deg 4", |b| {
        b.iter(|| verify_identity(Identity::TransitionTheta, 4))
    });
}

criterion_group!(
    benches,
    bench_double_hl,
    bench_to_dhl,
    bench_pieri,
    bench_derived_product,
    bench_genfun
);
criterion_main!(benches);
