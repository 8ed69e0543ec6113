//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). Every check
//! is exact; the printed timings are informational.

use dhl_core::combinat::{bipartitions_up_to, Bipartition, Partition};
use dhl_core::dlambda::{
    double_hl_bipartition, from_dhl_basis, mirror_check, mul_generator, to_dhl_basis,
    vmon_multiply, AlgebraElement, Basis, MirrorIdentity, Side,
};
use dhl_core::genfun::{verify_identity, Identity};
use dhl_core::ratfun::{LaurentPoly, RatFun, Variable};
use dhl_core::verify::{run_suite, SuiteOptions};
use std::time::Instant;

fn report(criterion: &str, start: Instant, pass: bool) {
    println!(
        "criterion {criterion}: {} ({:.2?})",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed()
    );
    assert!(pass, "criterion {criterion} failed");
}

fn opts(max_size: u32) -> SuiteOptions {
    SuiteOptions {
        max_size: Some(max_size),
        max_degree: None,
        seed: 0,
    }
}

#[test]
fn criterion_01_double_hl_two_routes() {
    let start = Instant::now();
    let one = Partition::row(1);
    let bip = Bipartition::new(one.clone(), one.clone());

    // route 1: the operator recursion
    let recursion = double_hl_bipartition(&bip);

    // route 2: invert the horizontal Pieri rule
    // V_{-,(1)} v_1^+ = V_{(1),(1)} + (1-t) V_{-,-}
    let product = mul_generator(
        &double_hl_bipartition(&Bipartition::new(Partition::empty(), one.clone())),
        Side::Plus,
        1,
    );
    let correction = AlgebraElement::one(Basis::Vmon, Variable::T)
        .scale_laurent(&LaurentPoly::one_minus_power(Variable::T, 1));
    let inverted = product.sub(&correction);

    // frozen value: v_1^+ v_1^- + (t - 1)
    let mut expected = AlgebraElement::term(Basis::Vmon, bip, RatFun::one(Variable::T));
    let mut t_minus_one = LaurentPoly::one_minus_power(Variable::T, 1);
    t_minus_one = t_minus_one.neg();
    expected.add_term(Bipartition::empty(), RatFun::from_laurent(t_minus_one));

    report(
        "1 (V_{(1),(1)} via recursion and via inverted Pieri)",
        start,
        recursion == inverted && recursion == expected,
    );
}

#[test]
fn criterion_02_horizontal_pieri() {
    let start = Instant::now();
    let r = run_suite("pieri-horizontal", &opts(4)).unwrap();
    for f in &r.failures {
        eprintln!("  {f}");
    }
    report(
        "2 (horizontal Pieri, sizes <= 4, r <= 3)",
        start,
        r.passed(),
    );
}

#[test]
fn criterion_03_vertical_pieri() {
    let start = Instant::now();
    let r = run_suite("pieri-vertical", &opts(3)).unwrap();
    for f in &r.failures {
        eprintln!("  {f}");
    }
    report("3 (vertical Pieri, sizes <= 3, r <= 3)", start, r.passed());
}

#[test]
fn criterion_04_mirror_identities() {
    let start = Instant::now();
    let mut pass = true;
    for first in dhl_core::combinat::partitions_up_to(3) {
        for second in dhl_core::combinat::partitions_up_to(3) {
            for bound in 0..=3 {
                pass &= mirror_check(MirrorIdentity::I, &first, &second, bound);
                pass &= mirror_check(MirrorIdentity::II, &first, &second, bound);
            }
        }
    }
    report(
        "4 (mirror identities I and II, sizes <= 3, strips <= 3)",
        start,
        pass,
    );
}

#[test]
fn criterion_05_hall_oracle() {
    let start = Instant::now();
    let r = run_suite("hall-oracle", &opts(4)).unwrap();
    for f in &r.failures {
        eprintln!("  {f}");
    }
    report(
        "5 (Hall polynomials vs submodule counts, |lambda| <= 4, q in {2,3})",
        start,
        r.passed(),
    );
}

#[test]
fn criterion_06_table1() {
    let start = Instant::now();
    let r = run_suite("table1", &SuiteOptions::default()).unwrap();
    for f in &r.failures {
        eprintln!("  {f}");
    }
    report(
        "6 (all 16 rows of the multiplication table, formal q)",
        start,
        r.passed(),
    );
}

#[test]
fn criterion_07_isomorphism() {
    let start = Instant::now();
    let r = run_suite("dhall-iso", &opts(3)).unwrap();
    for f in &r.failures {
        eprintln!("  {f}");
    }
    report(
        "7 (Phi(a*b) = Phi(a)Phi(b) on Vhat pairs, sizes <= 3)",
        start,
        r.passed(),
    );
}

#[test]
fn criterion_08_schur_specialization() {
    let start = Instant::now();
    let r = run_suite("schur-t0", &opts(5)).unwrap();
    for f in &r.failures {
        eprintln!("  {f}");
    }
    report(
        "8 (Schur-Laurent determinant = V at t=0, total size <= 5)",
        start,
        r.passed(),
    );
}

#[test]
fn criterion_09_generating_function_identities() {
    let start = Instant::now();
    let mut pass = true;
    for id in Identity::ALL {
        let t0 = Instant::now();
        let rep = verify_identity(id, 6);
        println!(
            "  identity {}: {} ({:.2?})",
            id.name(),
            if rep.pass() { "pass" } else { "fail" },
            t0.elapsed()
        );
        pass &= rep.pass();
    }
    report(
        "9 (all generating-function identities, total degree 6, formal v)",
        start,
        pass,
    );
}

#[test]
fn criterion_10_triangularity_and_round_trip() {
    let start = Instant::now();
    let mut pass = true;
    for bip in bipartitions_up_to(6) {
        let v = double_hl_bipartition(&bip);
        pass &= v.coeff(&bip).is_some_and(|c| c.is_one());
        for (other, _) in v.terms() {
            if other != &bip {
                pass &= dhl_core::combinat::strictly_dominates(other, &bip);
            }
        }
        let as_dhl = AlgebraElement::term(Basis::Dhl, bip.clone(), RatFun::one(Variable::T));
        pass &= to_dhl_basis(&from_dhl_basis(&as_dhl)) == as_dhl;
    }
    // round trip of a denser element: (v_{(2),(1)} + v_{(1,1),-})^2-ish mix
    let mut x = AlgebraElement::term(
        Basis::Vmon,
        Bipartition::new(Partition::row(2), Partition::row(1)),
        RatFun::one(Variable::T),
    );
    x.add_term(
        Bipartition::new(Partition::column(2), Partition::empty()),
        RatFun::from_laurent(LaurentPoly::one_minus_power(Variable::T, 2)),
    );
    let squared = vmon_multiply(&x, &x);
    pass &= from_dhl_basis(&to_dhl_basis(&squared)) == squared;
    report(
        "10 (triangularity and v <-> V round trip, total size <= 6)",
        start,
        pass,
    );
}
