//! Named, bounded verification suites. Each suite checks one family of
//! invariants at configurable sizes and reports every failure as a line of
//! text; the CLI `verify` subcommand and the acceptance tests both run
//! through this module.

use crate::combinat::{
    bipartitions_up_to, dominance_compare, horizontal_strip, partitions_of, partitions_up_to,
    remove_horizontal_strips, strictly_dominates, vertical_strip, Bipartition, Dominance,
    IntVector, Partition,
};
use crate::dhall::{
    self, derived_structure_constant, phi_isomorphism, structure_constants, vhat_basis_element,
    vhat_multiply, PieriKind,
};
use crate::dlambda::{
    double_hl, double_hl_bipartition, double_hl_with_order, from_dhl_basis, mirror_check,
    mul_generator, to_dhl_basis, vmon_multiply, AlgebraElement, Basis, MirrorIdentity, PeelOrder,
    Side,
};
use crate::genfun::{check_theta_recurrence, verify_identity, Identity};
use crate::hall::{
    aut_order, ext_histogram, hall_column_coeff, hall_pieri_row, hall_polynomial,
    hom_order_exponent, submodule_histogram,
};
use crate::pieri::{b_poly, phi_skew, pieri_horizontal, pieri_schur, pieri_vertical, psi_skew};
use crate::ratfun::{phi_m, qbinom_plus, LaurentPoly, RatFun, Variable};
use crate::schur::{schur_laurent, to_schur_basis, verify_t0};
use num::{BigRational, One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Options shared by all suites; `None` keeps each suite's specified bound.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub max_size: Option<u32>,
    pub max_degree: Option<u32>,
    pub seed: u64,
}

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "combinat",
    "ratfun",
    "double-hl-routes",
    "triangularity",
    "peel-order",
    "mirror",
    "pieri-horizontal",
    "pieri-vertical",
    "pieri-schur",
    "psi-phi",
    "hall-oracle",
    "hall-symmetry",
    "hall-closed-forms",
    "hall-support",
    "riedtmann-peng",
    "dhall-iso",
    "dhall-pieri",
    "dhall-tensor",
    "dhall-generation",
    "table1",
    "schur-t0",
    "genfun",
    "theta-recurrence",
];

/// Run a named suite; `None` for an unknown name. The name `all` runs every
/// suite and concatenates the reports.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Option<SuiteReport> {
    if name == "all" {
        let mut total = SuiteReport::new("all");
        for n in SUITE_NAMES {
            let r = run_suite(n, opts).unwrap();
            total.checks += r.checks;
            total
                .failures
                .extend(r.failures.into_iter().map(|f| format!("[{n}] {f}")));
        }
        return Some(total);
    }
    let r = match name {
        "combinat" => combinat_suite(opts),
        "ratfun" => ratfun_suite(opts),
        "double-hl-routes" => double_hl_routes_suite(),
        "triangularity" => triangularity_suite(opts.max_size.unwrap_or(6)),
        "peel-order" => peel_order_suite(opts.max_size.unwrap_or(5)),
        "mirror" => mirror_suite(opts.max_size.unwrap_or(3)),
        "pieri-horizontal" => pieri_horizontal_suite(opts.max_size.unwrap_or(4), 3),
        "pieri-vertical" => pieri_vertical_suite(opts.max_size.unwrap_or(3), 3),
        "pieri-schur" => pieri_schur_suite(opts.max_size.unwrap_or(4)),
        "psi-phi" => psi_phi_suite(opts.max_size.unwrap_or(6)),
        "hall-oracle" => hall_oracle_suite(opts.max_size.unwrap_or(4)),
        "hall-symmetry" => hall_symmetry_suite(opts.max_size.unwrap_or(5)),
        "hall-closed-forms" => hall_closed_forms_suite(opts.max_size.unwrap_or(6)),
        "hall-support" => hall_support_suite(opts.max_size.unwrap_or(3)),
        "riedtmann-peng" => riedtmann_peng_suite(opts.max_size.unwrap_or(3)),
        "dhall-iso" => dhall_iso_suite(opts.max_size.unwrap_or(3)),
        "dhall-pieri" => dhall_pieri_suite(opts.max_size.unwrap_or(3), 3),
        "dhall-tensor" => dhall_tensor_suite(opts.max_size.unwrap_or(3)),
        "dhall-generation" => dhall_generation_suite(opts.max_size.unwrap_or(4)),
        "table1" => table1_suite(),
        "schur-t0" => schur_t0_suite(opts.max_size.unwrap_or(5)),
        "genfun" => genfun_suite(opts.max_degree.unwrap_or(6)),
        "theta-recurrence" => theta_recurrence_suite(opts.max_degree.unwrap_or(5)),
        _ => return None,
    };
    Some(r)
}

fn combinat_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("combinat");
    let bound = opts.max_size.unwrap_or(8);
    for la in partitions_up_to(bound) {
        r.check(la.conjugate().conjugate() == la, || {
            format!("conjugate not an involution on {la}")
        });
    }
    // strip predicates against the cell-difference oracle
    for la in partitions_up_to(bound.min(6)) {
        for nu in partitions_up_to(la.size()) {
            let (oh, ov) = strip_cell_oracle(&nu, &la);
            r.check(horizontal_strip(&nu, &la).is_some() == oh, || {
                format!("horizontal strip mismatch {nu} in {la}")
            });
            r.check(vertical_strip(&nu, &la).is_some() == ov, || {
                format!("vertical strip mismatch {nu} in {la}")
            });
        }
    }
    // dominance is a partial order
    let all = bipartitions_up_to(bound.min(5));
    for a in &all {
        r.check(dominance_compare(a, a) == Dominance::Equal, || {
            format!("dominance not reflexive at {a}")
        });
        for b in &all {
            if dominance_compare(a, b) != Dominance::Dominates {
                continue;
            }
            r.check(dominance_compare(b, a) == Dominance::Dominated, || {
                format!("dominance not antisymmetric at {a}, {b}")
            });
            for c in &all {
                if dominance_compare(b, c) == Dominance::Dominates {
                    r.check(dominance_compare(a, c) == Dominance::Dominates, || {
                        format!("dominance not transitive at {a} > {b} > {c}")
                    });
                }
            }
        }
    }
    // raising/lowering operators strictly increase dominance
    for bip in &all {
        for img in operator_images(bip) {
            r.check(strictly_dominates(&img, bip), || {
                format!("operator image {img} does not dominate {bip}")
            });
        }
    }
    r
}

fn strip_cell_oracle(inner: &Partition, outer: &Partition) -> (bool, bool) {
    let contains = inner.contained_in(outer);
    if !contains {
        return (false, false);
    }
    let mut horiz = true;
    let mut vert = true;
    for col in 1..=outer.part(1) as usize {
        let diff = outer.conjugate().part(col) as i64 - inner.conjugate().part(col) as i64;
        if diff > 1 {
            horiz = false;
        }
    }
    for row in 1..=outer.len() {
        if outer.part(row) - inner.part(row) > 1 {
            vert = false;
        }
    }
    (horiz, vert)
}

fn operator_images(bip: &Bipartition) -> Vec<Bipartition> {
    fn as_partition(v: &[i64]) -> Option<Partition> {
        let mut t = v.to_vec();
        while t.last() == Some(&0) {
            t.pop();
        }
        if t.iter().any(|&x| x <= 0) || t.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::new(t.iter().map(|&x| x as u32).collect()))
    }
    let mut out = Vec::new();
    let pl: Vec<i64> = bip.plus.parts().iter().map(|&x| x as i64).collect();
    let mn: Vec<i64> = bip.minus.parts().iter().map(|&x| x as i64).collect();
    for i in 0..pl.len() {
        for j in 0..mn.len() {
            let mut a = pl.clone();
            let mut b = mn.clone();
            a[i] -= 1;
            b[j] -= 1;
            if let (Some(p), Some(m)) = (as_partition(&a), as_partition(&b)) {
                out.push(Bipartition::new(p, m));
            }
        }
    }
    for plus_side in [true, false] {
        let side = if plus_side { &pl } else { &mn };
        for i in 0..side.len() {
            for j in (i + 1)..=side.len() {
                let mut v = side.clone();
                v.push(0);
                v[i] += 1;
                v[j] -= 1;
                if let Some(s) = as_partition(&v) {
                    out.push(if plus_side {
                        Bipartition::new(s, bip.minus.clone())
                    } else {
                        Bipartition::new(bip.plus.clone(), s)
                    });
                }
            }
        }
    }
    out
}

fn ratfun_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("ratfun");
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let random_laurent = |rng: &mut StdRng| {
        let mut p = LaurentPoly::zero(Variable::T);
        for _ in 0..rng.random_range(0..8) {
            let e = rng.random_range(-4i64..5);
            let c = rng.random_range(-6i64..7);
            p.add_term(e, BigRational::from_integer(c.into()));
        }
        p
    };
    for _ in 0..64 {
        let n1 = random_laurent(&mut rng);
        let d1 = random_laurent(&mut rng);
        let n2 = random_laurent(&mut rng);
        let d2 = random_laurent(&mut rng);
        let n3 = random_laurent(&mut rng);
        let a = if d1.is_zero() {
            RatFun::from_laurent(n1)
        } else {
            RatFun::new(n1, d1).unwrap()
        };
        let b = if d2.is_zero() {
            RatFun::from_laurent(n2)
        } else {
            RatFun::new(n2, d2).unwrap()
        };
        let c = RatFun::from_laurent(n3);
        r.check(a.add(&b) == b.add(&a), || {
            format!("add not commutative: {a}, {b}")
        });
        r.check(a.mul(&b) == b.mul(&a), || {
            format!("mul not commutative: {a}, {b}")
        });
        r.check(a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)), || {
            format!("not distributive: {a}, {b}, {c}")
        });
        r.check(a.add(&b).add(&c) == a.add(&b.add(&c)), || {
            "add not associative".into()
        });
        if !a.is_zero() {
            r.check(a.mul(&a.inverse().unwrap()).is_one(), || {
                format!("inverse fails: {a}")
            });
        }
        r.check(
            a.mul(&b).subst_t_to_q_inv() == a.subst_t_to_q_inv().mul(&b.subst_t_to_q_inv()),
            || format!("substitution not multiplicative: {a}, {b}"),
        );
        r.check(
            a.add(&b).subst_t_to_q_inv() == a.subst_t_to_q_inv().add(&b.subst_t_to_q_inv()),
            || format!("substitution not additive: {a}, {b}"),
        );
    }
    let bound = opts.max_size.unwrap_or(8) as i64;
    for n in 0..=bound {
        for k in 0..=n {
            let ratio = RatFun::new(
                phi_m(n as u32, Variable::T),
                phi_m(k as u32, Variable::T).mul(&phi_m((n - k) as u32, Variable::T)),
            )
            .unwrap();
            r.check(qbinom_plus(n, k, Variable::T) == ratio, || {
                format!("qbinom [{n} {k}] differs from phi ratio")
            });
        }
    }
    r
}

fn double_hl_routes_suite() -> SuiteReport {
    let mut r = SuiteReport::new("double-hl-routes");
    let one = Partition::row(1);
    // route 1: the operator recursion
    let direct = double_hl_bipartition(&Bipartition::new(one.clone(), one.clone()));
    // route 2: inverting the horizontal Pieri rule
    // V_{-,(1)} v_1^+ = V_{(1),(1)} + (1-t) V_{-,-}
    let v_minus = double_hl_bipartition(&Bipartition::new(Partition::empty(), one.clone()));
    let product = mul_generator(&v_minus, Side::Plus, 1);
    let one_minus_t = LaurentPoly::one_minus_power(Variable::T, 1);
    let inverted =
        product.sub(&AlgebraElement::one(Basis::Vmon, Variable::T).scale_laurent(&one_minus_t));
    r.check(direct == inverted, || {
        format!("two routes differ: {direct} vs {inverted}")
    });
    // frozen value v_1^+ v_1^- + (t - 1)
    let mut expected = AlgebraElement::term(
        Basis::Vmon,
        Bipartition::new(one.clone(), one),
        RatFun::one(Variable::T),
    );
    let mut t_minus_one = LaurentPoly::monomial(Variable::T, 1, BigRational::one());
    t_minus_one.add_term(0, -BigRational::one());
    expected.add_term(Bipartition::empty(), RatFun::from_laurent(t_minus_one));
    r.check(direct == expected, || {
        format!("value differs from v1+ v1- + (t-1): {direct}")
    });
    r
}

fn triangularity_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("triangularity");
    for bip in bipartitions_up_to(max_size) {
        let v = double_hl_bipartition(&bip);
        let lead_ok = v.coeff(&bip).is_some_and(|c| c.is_one());
        r.check(lead_ok, || {
            format!("leading coefficient of V[{bip}] is not 1")
        });
        for (other, _) in v.terms() {
            if other != &bip {
                r.check(strictly_dominates(other, &bip), || {
                    format!("term {other} of V[{bip}] does not strictly dominate")
                });
            }
        }
        // round trip v <-> V
        let as_dhl = AlgebraElement::term(Basis::Dhl, bip.clone(), RatFun::one(Variable::T));
        r.check(to_dhl_basis(&from_dhl_basis(&as_dhl)) == as_dhl, || {
            format!("round trip fails on V[{bip}]")
        });
        let as_mon = AlgebraElement::term(Basis::Vmon, bip.clone(), RatFun::one(Variable::T));
        let back = from_dhl_basis(&to_dhl_basis(&as_mon));
        r.check(back == as_mon, || format!("round trip fails on v[{bip}]"));
    }
    r
}

fn peel_order_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("peel-order");
    for bip in bipartitions_up_to(max_size) {
        let a = IntVector::from(&bip.plus);
        let b = IntVector::from(&bip.minus);
        let base = double_hl(&a, &b);
        for order in [PeelOrder::MinusFirst, PeelOrder::Alternating] {
            r.check(double_hl_with_order(&a, &b, order) == base, || {
                format!("peel order {order:?} differs on {bip}")
            });
        }
    }
    r
}

fn mirror_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("mirror");
    for first in partitions_up_to(max_size) {
        for second in partitions_up_to(max_size) {
            for bound in 0..=max_size {
                r.check(
                    mirror_check(MirrorIdentity::I, &first, &second, bound),
                    || format!("mirror I fails at rho={first} mu={second} b={bound}"),
                );
                r.check(
                    mirror_check(MirrorIdentity::II, &first, &second, bound),
                    || format!("mirror II fails at nu={first} rho~={second} a={bound}"),
                );
            }
        }
    }
    r
}

fn pieri_horizontal_suite(max_total: u32, max_r: u32) -> SuiteReport {
    let mut r = SuiteReport::new("pieri-horizontal");
    for bip in bipartitions_up_to(max_total) {
        let v = double_hl_bipartition(&bip);
        for k in 1..=max_r {
            for side in [Side::Plus, Side::Minus] {
                let product = to_dhl_basis(&mul_generator(&v, side, k as i64));
                let rule = pieri_horizontal(&bip.plus, &bip.minus, k, side);
                r.check(product == rule, || {
                    format!("horizontal Pieri fails at {bip} r={k} {side:?}")
                });
            }
        }
    }
    r
}

fn pieri_vertical_suite(max_total: u32, max_r: u32) -> SuiteReport {
    let mut r = SuiteReport::new("pieri-vertical");
    for bip in bipartitions_up_to(max_total) {
        let v = double_hl_bipartition(&bip);
        for k in 1..=max_r {
            for side in [Side::Plus, Side::Minus] {
                let column = match side {
                    Side::Plus => Bipartition::new(Partition::column(k), Partition::empty()),
                    Side::Minus => Bipartition::new(Partition::empty(), Partition::column(k)),
                };
                let factor = double_hl_bipartition(&column);
                let product = to_dhl_basis(&vmon_multiply(&v, &factor));
                let rule = pieri_vertical(&bip.plus, &bip.minus, k, side);
                r.check(product == rule, || {
                    format!("vertical Pieri fails at {bip} r={k} {side:?}")
                });
            }
        }
    }
    r
}

fn pieri_schur_suite(max_total: u32) -> SuiteReport {
    let mut r = SuiteReport::new("pieri-schur");
    let zero = BigRational::zero();
    for bip in bipartitions_up_to(max_total) {
        for k in 1..=3u32 {
            for side in [Side::Plus, Side::Minus] {
                // t = 0 of the horizontal rule
                let hl = pieri_horizontal(&bip.plus, &bip.minus, k, side);
                let specialized = hl.eval_coeffs(&zero).unwrap().relabeled(Basis::SchurL);
                let rule = pieri_schur(&bip.plus, &bip.minus, k, side);
                r.check(specialized == rule, || {
                    format!("Schur Pieri differs from t=0 horizontal at {bip} r={k} {side:?}")
                });
            }
            // plus/minus mirror symmetry
            let plus = pieri_horizontal(&bip.plus, &bip.minus, k, Side::Plus);
            let minus = pieri_horizontal(&bip.minus, &bip.plus, k, Side::Minus);
            r.check(plus == minus.swapped_terms(), || {
                format!("plus/minus mirror fails at {bip} r={k}")
            });
        }
    }
    // Schur Pieri against determinant products re-expanded in the s-basis
    for bip in bipartitions_up_to(max_total.min(4)) {
        for k in 1..=2u32 {
            for side in [Side::Plus, Side::Minus] {
                let s = schur_laurent(&bip.plus, &bip.minus);
                let gen_bip = match side {
                    Side::Plus => Bipartition::new(Partition::row(k), Partition::empty()),
                    Side::Minus => Bipartition::new(Partition::empty(), Partition::row(k)),
                };
                let gen = AlgebraElement::term(Basis::Vmon, gen_bip, RatFun::one(Variable::T));
                let product = to_schur_basis(&vmon_multiply(&s, &gen));
                let rule = pieri_schur(&bip.plus, &bip.minus, k, side);
                r.check(product == rule, || {
                    format!("Schur Pieri differs from determinant product at {bip} r={k} {side:?}")
                });
            }
        }
    }
    r
}

fn psi_phi_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("psi-phi");
    for la in partitions_up_to(max_size) {
        for a in 0..=la.size() {
            for rho in remove_horizontal_strips(&la, a) {
                let lhs = RatFun::from_laurent(psi_skew(&la, &rho));
                let rhs = RatFun::from_laurent(phi_skew(&la, &rho))
                    .mul(&RatFun::new(b_poly(&rho), b_poly(&la)).unwrap());
                r.check(lhs == rhs, || {
                    format!("psi != phi b_rho/b_la at {la}/{rho}")
                });
            }
        }
    }
    r
}

fn hall_oracle_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("hall-oracle");
    for q in [2u8, 3] {
        let qv = BigRational::from_integer((q as i64).into());
        for n in 0..=max_size {
            for la in partitions_of(n) {
                let hist = submodule_histogram(&la, q);
                for a in 0..=n {
                    for mu in partitions_of(a) {
                        for nu in partitions_of(n - a) {
                            let symbolic = hall_polynomial(&mu, &nu, &la)
                                .eval(&qv)
                                .expect("Hall polynomial has no pole at integers");
                            let counted = hist.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0);
                            r.check(
                                symbolic == BigRational::from_integer(counted.into()),
                                || format!("F^{la}_{{{mu},{nu}}}({q}) != count {counted}"),
                            );
                        }
                    }
                }
            }
        }
    }
    r
}

fn hall_symmetry_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("hall-symmetry");
    for n in 0..=max_size {
        for la in partitions_of(n) {
            for a in 0..=n {
                for mu in partitions_of(a) {
                    for nu in partitions_of(n - a) {
                        r.check(
                            hall_polynomial(&mu, &nu, &la) == hall_polynomial(&nu, &mu, &la),
                            || format!("F^{la} not symmetric in ({mu},{nu})"),
                        );
                    }
                }
            }
        }
    }
    r
}

fn hall_closed_forms_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("hall-closed-forms");
    for nu in partitions_up_to(max_size) {
        for rk in 0..=nu.size() {
            let mu_size = nu.size() - rk;
            for mu in partitions_of(mu_size) {
                let closed = RatFun::from_laurent(hall_pieri_row(&mu, rk, &nu));
                let direct = hall_polynomial(&mu, &Partition::row(rk), &nu)
                    .mul_laurent(&aut_order(&Partition::row(rk)));
                r.check(closed == direct, || {
                    format!("row closed form differs at mu={mu} r={rk} nu={nu}")
                });
                let closed = RatFun::from_laurent(hall_column_coeff(&mu, rk, &nu));
                let direct = hall_polynomial(&mu, &Partition::column(rk), &nu);
                r.check(closed == direct, || {
                    format!("column closed form differs at mu={mu} m={rk} la={nu}")
                });
            }
        }
    }
    r
}

fn hall_support_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("hall-support");
    for mu in partitions_up_to(max_size) {
        for rk in 0..=3u32 {
            for nu in partitions_of(mu.size() + rk) {
                let f = hall_polynomial(&mu, &Partition::row(rk), &nu);
                r.check(
                    !f.is_zero() == (horizontal_strip(&mu, &nu) == Some(rk)),
                    || format!("row support wrong at mu={mu} r={rk} nu={nu}"),
                );
            }
        }
    }
    r
}

fn riedtmann_peng_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("riedtmann-peng");
    for q in [2u8, 3] {
        let qv = BigRational::from_integer((q as i64).into());
        for total in 0..=max_size {
            for a in 0..=total {
                for mu in partitions_of(a) {
                    for nu in partitions_of(total - a) {
                        let (ext, hom) = ext_histogram(&mu, &nu, q);
                        r.check(
                            hom == (q as u64).pow(hom_order_exponent(&mu, &nu) as u32),
                            || format!("Hom order formula fails at ({mu},{nu}) q={q}"),
                        );
                        for la in partitions_of(total) {
                            let f = hall_polynomial(&mu, &nu, &la).eval(&qv).unwrap();
                            let lhs = f
                                * aut_order(&mu).eval(&qv).unwrap()
                                * aut_order(&nu).eval(&qv).unwrap()
                                / aut_order(&la).eval(&qv).unwrap();
                            let e = ext.get(&la).copied().unwrap_or(0);
                            let rhs = BigRational::from_integer(e.into())
                                / BigRational::from_integer(hom.into());
                            r.check(lhs == rhs, || {
                                format!("Riedtmann-Peng fails at ({mu},{nu})->{la} q={q}")
                            });
                        }
                    }
                }
            }
        }
    }
    r
}

fn dhall_iso_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("dhall-iso");
    let basis = bipartitions_up_to(max_size);
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            let a = vhat_basis_element(x);
            let b = vhat_basis_element(y);
            let lhs = from_dhl_basis(&phi_isomorphism(&vhat_multiply(&a, &b)));
            let rhs = vmon_multiply(
                &from_dhl_basis(&phi_isomorphism(&a)),
                &from_dhl_basis(&phi_isomorphism(&b)),
            );
            r.check(lhs == rhs, || {
                format!("Phi not multiplicative on ({x}, {y})")
            });
        }
    }
    r
}

fn dhall_pieri_suite(max_size: u32, max_r: u32) -> SuiteReport {
    let mut r = SuiteReport::new("dhall-pieri");
    for rho in partitions_up_to(max_size) {
        for nu in partitions_up_to(max_size) {
            let base = vhat_basis_element(&Bipartition::new(rho.clone(), nu.clone()));
            for k in 1..=max_r {
                for side in [Side::Plus, Side::Minus] {
                    for kind in [PieriKind::Row, PieriKind::Column] {
                        let gen = match (kind, side) {
                            (PieriKind::Row, Side::Plus) => {
                                Bipartition::new(Partition::row(k), Partition::empty())
                            }
                            (PieriKind::Row, Side::Minus) => {
                                Bipartition::new(Partition::empty(), Partition::row(k))
                            }
                            (PieriKind::Column, Side::Plus) => {
                                Bipartition::new(Partition::column(k), Partition::empty())
                            }
                            (PieriKind::Column, Side::Minus) => {
                                Bipartition::new(Partition::empty(), Partition::column(k))
                            }
                        };
                        let product = vhat_multiply(&base, &vhat_basis_element(&gen));
                        let rule = dhall::hall_pieri(&rho, &nu, k, kind, side);
                        r.check(product == rule, || {
                            format!("Hall Pieri fails at {rho}|{nu} r={k} {kind:?} {side:?}")
                        });
                    }
                }
                // the raw class-basis sums over six-fold products
                raw_row_column_checks(&mut r, &rho, &nu, k);
            }
        }
    }
    r
}

/// The unnormalized row/column multiplication formulas on the class basis:
/// `[S^rho + S^nu[1]] * [S^(r)]` expands with coefficients
/// `F^la_{rho,(a)} F^nu_{(r-a),mu} |Aut rho||Aut (a)||Aut (r-a)| / |Aut la|`;
/// `* [S^(1^r)]` with
/// `F^la_{rho,(1^a)} F^nu_{(1^(r-a)),mu} |Aut rho||Aut (1^r)| / (|Aut la| q^{a(r-a)})`;
/// and the two dual forms for `[S^(r)[1]]`, `[S^(1^r)[1]]`.
fn raw_row_column_checks(r: &mut SuiteReport, rho: &Partition, nu: &Partition, k: u32) {
    let m = Bipartition::new(rho.clone(), nu.clone());
    let aut = |p: &Partition| RatFun::from_laurent(aut_order(p));
    for side in [Side::Plus, Side::Minus] {
        for kind in [PieriKind::Row, PieriKind::Column] {
            let gen = match (kind, side) {
                (PieriKind::Row, Side::Plus) => {
                    Bipartition::new(Partition::row(k), Partition::empty())
                }
                (PieriKind::Row, Side::Minus) => {
                    Bipartition::new(Partition::empty(), Partition::row(k))
                }
                (PieriKind::Column, Side::Plus) => {
                    Bipartition::new(Partition::column(k), Partition::empty())
                }
                (PieriKind::Column, Side::Minus) => {
                    Bipartition::new(Partition::empty(), Partition::column(k))
                }
            };
            let product = structure_constants(&m, &gen);
            let mut expected: std::collections::BTreeMap<Bipartition, RatFun> = Default::default();
            for a in 0..=k {
                let b = k - a;
                // the growing side and its per-term weight
                let (grow_from, shrink_from) = match side {
                    Side::Plus => (rho, nu),
                    Side::Minus => (nu, rho),
                };
                let (ga, gb): (Partition, Partition) = match kind {
                    PieriKind::Row => (Partition::row(a), Partition::row(b)),
                    PieriKind::Column => (Partition::column(a), Partition::column(b)),
                };
                let weight = match kind {
                    PieriKind::Row => aut(grow_from).mul(&aut(&ga)).mul(&aut(&gb)),
                    PieriKind::Column => aut(grow_from)
                        .mul(&aut(&Partition::column(k)))
                        .mul(&RatFun::monomial(Variable::Q, -((a * b) as i64))),
                };
                for la in partitions_of(grow_from.size() + a) {
                    let f1 = hall_polynomial(grow_from, &ga, &la);
                    if f1.is_zero() {
                        continue;
                    }
                    let scale = f1.mul(&weight).div(&aut(&la));
                    for mu in partitions_of(shrink_from.size().saturating_sub(b)) {
                        let f2 = hall_polynomial(&gb, &mu, shrink_from);
                        if f2.is_zero() {
                            continue;
                        }
                        let key = match side {
                            Side::Plus => Bipartition::new(la.clone(), mu),
                            Side::Minus => Bipartition::new(mu, la.clone()),
                        };
                        let c = f2.mul(&scale);
                        let entry = expected
                            .entry(key)
                            .or_insert_with(|| RatFun::zero(Variable::Q));
                        *entry = entry.add(&c);
                    }
                }
            }
            expected.retain(|_, c| !c.is_zero());
            r.check(*product == expected, || {
                format!("raw class-basis formula fails at {m} r={k} {kind:?} {side:?}")
            });
        }
    }
}

fn dhall_tensor_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("dhall-tensor");
    let parts = partitions_up_to(max_size);
    for mu in &parts {
        for nu in &parts {
            // iota^+ / iota^-: pure products stay pure and match the
            // Ext/Hom-normalized classical constants
            let plus = structure_constants(
                &Bipartition::new(mu.clone(), Partition::empty()),
                &Bipartition::new(nu.clone(), Partition::empty()),
            );
            for (l, g) in plus.iter() {
                r.check(l.minus.is_empty(), || {
                    format!("pure-plus product leaks minus part at ({mu},{nu})")
                });
                let expected = hall_polynomial(mu, nu, &l.plus)
                    .mul_laurent(&aut_order(mu))
                    .mul_laurent(&aut_order(nu))
                    .try_div(&RatFun::from_laurent(aut_order(&l.plus)))
                    .unwrap();
                r.check(g == &expected, || {
                    format!("iota+ constant differs at ({mu},{nu}) -> {l}")
                });
            }
            let minus = structure_constants(
                &Bipartition::new(Partition::empty(), mu.clone()),
                &Bipartition::new(Partition::empty(), nu.clone()),
            );
            for (l, g) in minus.iter() {
                r.check(l.plus.is_empty(), || {
                    format!("pure-minus product leaks plus part at ({mu},{nu})")
                });
                let expected = hall_polynomial(mu, nu, &l.minus)
                    .mul_laurent(&aut_order(mu))
                    .mul_laurent(&aut_order(nu))
                    .try_div(&RatFun::from_laurent(aut_order(&l.minus)))
                    .unwrap();
                r.check(g == &expected, || {
                    format!("iota- constant differs at ({mu},{nu}) -> {l}")
                });
            }
        }
    }
    // mixed products: commutativity and the balanced-size support condition
    let bips = bipartitions_up_to(max_size);
    for m in &bips {
        for n in &bips {
            if m.total_size() + n.total_size() > max_size + 1 {
                continue;
            }
            r.check(
                structure_constants(m, n) == structure_constants(n, m),
                || format!("product not commutative at ({m}, {n})"),
            );
            for l in structure_constants(m, n).keys() {
                let plus_drop = (m.plus.size() + n.plus.size()) as i64 - l.plus.size() as i64;
                let minus_drop = (m.minus.size() + n.minus.size()) as i64 - l.minus.size() as i64;
                r.check(plus_drop >= 0 && plus_drop == minus_drop, || {
                    format!("support violates balanced size drop at ({m},{n}) -> {l}")
                });
            }
        }
    }
    r
}

/// Every `u_{lambda,mu}` with total size at most `max_size` lies in the span
/// of products of the row generators `u_{(r),-}` and `u_{-,(r)}`, checked
/// by Gaussian elimination over `Q(t)`.
fn dhall_generation_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("dhall-generation");
    let universe: Vec<Bipartition> = bipartitions_up_to(max_size);
    let index: std::collections::BTreeMap<&Bipartition, usize> =
        universe.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let to_vector = |el: &AlgebraElement| -> Vec<RatFun> {
        let mut v = vec![RatFun::zero(Variable::T); universe.len()];
        for (b, c) in el.terms() {
            v[*index.get(b).expect("product stays within the size bound")] = c.clone();
        }
        v
    };
    // echelon basis of the span of generator products
    let mut echelon: Vec<(usize, Vec<RatFun>)> = Vec::new();
    let reduce = |mut v: Vec<RatFun>, echelon: &Vec<(usize, Vec<RatFun>)>| -> Vec<RatFun> {
        for (p, row) in echelon {
            if !v[*p].is_zero() {
                let factor = v[*p].div(&row[*p]);
                for (x, y) in v.iter_mut().zip(row) {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        v
    };
    for alpha in partitions_up_to(max_size) {
        for beta in partitions_up_to(max_size - alpha.size()) {
            let mut prod = AlgebraElement::one(Basis::HallU, Variable::T);
            for &row in alpha.parts() {
                let gen = AlgebraElement::term(
                    Basis::HallU,
                    Bipartition::new(Partition::row(row), Partition::empty()),
                    RatFun::one(Variable::T),
                );
                prod = dhall::generic_multiply(&prod, &gen);
            }
            for &row in beta.parts() {
                let gen = AlgebraElement::term(
                    Basis::HallU,
                    Bipartition::new(Partition::empty(), Partition::row(row)),
                    RatFun::one(Variable::T),
                );
                prod = dhall::generic_multiply(&prod, &gen);
            }
            let v = reduce(to_vector(&prod), &echelon);
            if let Some(p) = v.iter().position(|c| !c.is_zero()) {
                echelon.push((p, v));
            }
        }
    }
    for target in &universe {
        let el = AlgebraElement::term(Basis::HallU, target.clone(), RatFun::one(Variable::T));
        let reduced = reduce(to_vector(&el), &echelon);
        r.check(reduced.iter().all(|c| c.is_zero()), || {
            format!("u[{target}] is not generated by the row generators")
        });
    }
    r
}

/// All sixteen rows of the multiplication table for
/// `[S^(r) + S^(t)[1]] * [S^(1^a) + S^(1^b)[1]]`, checked with formal `q`.
fn table1_suite() -> SuiteReport {
    let mut r = SuiteReport::new("table1");
    let q = |e: i64| RatFun::monomial(Variable::Q, e);
    let one_minus = |e: i64| RatFun::from_laurent(LaurentPoly::one_minus_power(Variable::Q, e));
    // q^a - 1 = -(1 - q^a)
    let pow_minus_one = |e: i64| one_minus(e).neg();

    for rr in 1..=3u32 {
        for tt in 1..=3u32 {
            for a in 0..=2u32 {
                for b in 0..=2u32 {
                    let m = Bipartition::new(Partition::row(rr), Partition::row(tt));
                    let n = Bipartition::new(Partition::column(a), Partition::column(b));
                    let product = structure_constants(&m, &n);

                    // (rho rows, nu rows, coefficient), None when a shape
                    // index is out of range
                    let ri = rr as i64;
                    let ti = tt as i64;
                    let ai = a as i64;
                    let bi = b as i64;
                    let shape = |head: i64, tail: i64| -> Option<Partition> {
                        if head < 0 || tail < 0 {
                            return None;
                        }
                        let mut parts = vec![1u32; tail as usize];
                        if head > 0 {
                            parts.push(head as u32);
                        }
                        Some(Partition::new(parts))
                    };
                    let rows: [(i64, i64, i64, i64, RatFun); 16] = [
                        // a) - d): c = 0, d = 0
                        (ri, ai, ti, bi, q(-ai - bi)),
                        (ri + 1, ai - 1, ti, bi, one_minus(-ai).mul(&q(-bi))),
                        (ri, ai, ti + 1, bi - 1, q(-ai).mul(&one_minus(-bi))),
                        (
                            ri + 1,
                            ai - 1,
                            ti + 1,
                            bi - 1,
                            one_minus(-ai).mul(&one_minus(-bi)),
                        ),
                        // e) - h): c = 1, d = 0
                        (
                            ri,
                            ai - 1,
                            ti - 1,
                            bi,
                            pow_minus_one(ai).mul(&q(1 - ai - bi)),
                        ),
                        (
                            ri + 1,
                            ai - 2,
                            ti - 1,
                            bi,
                            pow_minus_one(ai).mul(&one_minus(1 - ai)).mul(&q(-bi)),
                        ),
                        (
                            ri,
                            ai - 1,
                            ti,
                            bi - 1,
                            pow_minus_one(ai).mul(&q(1 - ai)).mul(&one_minus(-bi)),
                        ),
                        (
                            ri + 1,
                            ai - 2,
                            ti,
                            bi - 1,
                            pow_minus_one(ai)
                                .mul(&one_minus(1 - ai))
                                .mul(&one_minus(-bi)),
                        ),
                        // i) - l): c = 0, d = 1
                        (
                            ri - 1,
                            ai,
                            ti,
                            bi - 1,
                            pow_minus_one(bi).mul(&q(1 - ai - bi)),
                        ),
                        (
                            ri,
                            ai - 1,
                            ti,
                            bi - 1,
                            pow_minus_one(bi).mul(&q(1 - bi)).mul(&one_minus(-ai)),
                        ),
                        (
                            ri - 1,
                            ai,
                            ti + 1,
                            bi - 2,
                            pow_minus_one(bi).mul(&q(-ai)).mul(&one_minus(1 - bi)),
                        ),
                        (
                            ri,
                            ai - 1,
                            ti + 1,
                            bi - 2,
                            pow_minus_one(bi)
                                .mul(&one_minus(-ai))
                                .mul(&one_minus(1 - bi)),
                        ),
                        // m) - p): c = 1, d = 1
                        (
                            ri - 1,
                            ai - 1,
                            ti - 1,
                            bi - 1,
                            pow_minus_one(bi)
                                .mul(&pow_minus_one(ai))
                                .mul(&q(2 - ai - bi)),
                        ),
                        (
                            ri,
                            ai - 2,
                            ti - 1,
                            bi - 1,
                            pow_minus_one(bi)
                                .mul(&pow_minus_one(ai))
                                .mul(&q(1 - bi))
                                .mul(&one_minus(1 - ai)),
                        ),
                        (
                            ri - 1,
                            ai - 1,
                            ti,
                            bi - 2,
                            pow_minus_one(bi)
                                .mul(&pow_minus_one(ai))
                                .mul(&q(1 - ai))
                                .mul(&one_minus(1 - bi)),
                        ),
                        (
                            ri,
                            ai - 2,
                            ti,
                            bi - 2,
                            pow_minus_one(bi)
                                .mul(&pow_minus_one(ai))
                                .mul(&one_minus(1 - ai))
                                .mul(&one_minus(1 - bi)),
                        ),
                    ];
                    let mut expected: std::collections::BTreeMap<Bipartition, RatFun> =
                        Default::default();
                    for (rho_head, rho_tail, nu_head, nu_tail, coeff) in rows {
                        let (Some(rho), Some(nu)) =
                            (shape(rho_head, rho_tail), shape(nu_head, nu_tail))
                        else {
                            continue;
                        };
                        if coeff.is_zero() {
                            continue;
                        }
                        let key = Bipartition::new(rho, nu);
                        let entry = expected
                            .entry(key)
                            .or_insert_with(|| RatFun::zero(Variable::Q));
                        *entry = entry.add(&coeff);
                    }
                    expected.retain(|_, c| !c.is_zero());
                    r.check(*product == expected, || {
                        format!("Table 1 mismatch at r={rr} t={tt} a={a} b={b}")
                    });
                }
            }
        }
    }
    r
}

fn schur_t0_suite(max_size: u32) -> SuiteReport {
    let mut r = SuiteReport::new("schur-t0");
    for bip in bipartitions_up_to(max_size) {
        r.check(verify_t0(&bip.plus, &bip.minus), || {
            format!("determinant != V|_(t=0) at {bip}")
        });
        let s = schur_laurent(&bip.plus, &bip.minus);
        for (_, c) in s.terms() {
            let is_int = c.as_rational().is_some_and(|x| x.is_integer());
            r.check(is_int, || format!("non-integer Schur coefficient at {bip}"));
        }
    }
    r
}

fn genfun_suite(degree: u32) -> SuiteReport {
    let mut r = SuiteReport::new("genfun");
    for id in Identity::ALL {
        let rep = verify_identity(id, degree);
        r.check(rep.pass(), || match &rep.first_mismatch {
            Some(m) => format!(
                "{} fails at degree {degree}: first mismatch y^{} z^{}",
                id.name(),
                m.i,
                m.j
            ),
            None => unreachable!(),
        });
    }
    // P_r is pure-plus, P'_t pure-minus
    let p = crate::genfun::build_series(crate::genfun::SeriesKind::Ptilde, degree.min(5));
    let pp = crate::genfun::build_series(crate::genfun::SeriesKind::PtildePrime, degree.min(5));
    for k in 0..=degree.min(5) {
        r.check(
            p.coeff(k, 0).terms().all(|(b, _)| b.minus.is_empty()),
            || format!("P_{} is not pure-plus", k + 1),
        );
        r.check(
            pp.coeff(0, k).terms().all(|(b, _)| b.plus.is_empty()),
            || format!("P'_{} is not pure-minus", k + 1),
        );
    }
    r
}

fn theta_recurrence_suite(degree: u32) -> SuiteReport {
    let mut r = SuiteReport::new("theta-recurrence");
    let failure = check_theta_recurrence(degree);
    r.check(failure.is_none(), || {
        let (m, n) = failure.unwrap();
        format!("theta recurrence fails at (m,n)=({m},{n})")
    });
    r
}

/// One fixed entry of the sixteen-row multiplication table, as a cheap
/// cross-check of [`derived_structure_constant`].
pub fn table1_spot_check() -> bool {
    let m = Bipartition::new(Partition::row(2), Partition::row(1));
    let n = Bipartition::new(Partition::column(1), Partition::column(1));
    let l = Bipartition::new(
        Partition::row(2).merged(&Partition::column(1)),
        Partition::row(1).merged(&Partition::column(1)),
    );
    derived_structure_constant(&m, &n, &l) == RatFun::monomial(Variable::Q, -2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_all_run() {
        let opts = SuiteOptions {
            max_size: Some(2),
            max_degree: Some(2),
            seed: 7,
        };
        for name in SUITE_NAMES {
            let r = run_suite(name, &opts).expect("known suite");
            assert!(r.passed(), "{name}: {:?}", r.failures);
            assert!(r.checks > 0, "{name} ran no checks");
        }
        assert!(run_suite("nope", &opts).is_none());
    }

    #[test]
    fn table1_all_rows() {
        let r = table1_suite();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(table1_spot_check());
    }
}
