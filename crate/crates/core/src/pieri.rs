//! Strip coefficient polynomials (`phi`, `psi`, `b`, `f`) and the closed
//! Pieri expansion rules: horizontal (multiplication by a row generator),
//! vertical (multiplication by a column element `V_{(1^r)}`), and the
//! multiplicity-one Schur-Laurent rule obtained at `t = 0`.

use crate::combinat::{
    add_horizontal_strips, add_vertical_strips, horizontal_strip, remove_horizontal_strips,
    remove_vertical_strips, vertical_strip, Bipartition, Partition,
};
use crate::dlambda::{AlgebraElement, Basis, Side};
use crate::ratfun::{phi_m, qbinom_plus, LaurentPoly, RatFun, Variable};

/// `phi_{lambda/nu}(t) = prod_{i in I} (1 - t^{m_i(lambda)})` where `I` is
/// the set of columns `i` with a strip box in column `i` but none in column
/// `i+1`. Zero when `lambda - nu` is not a horizontal strip.
pub fn phi_skew(la: &Partition, nu: &Partition) -> LaurentPoly {
    phi_psi(la, nu, true)
}

/// `psi_{lambda/nu}(t) = prod_{j in J} (1 - t^{m_j(nu)})` where `J` is the
/// set of columns `j` with no strip box in column `j` but one in column
/// `j+1`. Zero when `lambda - nu` is not a horizontal strip.
pub fn psi_skew(la: &Partition, nu: &Partition) -> LaurentPoly {
    phi_psi(la, nu, false)
}

fn phi_psi(la: &Partition, nu: &Partition, phi: bool) -> LaurentPoly {
    if horizontal_strip(nu, la).is_none() {
        return LaurentPoly::zero(Variable::T);
    }
    let lc = la.conjugate();
    let nc = nu.conjugate();
    let sigma = |i: usize| -> u32 {
        if i == 0 {
            0
        } else {
            lc.part(i) - nc.part(i)
        }
    };
    let mut out = LaurentPoly::one(Variable::T);
    for i in 1..=la.part(1) as usize {
        let factor = if phi {
            // i in I: sigma'_i = 1 and sigma'_{i+1} = 0
            (sigma(i) == 1 && sigma(i + 1) == 0).then(|| la.multiplicity(i as u32))
        } else {
            // j in J: sigma'_j = 0 and sigma'_{j+1} = 1
            (sigma(i) == 0 && sigma(i + 1) == 1).then(|| nu.multiplicity(i as u32))
        };
        if let Some(m) = factor {
            out = out.mul(&LaurentPoly::one_minus_power(Variable::T, m as i64));
        }
    }
    out
}

/// `b_lambda(t) = prod_i phi_{m_i(lambda)}(t)`.
pub fn b_poly(la: &Partition) -> LaurentPoly {
    let mut out = LaurentPoly::one(Variable::T);
    let mut seen = std::collections::BTreeSet::new();
    for &p in la.parts() {
        if seen.insert(p) {
            out = out.mul(&phi_m(la.multiplicity(p) as u32, Variable::T));
        }
    }
    out
}

/// The vertical-strip coefficient
/// `f^lambda_{mu,(1^m)}(t) = prod_i [lambda'_i - lambda'_{i+1} choose
/// lambda'_i - mu'_i]_+`, when `lambda - mu` is a vertical `m`-strip, else 0.
/// Always a polynomial in the strip case.
pub fn f_vertical(mu: &Partition, m: u32, la: &Partition) -> RatFun {
    if vertical_strip(mu, la) != Some(m) {
        return RatFun::zero(Variable::T);
    }
    let lc = la.conjugate();
    let mc = mu.conjugate();
    let mut out = RatFun::one(Variable::T);
    for i in 1..=la.part(1) as usize {
        let n = lc.part(i) as i64 - lc.part(i + 1) as i64;
        let r = lc.part(i) as i64 - mc.part(i) as i64;
        out = out.mul(&qbinom_plus(n, r, Variable::T));
    }
    out
}

/// Horizontal Pieri rule: the expansion of `V_{rho,nu} * v_r^(side)` in the
/// double HL basis.
///
/// Plus side: `sum_{a+b=r} sum_{mu ->a nu, rho ->b lambda}
/// phi_{nu/mu} psi_{lambda/rho} V_{lambda,mu}`; the minus side is the
/// mirrored formula.
pub fn pieri_horizontal(rho: &Partition, nu: &Partition, r: u32, side: Side) -> AlgebraElement {
    assert!(r >= 1);
    let mut out = AlgebraElement::zero(Basis::Dhl);
    for a in 0..=r {
        let b = r - a;
        match side {
            Side::Plus => {
                for mu in remove_horizontal_strips(nu, a) {
                    let phi = phi_skew(nu, &mu);
                    if phi.is_zero() {
                        continue;
                    }
                    for la in add_horizontal_strips(rho, b) {
                        let psi = psi_skew(&la, rho);
                        let coeff = RatFun::from_laurent(phi.mul(&psi));
                        out.add_term(Bipartition::new(la, mu.clone()), coeff);
                    }
                }
            }
            Side::Minus => {
                for mu in add_horizontal_strips(nu, a) {
                    let psi = psi_skew(&mu, nu);
                    if psi.is_zero() {
                        continue;
                    }
                    for la in remove_horizontal_strips(rho, b) {
                        let phi = phi_skew(rho, &la);
                        let coeff = RatFun::from_laurent(psi.mul(&phi));
                        out.add_term(Bipartition::new(la, mu.clone()), coeff);
                    }
                }
            }
        }
    }
    out
}

/// Vertical Pieri rule: the expansion of `V_{rho,nu} * V_{(1^r)}^(side)` in
/// the double HL basis.
///
/// Plus side: `sum_{a+b=r} sum_{lambda a-down rho, nu b-down mu}
/// (b_rho/b_lambda) phi_r f^lambda_{rho,(1^a)} f^nu_{mu,(1^b)} V_{lambda,mu}`;
/// the minus side mirrors with `b_nu/b_mu`.
pub fn pieri_vertical(rho: &Partition, nu: &Partition, r: u32, side: Side) -> AlgebraElement {
    assert!(r >= 1);
    let phi_r = RatFun::from_laurent(phi_m(r, Variable::T));
    let mut out = AlgebraElement::zero(Basis::Dhl);
    for a in 0..=r {
        let b = r - a;
        match side {
            Side::Plus => {
                for la in add_vertical_strips(rho, a) {
                    let ratio = RatFun::new(b_poly(rho), b_poly(&la)).expect("b_lambda nonzero");
                    let f1 = f_vertical(rho, a, &la);
                    for mu in remove_vertical_strips(nu, b) {
                        let f2 = f_vertical(&mu, b, nu);
                        let coeff = ratio.mul(&phi_r).mul(&f1).mul(&f2);
                        out.add_term(Bipartition::new(la.clone(), mu), coeff);
                    }
                }
            }
            Side::Minus => {
                for mu in add_vertical_strips(nu, b) {
                    let ratio = RatFun::new(b_poly(nu), b_poly(&mu)).expect("b_mu nonzero");
                    let f2 = f_vertical(nu, b, &mu);
                    for la in remove_vertical_strips(rho, a) {
                        let f1 = f_vertical(&la, a, rho);
                        let coeff = ratio.mul(&phi_r).mul(&f1).mul(&f2);
                        out.add_term(Bipartition::new(la, mu.clone()), coeff);
                    }
                }
            }
        }
    }
    out
}

/// Multiplicity-one Pieri rule for Schur-Laurent functions (the `t = 0`
/// specialization of the horizontal rule): the expansion of
/// `s_{rho,nu} * s_r^(side)` in the Schur-Laurent basis.
pub fn pieri_schur(rho: &Partition, nu: &Partition, r: u32, side: Side) -> AlgebraElement {
    assert!(r >= 1);
    let mut out = AlgebraElement::zero(Basis::SchurL);
    for a in 0..=r {
        let b = r - a;
        let (mus, las) = match side {
            Side::Plus => (
                remove_horizontal_strips(nu, a),
                add_horizontal_strips(rho, b),
            ),
            Side::Minus => (
                add_horizontal_strips(nu, a),
                remove_horizontal_strips(rho, b),
            ),
        };
        for mu in &mus {
            for la in &las {
                out.add_term(
                    Bipartition::new(la.clone(), mu.clone()),
                    RatFun::one(Variable::T),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_up_to;
    use crate::dlambda::{mul_generator, to_dhl_basis};
    use crate::ratfun::RatFun;
    use num::BigRational;

    fn par(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn bp(plus: &[u32], minus: &[u32]) -> Bipartition {
        Bipartition::new(par(plus), par(minus))
    }

    fn tp(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(Variable::T);
        for (e, c) in pairs {
            p.add_term(*e, BigRational::from_integer((*c).into()));
        }
        p
    }

    #[test]
    fn phi_psi_examples() {
        assert_eq!(phi_skew(&par(&[1]), &par(&[])), tp(&[(0, 1), (1, -1)]));
        assert!(psi_skew(&par(&[1]), &par(&[])).is_one());
        assert_eq!(
            phi_skew(&par(&[2, 1]), &par(&[1, 1])),
            tp(&[(0, 1), (1, -1)])
        );
        assert_eq!(
            psi_skew(&par(&[2, 1]), &par(&[1, 1])),
            tp(&[(0, 1), (2, -1)])
        );
        // not a horizontal strip
        assert!(phi_skew(&par(&[2, 2]), &par(&[])).is_zero());
    }

    #[test]
    fn b_poly_examples() {
        assert!(b_poly(&par(&[])).is_one());
        assert_eq!(b_poly(&par(&[1, 1])), phi_m(2, Variable::T));
        let expected = phi_m(1, Variable::T).mul(&phi_m(2, Variable::T));
        assert_eq!(b_poly(&par(&[2, 2, 1])), expected);
    }

    #[test]
    fn psi_is_phi_times_b_ratio() {
        // psi_{lambda/rho} = phi_{lambda/rho} b_rho / b_lambda
        for n in 0..=6u32 {
            for la in crate::combinat::partitions_of(n) {
                for a in 0..=n {
                    for rho in remove_horizontal_strips(&la, a) {
                        let lhs = RatFun::from_laurent(psi_skew(&la, &rho));
                        let rhs = RatFun::from_laurent(phi_skew(&la, &rho))
                            .mul(&RatFun::new(b_poly(&rho), b_poly(&la)).unwrap());
                        assert_eq!(lhs, rhs, "{la}/{rho}");
                    }
                }
            }
        }
    }

    #[test]
    fn f_vertical_examples() {
        assert!(f_vertical(&par(&[]), 1, &par(&[1])).is_one());
        assert_eq!(
            f_vertical(&par(&[1]), 1, &par(&[1, 1])),
            RatFun::from_laurent(tp(&[(0, 1), (1, 1)]))
        );
        assert!(f_vertical(&par(&[1]), 1, &par(&[2])).is_one());
        // wrong strip size
        assert!(f_vertical(&par(&[1]), 2, &par(&[2])).is_zero());
    }

    #[test]
    fn horizontal_examples() {
        for r in 1..=3u32 {
            let e = pieri_horizontal(&par(&[]), &par(&[]), r, Side::Plus);
            assert_eq!(e.len(), 1);
            assert!(e.coeff(&bp(&[r], &[])).unwrap().is_one());

            let e = pieri_horizontal(&par(&[]), &par(&[]), r, Side::Minus);
            assert_eq!(e.len(), 1);
            assert!(e.coeff(&bp(&[], &[r])).unwrap().is_one());
        }

        let e = pieri_horizontal(&par(&[]), &par(&[1]), 1, Side::Plus);
        assert_eq!(e.len(), 2);
        assert!(e.coeff(&bp(&[1], &[1])).unwrap().is_one());
        assert_eq!(
            e.coeff(&Bipartition::empty()).unwrap(),
            &RatFun::from_laurent(tp(&[(0, 1), (1, -1)]))
        );
    }

    #[test]
    fn horizontal_matches_monomial_product() {
        // formula == to_dhl(from_dhl(V_{rho,nu}) * v_r) on a couple of shapes
        for (rho, nu, r, side) in [
            (par(&[1]), par(&[1]), 2, Side::Plus),
            (par(&[2]), par(&[1]), 1, Side::Minus),
            (par(&[1, 1]), par(&[]), 2, Side::Plus),
        ] {
            let v =
                crate::dlambda::double_hl_bipartition(&Bipartition::new(rho.clone(), nu.clone()));
            let prod = mul_generator(&v, side, r as i64);
            assert_eq!(
                to_dhl_basis(&prod),
                pieri_horizontal(&rho, &nu, r, side),
                "{rho}|{nu} r={r}"
            );
        }
    }

    #[test]
    fn vertical_examples() {
        // V_{-,-} * V+_{(1)} = V_{(1),-}
        let e = pieri_vertical(&par(&[]), &par(&[]), 1, Side::Plus);
        assert_eq!(e.len(), 1);
        assert!(e.coeff(&bp(&[1], &[])).unwrap().is_one());

        // and against the monomial product for r = 2
        let col2 = crate::dlambda::double_hl_bipartition(&bp(&[1, 1], &[]));
        let prod = vmon_like_product(&par(&[]), &par(&[]), &col2);
        assert_eq!(
            to_dhl_basis(&prod),
            pieri_vertical(&par(&[]), &par(&[]), 2, Side::Plus)
        );

        let col1m = crate::dlambda::double_hl_bipartition(&bp(&[], &[1]));
        let prod = vmon_like_product(&par(&[1]), &par(&[]), &col1m);
        assert_eq!(
            to_dhl_basis(&prod),
            pieri_vertical(&par(&[1]), &par(&[]), 1, Side::Minus)
        );
    }

    fn vmon_like_product(
        rho: &Partition,
        nu: &Partition,
        factor: &AlgebraElement,
    ) -> AlgebraElement {
        let v = crate::dlambda::double_hl_bipartition(&Bipartition::new(rho.clone(), nu.clone()));
        crate::dlambda::vmon_multiply(&v, factor)
    }

    #[test]
    fn schur_examples() {
        for r in 1..=3u32 {
            let e = pieri_schur(&par(&[]), &par(&[]), r, Side::Plus);
            assert_eq!(e.len(), 1);
            assert!(e.coeff(&bp(&[r], &[])).unwrap().is_one());
        }
        let e = pieri_schur(&par(&[]), &par(&[1]), 1, Side::Plus);
        assert_eq!(e.len(), 2);
        assert!(e.coeff(&bp(&[1], &[1])).unwrap().is_one());
        assert!(e.coeff(&Bipartition::empty()).unwrap().is_one());

        // classical Pieri when nu is empty
        let e = pieri_schur(&par(&[1]), &par(&[]), 1, Side::Plus);
        assert_eq!(e.len(), 2);
        assert!(e.coeff(&bp(&[2], &[])).unwrap().is_one());
        assert!(e.coeff(&bp(&[1, 1], &[])).unwrap().is_one());
    }

    #[test]
    fn plus_minus_mirror_symmetry() {
        // swapping sides and components carries the plus rule onto the minus rule
        for rho in partitions_up_to(2) {
            for nu in partitions_up_to(2) {
                for r in 1..=2u32 {
                    let plus = pieri_horizontal(&rho, &nu, r, Side::Plus);
                    let minus = pieri_horizontal(&nu, &rho, r, Side::Minus);
                    assert_eq!(plus, minus.swapped_terms(), "{rho}|{nu} r={r}");
                }
            }
        }
    }

    #[test]
    fn schur_is_horizontal_at_t_zero() {
        use num::Zero;
        let zero = BigRational::zero();
        for rho in partitions_up_to(2) {
            for nu in partitions_up_to(2) {
                for side in [Side::Plus, Side::Minus] {
                    let hl = pieri_horizontal(&rho, &nu, 2, side);
                    let specialized = hl.eval_coeffs(&zero).unwrap().relabeled(Basis::SchurL);
                    assert_eq!(specialized, pieri_schur(&rho, &nu, 2, side));
                }
            }
        }
    }
}
