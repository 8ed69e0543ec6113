//! Schur-Laurent functions: the two-family determinant formula, exact
//! cofactor expansion over the monomial ring, and the comparison with the
//! `t = 0` specialization of the double HL elements.

use crate::combinat::{Bipartition, Partition};
use crate::dlambda::{double_hl_bipartition, eliminate_against, AlgebraElement, Basis};
use crate::ratfun::{RatFun, Variable};
use num::{BigRational, Zero};

/// One entry of the determinant matrix: `h^+_k` or `h^-_k` with the
/// conventions `h_0 = 1` and `h_k = 0` for `k < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Entry {
    Zero,
    One,
    Plus(u32),
    Minus(u32),
}

fn entry(minus_family: bool, index: i64) -> Entry {
    if index < 0 {
        Entry::Zero
    } else if index == 0 {
        Entry::One
    } else if minus_family {
        Entry::Minus(index as u32)
    } else {
        Entry::Plus(index as u32)
    }
}

/// The `(l(lambda)+l(mu))`-square matrix of signed generator indices whose
/// determinant is `s_{lambda,mu}`: the first `l(mu)` rows hold `h^-` entries
/// `h^-_{mu_{s-i+1} + (i-1) - (j-1)}`, the remaining `l(lambda)` rows hold
/// `h^+` entries `h^+_{lambda_k - s - (k-1) + (j-1)}`.
fn h_matrix(la: &Partition, mu: &Partition) -> Vec<Vec<Entry>> {
    let r = la.len();
    let s = mu.len();
    let n = r + s;
    let mut m = vec![vec![Entry::Zero; n]; n];
    for i in 1..=s {
        for j in 1..=n {
            let idx = mu.part(s - i + 1) as i64 + (i as i64 - 1) - (j as i64 - 1);
            m[i - 1][j - 1] = entry(true, idx);
        }
    }
    for k in 1..=r {
        for j in 1..=n {
            let idx = la.part(k) as i64 - s as i64 - (k as i64 - 1) + (j as i64 - 1);
            m[s + k - 1][j - 1] = entry(false, idx);
        }
    }
    m
}

/// The Schur-Laurent function `s_{lambda,mu}`, expanded in generator
/// monomials with integer coefficients (the generators are read as the
/// `v^+/v^-` of the abstract double symmetric-function ring).
pub fn schur_laurent(la: &Partition, mu: &Partition) -> AlgebraElement {
    let m = h_matrix(la, mu);
    let n = m.len();
    let mut out = AlgebraElement::zero(Basis::Vmon);
    if n == 0 {
        return AlgebraElement::one(Basis::Vmon, Variable::T);
    }
    // cofactor expansion along rows, tracking sign and the picked generators
    fn expand(
        m: &[Vec<Entry>],
        row: usize,
        used_cols: &mut Vec<bool>,
        plus: &mut Vec<u32>,
        minus: &mut Vec<u32>,
        sign: i64,
        out: &mut AlgebraElement,
    ) {
        let n = m.len();
        if row == n {
            let bip = Bipartition::new(Partition::new(plus.clone()), Partition::new(minus.clone()));
            out.add_term(
                bip,
                RatFun::from_rational(Variable::T, BigRational::from_integer(sign.into())),
            );
            return;
        }
        let mut skipped = 0usize;
        for col in 0..n {
            if used_cols[col] {
                continue;
            }
            let e = m[row][col];
            if e != Entry::Zero {
                // parity of the permutation restricted to remaining columns
                let s = if skipped.is_multiple_of(2) {
                    sign
                } else {
                    -sign
                };
                used_cols[col] = true;
                match e {
                    Entry::Plus(k) => {
                        plus.push(k);
                        expand(m, row + 1, used_cols, plus, minus, s, out);
                        plus.pop();
                    }
                    Entry::Minus(k) => {
                        minus.push(k);
                        expand(m, row + 1, used_cols, plus, minus, s, out);
                        minus.pop();
                    }
                    Entry::One => expand(m, row + 1, used_cols, plus, minus, s, out),
                    Entry::Zero => unreachable!(),
                }
                used_cols[col] = false;
            }
            skipped += 1;
        }
    }
    let mut used = vec![false; n];
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    expand(&m, 0, &mut used, &mut plus, &mut minus, 1, &mut out);
    out
}

/// `true` when the determinant formula agrees with `V_{lambda,mu}` at
/// `t = 0` (generators identified).
pub fn verify_t0(la: &Partition, mu: &Partition) -> bool {
    let det = schur_laurent(la, mu);
    let v = double_hl_bipartition(&Bipartition::new(la.clone(), mu.clone()));
    match v.eval_coeffs(&BigRational::zero()) {
        Ok(specialized) => specialized == det,
        Err(_) => false,
    }
}

/// Expand a monomial element with constant coefficients in the
/// Schur-Laurent basis (unitriangular elimination, like the double HL
/// conversion but against determinant expansions).
pub fn to_schur_basis(x: &AlgebraElement) -> AlgebraElement {
    eliminate_against(x, Basis::SchurL, |b| schur_laurent(&b.plus, &b.minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::bipartitions_up_to;
    use crate::dlambda::vmon_multiply;
    use crate::pieri::pieri_schur;
    use crate::Side;

    fn par(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn bp(plus: &[u32], minus: &[u32]) -> Bipartition {
        Bipartition::new(par(plus), par(minus))
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            schur_laurent(&par(&[]), &par(&[])),
            AlgebraElement::one(Basis::Vmon, Variable::T)
        );
        assert_eq!(
            schur_laurent(&par(&[2]), &par(&[])),
            AlgebraElement::term(Basis::Vmon, bp(&[2], &[]), RatFun::one(Variable::T))
        );
        // s_{(1),(1)} = h1+ h1- - 1
        let s = schur_laurent(&par(&[1]), &par(&[1]));
        let mut expected =
            AlgebraElement::term(Basis::Vmon, bp(&[1], &[1]), RatFun::one(Variable::T));
        expected.add_term(Bipartition::empty(), RatFun::from_int(Variable::T, -1));
        assert_eq!(s, expected);
    }

    #[test]
    fn classical_jacobi_trudi() {
        // s_{(2,1)} = h2 h1 - h3
        let s = schur_laurent(&par(&[2, 1]), &par(&[]));
        let mut expected =
            AlgebraElement::term(Basis::Vmon, bp(&[2, 1], &[]), RatFun::one(Variable::T));
        expected.add_term(bp(&[3], &[]), RatFun::from_int(Variable::T, -1));
        assert_eq!(s, expected);
    }

    #[test]
    fn t0_specialization_examples() {
        assert!(verify_t0(&par(&[1]), &par(&[1])));
        assert!(verify_t0(&par(&[2, 1]), &par(&[])));
        assert!(verify_t0(&par(&[2]), &par(&[1, 1])));
    }

    #[test]
    fn t0_specialization_small_sizes() {
        for bip in bipartitions_up_to(4) {
            assert!(verify_t0(&bip.plus, &bip.minus), "{bip}");
        }
    }

    #[test]
    fn coefficients_are_integers() {
        for bip in bipartitions_up_to(4) {
            let s = schur_laurent(&bip.plus, &bip.minus);
            for (_, c) in s.terms() {
                let r = c.as_rational().expect("constant coefficient");
                assert!(r.is_integer(), "{bip}: {c}");
            }
        }
    }

    #[test]
    fn schur_pieri_matches_determinant_products() {
        for bip in bipartitions_up_to(3) {
            for r in 1..=2u32 {
                for side in [Side::Plus, Side::Minus] {
                    let s = schur_laurent(&bip.plus, &bip.minus);
                    let gen = match side {
                        Side::Plus => AlgebraElement::term(
                            Basis::Vmon,
                            bp(&[r], &[]),
                            RatFun::one(Variable::T),
                        ),
                        Side::Minus => AlgebraElement::term(
                            Basis::Vmon,
                            bp(&[], &[r]),
                            RatFun::one(Variable::T),
                        ),
                    };
                    let product = vmon_multiply(&s, &gen);
                    let expanded = to_schur_basis(&product);
                    let rule = pieri_schur(&bip.plus, &bip.minus, r, side);
                    assert_eq!(expanded, rule, "{bip} r={r} {side:?}");
                }
            }
        }
    }
}
