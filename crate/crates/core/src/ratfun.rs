//! Exact coefficient arithmetic: sparse Laurent polynomials and rational
//! functions in a single named formal variable (`t`, `q` or `v`) over
//! arbitrary-precision rationals.
//!
//! Every coefficient in this crate lives here; there is no floating point
//! anywhere. A [`RatFun`] is kept in a canonical form (numerator carries the
//! Laurent valuation, denominator is an ordinary polynomial with nonzero
//! constant term, monic, coprime to the numerator), so equality is a
//! structural check.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// The named formal variables. Conversions between them only happen
/// through the explicit substitution operations on [`RatFun`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    T,
    Q,
    V,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::T => "t",
            Variable::Q => "q",
            Variable::V => "v",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Variable, Variable),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at substitution point {0}")]
    Pole(BigRational),
}

/// Sparse Laurent polynomial: a finite map `exponent -> nonzero rational`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 0, BigRational::one())
    }

    pub fn monomial(var: Variable, exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { var, terms }
    }

    /// `1 - x^k` in the given variable.
    pub fn one_minus_power(var: Variable, k: i64) -> Self {
        let mut p = Self::one(var);
        p.add_term(k, -BigRational::one());
        p
    }

    pub fn from_int(var: Variable, n: i64) -> Self {
        Self::monomial(var, 0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Smallest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "variable mismatch: {} vs {}",
            self.var, other.var
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_var(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_var(other);
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `x -> x^-1` and rename the variable (used for `t -> q^-1`
    /// and `q -> t^-1`).
    pub fn inverted_into(&self, var: Variable) -> Self {
        LaurentPoly {
            var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute `x -> y^2` and rename the variable (used for `q -> v^2`).
    pub fn squared_into(&self, var: Variable) -> Self {
        LaurentPoly {
            var,
            terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect(),
        }
    }

    /// Evaluate at a rational point. Fails on negative exponents at zero.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, CoeffError> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if *e < 0 && x.is_zero() {
                return Err(CoeffError::Pole(x.clone()));
            }
            acc += c * rational_pow(x, *e);
        }
        Ok(acc)
    }

    /// Dense coefficient vector of an ordinary polynomial (valuation >= 0).
    fn to_dense(&self) -> Vec<BigRational> {
        let deg = match self.degree() {
            None => return vec![],
            Some(d) => d,
        };
        assert!(self.valuation().unwrap() >= 0, "not an ordinary polynomial");
        let mut dense = vec![BigRational::zero(); (deg + 1) as usize];
        for (e, c) in &self.terms {
            dense[*e as usize] = c.clone();
        }
        dense
    }

    fn from_dense(var: Variable, dense: &[BigRational]) -> Self {
        let mut p = LaurentPoly::zero(var);
        for (e, c) in dense.iter().enumerate() {
            p.add_term(e as i64, c.clone());
        }
        p
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), json!(c.to_string())))
            .collect();
        Value::Object(map)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                if mag.denom().is_one() {
                    out.push_str(&mag.numer().to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()));
                }
            }
            if *e != 0 {
                out.push_str(self.var.name());
                if *e != 1 {
                    out.push_str(&format!("^{{{}}}", e));
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if !mag.is_one() || *e == 0 {
                write!(f, "{}", mag)?;
                if *e != 0 {
                    f.write_str("*")?;
                }
            }
            if *e != 0 {
                f.write_str(self.var.name())?;
                if *e != 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let p = x.numer().pow(e.unsigned_abs() as u32);
    let q = x.denom().pow(e.unsigned_abs() as u32);
    if e > 0 {
        BigRational::new(p, q)
    } else {
        BigRational::new(q, p)
    }
}

// --- dense polynomial helpers used for gcd reduction ---

fn dense_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn dense_divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = num.to_vec();
    dense_trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / lead;
        for i in 0..=dd {
            let v = &den[i] * &c;
            rem[k + i] -= v;
        }
        quot[k] = c;
        dense_trim(&mut rem);
        if rem.len() <= dd {
            break;
        }
    }
    (quot, rem)
}

/// Monic gcd over Q[x] by the Euclidean algorithm.
fn dense_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    dense_trim(&mut a);
    dense_trim(&mut b);
    while !b.is_empty() {
        let (_, r) = dense_divrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

/// Exact rational function `num/den` in canonical form:
/// - the denominator is an ordinary polynomial, monic, with nonzero constant
///   term (the Laurent valuation is carried by the numerator),
/// - numerator and denominator are coprime,
/// - the zero function is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    var: Variable,
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn zero(var: Variable) -> Self {
        RatFun {
            var,
            num: LaurentPoly::zero(var),
            den: LaurentPoly::one(var),
        }
    }

    pub fn one(var: Variable) -> Self {
        RatFun {
            var,
            num: LaurentPoly::one(var),
            den: LaurentPoly::one(var),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFun {
            var: p.var(),
            den: LaurentPoly::one(p.var()),
            num: p,
        }
    }

    pub fn from_rational(var: Variable, c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::monomial(var, 0, c))
    }

    pub fn from_int(var: Variable, n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(var, n))
    }

    pub fn monomial(var: Variable, exp: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(var, exp, BigRational::one()))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if num.var() != den.var() {
            return Err(CoeffError::VariableMismatch(num.var(), den.var()));
        }
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let var = num.var();
        if num.is_zero() {
            return Self::zero(var);
        }
        if den.is_one() {
            return Self::from_laurent(num);
        }
        let vn = num.valuation().unwrap();
        let vd = den.valuation().unwrap();
        let n0 = num.shifted(-vn).to_dense();
        let d0 = den.shifted(-vd).to_dense();
        let g = dense_gcd(&n0, &d0);
        let (mut n1, r1) = dense_divrem(&n0, &g);
        debug_assert!(r1.is_empty());
        let (mut d1, r2) = dense_divrem(&d0, &g);
        debug_assert!(r2.is_empty());
        let lead = d1.last().unwrap().clone();
        for c in &mut n1 {
            *c /= &lead;
        }
        for c in &mut d1 {
            *c /= &lead;
        }
        RatFun {
            var,
            num: LaurentPoly::from_dense(var, &n1).shifted(vn - vd),
            den: LaurentPoly::from_dense(var, &d1),
        }
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical form has trivial denominator, i.e. the value
    /// is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The value as a constant rational, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.den.is_one() && self.num.degree() == Some(0) {
            return Some(self.num.coeff(0));
        }
        None
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "variable mismatch: {} vs {}",
            self.var, other.var
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_var(other);
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFun {
            var: self.var,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_var(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        Self::normalized(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CoeffError> {
        self.check_var(other);
        if other.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn div(&self, other: &Self) -> Self {
        self.try_div(other).expect("division by zero")
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        Self::one(self.var).try_div(self)
    }

    /// `t -> q^-1`.
    pub fn subst_t_to_q_inv(&self) -> Self {
        assert_eq!(self.var, Variable::T, "subst_t_to_q_inv needs a t-function");
        Self::normalized(
            self.num.inverted_into(Variable::Q),
            self.den.inverted_into(Variable::Q),
        )
    }

    /// `q -> t^-1` (the generic-algebra boundary).
    pub fn subst_q_to_t_inv(&self) -> Self {
        assert_eq!(self.var, Variable::Q, "subst_q_to_t_inv needs a q-function");
        Self::normalized(
            self.num.inverted_into(Variable::T),
            self.den.inverted_into(Variable::T),
        )
    }

    /// `q -> v^2`.
    pub fn subst_q_to_v_squared(&self) -> Self {
        assert_eq!(
            self.var,
            Variable::Q,
            "subst_q_to_v_squared needs a q-function"
        );
        Self::normalized(
            self.num.squared_into(Variable::V),
            self.den.squared_into(Variable::V),
        )
    }

    /// Evaluate the variable at a rational point; errors on a pole.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(CoeffError::Pole(x.clone()));
        }
        let n = self.num.eval(x)?;
        Ok(n / d)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "var": self.var.name(),
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        })
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.to_latex(),
                self.den.to_latex()
            )
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// `phi_m = (1-x)(1-x^2)...(1-x^m)`, with `phi_0 = 1`.
pub fn phi_m(m: u32, var: Variable) -> LaurentPoly {
    let mut p = LaurentPoly::one(var);
    for i in 1..=m {
        p = p.mul(&LaurentPoly::one_minus_power(var, i as i64));
    }
    p
}

/// The one-sided Gaussian binomial
/// `[n r]_+ = (1-x^n)(1-x^{n-1})...(1-x^{n-r+1}) / ((1-x)...(1-x^r))`
/// for `r >= 0`, and `0` for `r < 0`. For `0 <= r <= n` this is the ordinary
/// Gaussian binomial and the result is a polynomial.
pub fn qbinom_plus(n: i64, r: i64, var: Variable) -> RatFun {
    if r < 0 {
        return RatFun::zero(var);
    }
    let mut num = LaurentPoly::one(var);
    let mut den = LaurentPoly::one(var);
    for i in 1..=r {
        num = num.mul(&LaurentPoly::one_minus_power(var, n - i + 1));
        den = den.mul(&LaurentPoly::one_minus_power(var, i));
    }
    RatFun::new(num, den).expect("denominator is a product of 1-x^i")
}

/// Parse a rational like `3`, `-1/2`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> Variable {
        Variable::T
    }

    fn tf(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(t());
        for (e, c) in pairs {
            p.add_term(*e, BigRational::from_integer(BigInt::from(*c)));
        }
        p
    }

    #[test]
    fn product_of_binomials() {
        let a = RatFun::from_laurent(tf(&[(0, 1), (1, -1)]));
        let b = RatFun::from_laurent(tf(&[(0, 1), (1, 1)]));
        assert_eq!(a.mul(&b), RatFun::from_laurent(tf(&[(0, 1), (2, -1)])));
    }

    #[test]
    fn exact_cancellation() {
        let num = RatFun::from_laurent(tf(&[(0, 1), (2, -1)]));
        let den = RatFun::from_laurent(tf(&[(0, 1), (1, -1)]));
        assert_eq!(num.div(&den), RatFun::from_laurent(tf(&[(0, 1), (1, 1)])));
    }

    #[test]
    fn laurent_sum_matches_quotient_form() {
        // t^-1 + t and (1+t^2)/t normalize identically
        let lhs = RatFun::from_laurent(tf(&[(-1, 1), (1, 1)]));
        let rhs = RatFun::new(tf(&[(0, 1), (2, 1)]), tf(&[(1, 1)])).unwrap();
        assert_eq!(lhs, rhs);
        assert!(lhs.is_laurent());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = RatFun::one(t());
        assert_eq!(
            one.try_div(&RatFun::zero(t())),
            Err(CoeffError::DivisionByZero)
        );
    }

    #[test]
    fn substitute_t_to_q_inv() {
        // 1 - t  ->  1 - q^-1 = (q-1)/q
        let f = RatFun::from_laurent(tf(&[(0, 1), (1, -1)]));
        let g = f.subst_t_to_q_inv();
        assert_eq!(g.var(), Variable::Q);
        // (q-1)/q, i.e. 1 - q^-1 as a Laurent polynomial
        let mut expected = LaurentPoly::one(Variable::Q);
        expected.add_term(-1, -BigRational::one());
        assert_eq!(g, RatFun::from_laurent(expected));
    }

    #[test]
    fn substitute_q_to_v_squared() {
        let f = RatFun::monomial(Variable::Q, 1);
        let g = f.subst_q_to_v_squared();
        assert_eq!(g, RatFun::monomial(Variable::V, 2));
    }

    #[test]
    fn phi_values() {
        assert!(phi_m(0, t()).is_one());
        let expected = tf(&[(0, 1), (1, -1)]).mul(&tf(&[(0, 1), (2, -1)]));
        assert_eq!(phi_m(2, t()), expected);
        // phi_2 at t = 1/2 is 3/8
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            phi_m(2, t()).eval(&half).unwrap(),
            BigRational::new(3.into(), 8.into())
        );
        // phi_3 at t = 2 is (-1)(-3)(-7) = -21
        let two = BigRational::from_integer(2.into());
        assert_eq!(
            phi_m(3, t()).eval(&two).unwrap(),
            BigRational::from_integer((-21).into())
        );
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(
            qbinom_plus(2, 1, t()),
            RatFun::from_laurent(tf(&[(0, 1), (1, 1)]))
        );
        assert!(qbinom_plus(3, -1, t()).is_zero());
        assert!(qbinom_plus(3, 0, t()).is_one());
        // 0 <= n < r vanishes
        assert!(qbinom_plus(1, 2, t()).is_zero());
    }

    #[test]
    fn qbinom_matches_phi_ratio() {
        for n in 0..=8i64 {
            for r in 0..=n {
                let ratio = RatFun::new(
                    phi_m(n as u32, t()),
                    phi_m(r as u32, t()).mul(&phi_m((n - r) as u32, t())),
                )
                .unwrap();
                let qb = qbinom_plus(n, r, t());
                assert_eq!(qb, ratio, "[{} {}]", n, r);
                assert!(qb.is_laurent());
            }
        }
    }

    #[test]
    fn pole_detection() {
        let f = RatFun::new(tf(&[(0, 1)]), tf(&[(0, 1), (1, -1)])).unwrap();
        let one = BigRational::one();
        assert!(matches!(f.eval(&one), Err(CoeffError::Pole(_))));
    }

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-4i64..5), (-6i64..7)), 0..8).prop_map(|pairs| {
            let mut p = LaurentPoly::zero(Variable::T);
            for (e, c) in pairs {
                p.add_term(e, BigRational::from_integer(BigInt::from(c)));
            }
            p
        })
    }

    fn small_ratfun() -> impl Strategy<Value = RatFun> {
        (small_laurent(), small_laurent()).prop_map(|(n, d)| {
            if d.is_zero() {
                RatFun::from_laurent(n)
            } else {
                RatFun::new(n, d).unwrap()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in small_ratfun(), b in small_ratfun(), c in small_ratfun()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), RatFun::zero(Variable::T));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inverse().unwrap()), RatFun::one(Variable::T));
            }
        }

        #[test]
        fn substitution_is_a_homomorphism(a in small_ratfun(), b in small_ratfun()) {
            prop_assert_eq!(
                a.mul(&b).subst_t_to_q_inv(),
                a.subst_t_to_q_inv().mul(&b.subst_t_to_q_inv())
            );
            prop_assert_eq!(
                a.add(&b).subst_t_to_q_inv(),
                a.subst_t_to_q_inv().add(&b.subst_t_to_q_inv())
            );
        }
    }
}
