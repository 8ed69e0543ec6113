//! The ring of double symmetric functions with parameter `t`, presented on
//! the abstract generators `v_r^+`, `v_r^-`: monomial arithmetic, the double
//! Hall-Littlewood elements `V_{lambda,mu}` computed through the raising /
//! lowering operator recursions, and the triangular change of basis between
//! the two.
//!
//! The infinite operator product defining `V_{alpha,beta}` is never evaluated
//! directly; peeling the last entry of either vector gives a terminating
//! recursion (one step removes one entry), and any peel order agrees.

use crate::combinat::{strictly_dominates, Bipartition, IntVector, Partition};
use crate::pieri;
use crate::ratfun::{LaurentPoly, RatFun, Variable};
use num::{BigRational, One};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// The bases an [`AlgebraElement`] can be expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Monomials `v^+_lambda v^-_mu` in the generators.
    Vmon,
    /// Double Hall-Littlewood elements `V_{lambda,mu}`.
    Dhl,
    /// Derived Hall basis `u_{lambda,mu}` (classes of `S^(lambda) + S^(mu)[1]`).
    HallU,
    /// Rescaled derived Hall basis `Vhat_{lambda,mu}`.
    HallVhat,
    /// Schur-Laurent functions `s_{lambda,mu}`.
    SchurL,
    /// Single-variable Hall-Littlewood `Q_lambda` (minus side empty).
    HlQ,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Vmon => "Vmon",
            Basis::Dhl => "DHL",
            Basis::HallU => "HallU",
            Basis::HallVhat => "HallVhat",
            Basis::SchurL => "SchurL",
            Basis::HlQ => "HLQ",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Vmon => "v",
            Basis::Dhl => "V",
            Basis::HallU => "u",
            Basis::HallVhat => "Vhat",
            Basis::SchurL => "s",
            Basis::HlQ => "Q",
        }
    }
}

/// A finite formal linear combination of bipartition-indexed basis symbols
/// with [`RatFun`] coefficients. Zero coefficients are never stored, so
/// structural equality is algebra equality within a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    basis: Basis,
    terms: std::collections::BTreeMap<Bipartition, RatFun>,
}

impl AlgebraElement {
    pub fn zero(basis: Basis) -> Self {
        AlgebraElement {
            basis,
            terms: Default::default(),
        }
    }

    pub fn one(basis: Basis, var: Variable) -> Self {
        Self::term(basis, Bipartition::empty(), RatFun::one(var))
    }

    pub fn term(basis: Basis, bip: Bipartition, coeff: RatFun) -> Self {
        let mut el = Self::zero(basis);
        el.add_term(bip, coeff);
        el
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bipartition, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, bip: &Bipartition) -> Option<&RatFun> {
        self.terms.get(bip)
    }

    pub fn add_term(&mut self, bip: Bipartition, coeff: RatFun) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(bip) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_basis(&self, other: &Self) {
        assert_eq!(
            self.basis,
            other.basis,
            "basis mismatch: {} vs {}",
            self.basis.name(),
            other.basis.name()
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_basis(other);
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.basis);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.neg());
        }
        out
    }

    pub fn scale_ratfun(&self, c: &RatFun) -> Self {
        let mut out = Self::zero(self.basis);
        if c.is_zero() {
            return out;
        }
        for (b, k) in &self.terms {
            out.add_term(b.clone(), k.mul(c));
        }
        out
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.basis);
        if p.is_zero() {
            return out;
        }
        for (b, k) in &self.terms {
            out.add_term(b.clone(), k.mul_laurent(p));
        }
        out
    }

    /// The variable the coefficients live in, if any term exists.
    pub fn any_var(&self) -> Option<Variable> {
        self.terms.values().next().map(|c| c.var())
    }

    /// Relabel the basis tag without touching terms (a pure renaming, used
    /// e.g. for the `Vhat -> V` leg of the isomorphism).
    pub fn relabeled(&self, basis: Basis) -> Self {
        AlgebraElement {
            basis,
            terms: self.terms.clone(),
        }
    }

    /// Apply a coefficient map, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        let mut out = Self::zero(self.basis);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), f(c));
        }
        out
    }

    /// Specialize every coefficient at `t = value` (or whatever the variable
    /// is), keeping the result as constant coefficients in the same variable.
    pub fn eval_coeffs(&self, value: &BigRational) -> Result<Self, crate::ratfun::CoeffError> {
        let mut out = Self::zero(self.basis);
        for (b, c) in &self.terms {
            let v = c.eval(value)?;
            out.add_term(b.clone(), RatFun::from_rational(c.var(), v));
        }
        Ok(out)
    }

    /// Swap the plus/minus component of every term.
    pub fn swapped_terms(&self) -> Self {
        let mut out = Self::zero(self.basis);
        for (b, c) in &self.terms {
            out.add_term(b.swapped(), c.clone());
        }
        out
    }

    /// Largest total size among the term indices.
    pub fn max_total_size(&self) -> u32 {
        self.terms.keys().map(|b| b.total_size()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(b, c)| {
                json!({
                    "plus": b.plus.parts(),
                    "minus": b.minus.parts(),
                    "coeff": c.to_json(),
                })
            })
            .collect();
        json!({ "basis": self.basis.name(), "terms": terms })
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let sym = latex_symbol(self.basis, b);
            if c.is_one() && !sym.is_empty() {
                out.push_str(&sym);
            } else if sym.is_empty() {
                out.push_str(&c.to_latex());
            } else {
                out.push_str(&format!("\\left({}\\right) {}", c.to_latex(), sym));
            }
        }
        out
    }
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        return "\\emptyset".to_string();
    }
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn latex_symbol(basis: Basis, b: &Bipartition) -> String {
    match basis {
        Basis::Vmon => {
            let mut s = String::new();
            for &r in b.plus.parts() {
                s.push_str(&format!("v^{{+}}_{{{}}}", r));
            }
            for &r in b.minus.parts() {
                s.push_str(&format!("v^{{-}}_{{{}}}", r));
            }
            s
        }
        Basis::Dhl => format!(
            "V_{{{},{}}}",
            latex_partition(&b.plus),
            latex_partition(&b.minus)
        ),
        Basis::HallU => format!(
            "\\mathfrak{{u}}_{{{},{}}}",
            latex_partition(&b.plus),
            latex_partition(&b.minus)
        ),
        Basis::HallVhat => format!(
            "\\widehat{{V}}_{{{},{}}}",
            latex_partition(&b.plus),
            latex_partition(&b.minus)
        ),
        Basis::SchurL => format!(
            "s_{{{},{}}}",
            latex_partition(&b.plus),
            latex_partition(&b.minus)
        ),
        Basis::HlQ => format!("Q_{{{}}}", latex_partition(&b.plus)),
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let sym = if self.basis == Basis::Vmon && b.is_empty() {
                "1".to_string()
            } else {
                format!("{}[{}]", self.basis.symbol(), b)
            };
            if c.is_one() {
                f.write_str(&sym)?;
            } else {
                write!(f, "({})*{}", c, sym)?;
            }
        }
        Ok(())
    }
}

/// Which generator family a single `v_r` belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// Multiply two elements in the monomial basis: bilinear, merging the
/// partition components of each pair of monomials.
pub fn vmon_multiply(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    assert_eq!(a.basis(), Basis::Vmon);
    assert_eq!(b.basis(), Basis::Vmon);
    let mut out = AlgebraElement::zero(Basis::Vmon);
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let bip = Bipartition::new(ba.plus.merged(&bb.plus), ba.minus.merged(&bb.minus));
            out.add_term(bip, ca.mul(cb));
        }
    }
    out
}

/// Multiply by the single generator `v_r^+` or `v_r^-` (`r = 0` is the
/// identity; `r < 0` is zero).
pub fn mul_generator(x: &AlgebraElement, side: Side, r: i64) -> AlgebraElement {
    assert_eq!(x.basis(), Basis::Vmon);
    if r < 0 {
        return AlgebraElement::zero(Basis::Vmon);
    }
    if r == 0 {
        return x.clone();
    }
    let mut out = AlgebraElement::zero(Basis::Vmon);
    for (b, c) in x.terms() {
        let bip = match side {
            Side::Plus => Bipartition::new(b.plus.with_row(r as u32), b.minus.clone()),
            Side::Minus => Bipartition::new(b.plus.clone(), b.minus.with_row(r as u32)),
        };
        out.add_term(bip, c.clone());
    }
    out
}

/// The order in which the operator recursion peels vector entries. Any
/// order gives the same element; the library default peels the plus vector
/// first, which is also the only order whose results are cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelOrder {
    PlusFirst,
    MinusFirst,
    Alternating,
}

fn dhl_cache() -> &'static Mutex<HashMap<Bipartition, AlgebraElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Bipartition, AlgebraElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn strip_trailing_zeros(v: &[i64]) -> &[i64] {
    let mut n = v.len();
    while n > 0 && v[n - 1] == 0 {
        n -= 1;
    }
    &v[..n]
}

fn partition_key(plus: &[i64], minus: &[i64]) -> Option<Bipartition> {
    fn as_partition(v: &[i64]) -> Option<Partition> {
        if v.iter().any(|&x| x <= 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::new(v.iter().map(|&x| x as u32).collect()))
    }
    Some(Bipartition::new(as_partition(plus)?, as_partition(minus)?))
}

/// All vectors in `N^len` with entry sum at most `max_sum`.
fn compositions_up_to(len: usize, max_sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64; len];
    fn rec(pos: usize, budget: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=budget {
            current[pos] = v;
            rec(pos + 1, budget - v, current, out);
        }
        current[pos] = 0;
    }
    if max_sum < 0 {
        return out;
    }
    rec(0, max_sum, &mut current, &mut out);
    out
}

/// `V_{alpha,beta}` for arbitrary integer vectors, expanded in the monomial
/// basis. Negative entries are legal and resolve through `v_a = 0`, `a < 0`.
pub fn double_hl(alpha: &IntVector, beta: &IntVector) -> AlgebraElement {
    expand(alpha.entries(), beta.entries(), PeelOrder::PlusFirst, 0)
}

/// `V_{lambda,mu}` for a bipartition.
pub fn double_hl_bipartition(bip: &Bipartition) -> AlgebraElement {
    double_hl(&IntVector::from(&bip.plus), &IntVector::from(&bip.minus))
}

/// Same element computed with a chosen peel order (the orders agree; this is
/// the executable content of the finite-sum exchange property).
pub fn double_hl_with_order(
    alpha: &IntVector,
    beta: &IntVector,
    order: PeelOrder,
) -> AlgebraElement {
    expand(alpha.entries(), beta.entries(), order, 0)
}

fn expand(plus: &[i64], minus: &[i64], order: PeelOrder, depth: usize) -> AlgebraElement {
    let plus = strip_trailing_zeros(plus);
    let minus = strip_trailing_zeros(minus);
    if plus.is_empty() && minus.is_empty() {
        return AlgebraElement::one(Basis::Vmon, Variable::T);
    }

    let key = if order == PeelOrder::PlusFirst {
        partition_key(plus, minus)
    } else {
        None
    };
    if let Some(k) = &key {
        if let Some(hit) = dhl_cache().lock().unwrap().get(k) {
            return hit.clone();
        }
    }

    let peel_plus = match order {
        PeelOrder::PlusFirst => !plus.is_empty(),
        PeelOrder::MinusFirst => minus.is_empty(),
        PeelOrder::Alternating => {
            if minus.is_empty() {
                true
            } else if plus.is_empty() {
                false
            } else {
                depth.is_multiple_of(2)
            }
        }
    };

    let result = if peel_plus {
        peel_step(plus, minus, Side::Plus, order, depth)
    } else {
        peel_step(minus, plus, Side::Minus, order, depth)
    };

    if let Some(k) = key {
        dhl_cache()
            .lock()
            .unwrap()
            .entry(k)
            .or_insert_with(|| result.clone());
    }
    result
}

/// One application of the peeling recursion: removes the last entry `r` of
/// `same` (the side being peeled), adding compositions `eta` to its prefix
/// and subtracting compositions `gamma` from the opposite side, with
/// coefficient `t^{|gamma|+|eta|} (1-t^{-1})^{l(gamma)+l(eta)}` and a factor
/// `v_{r-|gamma|-|eta|}` on the peeled side.
fn peel_step(
    same: &[i64],
    opposite: &[i64],
    side: Side,
    order: PeelOrder,
    depth: usize,
) -> AlgebraElement {
    let (&r, prefix) = same.split_last().expect("peeled side is nonempty");
    let mut acc = AlgebraElement::zero(Basis::Vmon);
    if r < 0 {
        return acc;
    }
    let one_minus_tinv = {
        let mut p = LaurentPoly::one(Variable::T);
        p.add_term(-1, -BigRational::one());
        p
    };
    for gamma in compositions_up_to(opposite.len(), r) {
        let g: i64 = gamma.iter().sum();
        for eta in compositions_up_to(prefix.len(), r - g) {
            let e: i64 = eta.iter().sum();
            let nonzeros =
                gamma.iter().filter(|&&x| x > 0).count() + eta.iter().filter(|&&x| x > 0).count();
            let mut coeff = LaurentPoly::monomial(Variable::T, g + e, BigRational::one());
            for _ in 0..nonzeros {
                coeff = coeff.mul(&one_minus_tinv);
            }
            let new_same: Vec<i64> = prefix.iter().zip(&eta).map(|(a, b)| a + b).collect();
            let new_opposite: Vec<i64> = opposite.iter().zip(&gamma).map(|(a, b)| a - b).collect();
            let sub = match side {
                Side::Plus => expand(&new_same, &new_opposite, order, depth + 1),
                Side::Minus => expand(&new_opposite, &new_same, order, depth + 1),
            };
            let term = mul_generator(&sub.scale_laurent(&coeff), side, r - g - e);
            acc = acc.add(&term);
        }
    }
    acc
}

/// Triangular elimination of `x` against the expansions produced by
/// `expand_basis`: repeatedly strips a dominance-minimal monomial, which is
/// the leading (unit-coefficient) monomial of exactly one basis element.
pub(crate) fn eliminate_against(
    x: &AlgebraElement,
    target: Basis,
    expand_basis: impl Fn(&Bipartition) -> AlgebraElement,
) -> AlgebraElement {
    assert_eq!(x.basis(), Basis::Vmon);
    let mut work = x.clone();
    let mut out = AlgebraElement::zero(target);
    while !work.is_zero() {
        let minimal = work
            .terms()
            .map(|(b, _)| b.clone())
            .find(|b| {
                !work
                    .terms()
                    .any(|(other, _)| other != b && strictly_dominates(b, other))
            })
            .expect("finite poset has a minimal element");
        let coeff = work.coeff(&minimal).unwrap().clone();
        work = work.sub(&expand_basis(&minimal).scale_ratfun(&coeff));
        out.add_term(minimal, coeff);
    }
    out
}

/// Expand a monomial-basis element in the double HL basis. Exact by the
/// unitriangularity of `V_{lambda,mu} = v_{lambda,mu} + (strictly dominating)`.
pub fn to_dhl_basis(x: &AlgebraElement) -> AlgebraElement {
    eliminate_against(x, Basis::Dhl, double_hl_bipartition)
}

/// Expand a double-HL-basis element in monomials.
pub fn from_dhl_basis(x: &AlgebraElement) -> AlgebraElement {
    assert_eq!(x.basis(), Basis::Dhl);
    let mut out = AlgebraElement::zero(Basis::Vmon);
    for (b, c) in x.terms() {
        out = out.add(&double_hl_bipartition(b).scale_ratfun(c));
    }
    out
}

/// The two mirror identities relating shifted-argument sums of `V` to
/// strip-coefficient sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MirrorIdentity {
    I,
    II,
}

/// Checks a mirror identity (both of its dual placements) by expanding each
/// side in monomials.
///
/// Identity I, for partitions `rho, mu` and `b = bound`:
/// `sum_{gamma in N^{l+1}, |gamma| = b} (1-t)^{l(gamma_head)} V_{rho+gamma, mu}
///  = sum_{rho ->b lambda} psi_{lambda/rho} V_{lambda, mu}`
/// (`gamma_head` drops the last entry), plus the same with the arguments in
/// the minus slot.
///
/// Identity II, for partitions `nu, rho~` and `a = bound`:
/// `sum_{beta in N^l, |beta| = a} (1-t)^{l(beta)} V_{nu-beta, rho~}
///  = sum_{mu ->a nu} phi_{nu/mu} V_{mu, rho~}`, plus the dual placement.
pub fn mirror_check(
    identity: MirrorIdentity,
    first: &Partition,
    second: &Partition,
    bound: u32,
) -> bool {
    let one_minus_t = LaurentPoly::one_minus_power(Variable::T, 1);
    let pow = |k: usize| {
        let mut p = LaurentPoly::one(Variable::T);
        for _ in 0..k {
            p = p.mul(&one_minus_t);
        }
        p
    };
    let b = bound as i64;
    match identity {
        MirrorIdentity::I => {
            let rho = first;
            let mu = second;
            let ell = rho.len();
            let rho_vec: Vec<i64> = rho.parts().iter().map(|&x| x as i64).collect();
            let mu_vec = IntVector::from(mu);
            let mut lhs1 = AlgebraElement::zero(Basis::Vmon);
            let mut lhs2 = AlgebraElement::zero(Basis::Vmon);
            for gamma in compositions_up_to(ell + 1, b) {
                if gamma.iter().sum::<i64>() != b {
                    continue;
                }
                let head_nonzeros = gamma[..ell].iter().filter(|&&x| x > 0).count();
                let coeff = pow(head_nonzeros);
                let mut arg = rho_vec.clone();
                arg.push(0);
                for (a, g) in arg.iter_mut().zip(&gamma) {
                    *a += g;
                }
                let shifted = IntVector::new(arg);
                lhs1 = lhs1.add(&double_hl(&shifted, &mu_vec).scale_laurent(&coeff));
                lhs2 = lhs2.add(&double_hl(&mu_vec, &shifted).scale_laurent(&coeff));
            }
            let mut rhs1 = AlgebraElement::zero(Basis::Vmon);
            let mut rhs2 = AlgebraElement::zero(Basis::Vmon);
            for la in crate::combinat::add_horizontal_strips(rho, bound) {
                let psi = pieri::psi_skew(&la, rho);
                let lav = IntVector::from(&la);
                rhs1 = rhs1.add(&double_hl(&lav, &mu_vec).scale_laurent(&psi));
                rhs2 = rhs2.add(&double_hl(&mu_vec, &lav).scale_laurent(&psi));
            }
            lhs1 == rhs1 && lhs2 == rhs2
        }
        MirrorIdentity::II => {
            let nu = first;
            let rho_tilde = second;
            let ell = nu.len();
            let nu_vec: Vec<i64> = nu.parts().iter().map(|&x| x as i64).collect();
            let rt_vec = IntVector::from(rho_tilde);
            let mut lhs1 = AlgebraElement::zero(Basis::Vmon);
            let mut lhs2 = AlgebraElement::zero(Basis::Vmon);
            for beta in compositions_up_to(ell, b) {
                if beta.iter().sum::<i64>() != b {
                    continue;
                }
                let nonzeros = beta.iter().filter(|&&x| x > 0).count();
                let coeff = pow(nonzeros);
                let arg: Vec<i64> = nu_vec.iter().zip(&beta).map(|(a, g)| a - g).collect();
                let shifted = IntVector::new(arg);
                lhs1 = lhs1.add(&double_hl(&shifted, &rt_vec).scale_laurent(&coeff));
                lhs2 = lhs2.add(&double_hl(&rt_vec, &shifted).scale_laurent(&coeff));
            }
            let mut rhs1 = AlgebraElement::zero(Basis::Vmon);
            let mut rhs2 = AlgebraElement::zero(Basis::Vmon);
            for mu in crate::combinat::remove_horizontal_strips(nu, bound) {
                let phi = pieri::phi_skew(nu, &mu);
                let muv = IntVector::from(&mu);
                rhs1 = rhs1.add(&double_hl(&muv, &rt_vec).scale_laurent(&phi));
                rhs2 = rhs2.add(&double_hl(&rt_vec, &muv).scale_laurent(&phi));
            }
            lhs1 == rhs1 && lhs2 == rhs2
        }
    }
}
