//! Partitions, bipartitions, strips, multiplicities and the extended
//! dominance order: the indexing layer for every algebra in this crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error(
        "invalid partition part `{0}` (parts are positive integers, `-` is the empty partition)"
    )]
    BadPart(String),
    #[error("bipartition must have the form `plus|minus`, got `{0}`")]
    BadBipartition(String),
}

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// stripped. `Partition::new` sorts, so it accepts parts in any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The row partition `(r)`, or empty for `r = 0`.
    pub fn row(r: u32) -> Self {
        Self::new(vec![r])
    }

    /// The column partition `(1^m)`.
    pub fn column(m: u32) -> Self {
        Partition {
            parts: vec![1; m as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ell(lambda)`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based part access, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= c).count() as u32);
        }
        Partition { parts }
    }

    /// `n(lambda) = sum_i (i-1) lambda_i` with 1-based `i`.
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// `m_i(lambda)`, the number of times `i` occurs as a part.
    pub fn multiplicity(&self, i: u32) -> usize {
        assert!(i >= 1);
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Componentwise containment `self <= other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i + 1))
    }

    /// Append a row and resort.
    pub fn with_row(&self, r: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(r);
        Partition::new(parts)
    }

    /// Merge with another partition (multiset union of parts).
    pub fn merged(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| ParseError::BadPart(tok.to_string()))?;
            if p == 0 {
                return Err(ParseError::BadPart(tok.to_string()));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// An ordered pair of partitions, indexing objects of the form
/// `S^(lambda) + S^(mu)[1]` and the double symmetric-function bases.
///
/// The derived `Ord` is NOT used; `Ord` is the canonical total order
/// `(|plus| + |minus|, plus lexicographic, minus lexicographic)` used for
/// deterministic serialization of term maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl Bipartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Bipartition { plus, minus }
    }

    pub fn empty() -> Self {
        Bipartition::new(Partition::empty(), Partition::empty())
    }

    pub fn total_size(&self) -> u32 {
        self.plus.size() + self.minus.size()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.minus.clone(), self.plus.clone())
    }
}

impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_size()
            .cmp(&other.total_size())
            .then_with(|| self.plus.parts.cmp(&other.plus.parts))
            .then_with(|| self.minus.parts.cmp(&other.minus.parts))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.plus, self.minus)
    }
}

impl FromStr for Bipartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, m) = s
            .split_once('|')
            .ok_or_else(|| ParseError::BadBipartition(s.to_string()))?;
        Ok(Bipartition::new(p.parse()?, m.parse()?))
    }
}

/// A finite integer vector, possibly with negative entries. These occur
/// transiently in the operator recursions, where entries below zero
/// annihilate through `v_a = 0` for `a < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector {
    entries: Vec<i64>,
}

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        IntVector::new(p.parts().iter().map(|&x| x as i64).collect())
    }
}

/// Returns the strip size `|outer| - |inner|` when `outer - inner` is a
/// horizontal strip (at most one box per column), `None` otherwise.
pub fn horizontal_strip(inner: &Partition, outer: &Partition) -> Option<u32> {
    if !inner.contained_in(outer) {
        return None;
    }
    let oc = outer.conjugate();
    let ic = inner.conjugate();
    for i in 1..=oc.len() {
        if oc.part(i) - ic.part(i) > 1 {
            return None;
        }
    }
    Some(outer.size() - inner.size())
}

/// Returns the strip size when `outer - inner` is a vertical strip (at most
/// one box per row), `None` otherwise.
pub fn vertical_strip(inner: &Partition, outer: &Partition) -> Option<u32> {
    if !inner.contained_in(outer) {
        return None;
    }
    for i in 1..=outer.len() {
        if outer.part(i) - inner.part(i) > 1 {
            return None;
        }
    }
    Some(outer.size() - inner.size())
}

/// The outcome of comparing two elements in the extended dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Dominates,
    Dominated,
    Equal,
    Incomparable,
}

impl Dominance {
    /// The comparison seen from the other side.
    pub fn flip(self) -> Self {
        match self {
            Dominance::Dominates => Dominance::Dominated,
            Dominance::Dominated => Dominance::Dominates,
            other => other,
        }
    }
}

/// Extended dominance on partitions: classical dominance at equal size,
/// and `a` dominates `b` whenever `|a| < |b|`.
pub fn partition_dominance(a: &Partition, b: &Partition) -> Dominance {
    match a.size().cmp(&b.size()) {
        Ordering::Less => return Dominance::Dominates,
        Ordering::Greater => return Dominance::Dominated,
        Ordering::Equal => {}
    }
    let mut ge = true;
    let mut le = true;
    let mut sa: u64 = 0;
    let mut sb: u64 = 0;
    for i in 1..=a.len().max(b.len()) {
        sa += a.part(i) as u64;
        sb += b.part(i) as u64;
        if sa < sb {
            ge = false;
        }
        if sa > sb {
            le = false;
        }
    }
    match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::Dominated,
        (false, false) => Dominance::Incomparable,
    }
}

/// Componentwise extension of the dominance order to bipartitions.
pub fn dominance_compare(a: &Bipartition, b: &Bipartition) -> Dominance {
    let p = partition_dominance(&a.plus, &b.plus);
    let m = partition_dominance(&a.minus, &b.minus);
    match (p, m) {
        (Dominance::Equal, x) => x,
        (x, Dominance::Equal) => x,
        (x, y) if x == y => x,
        _ => Dominance::Incomparable,
    }
}

/// `a` strictly dominates `b`.
pub fn strictly_dominates(a: &Bipartition, b: &Bipartition) -> bool {
    dominance_compare(a, b) == Dominance::Dominates
}

/// All partitions of `n`, in a deterministic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut p = remaining.min(max);
        while p >= 1 {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All bipartitions of total size exactly `n`.
pub fn bipartitions_of_total(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in 0..=n {
        for plus in partitions_of(a) {
            for minus in partitions_of(n - a) {
                out.push(Bipartition::new(plus.clone(), minus));
            }
        }
    }
    out
}

/// All bipartitions of total size at most `n`.
pub fn bipartitions_up_to(n: u32) -> Vec<Bipartition> {
    (0..=n).flat_map(bipartitions_of_total).collect()
}

/// All `lambda >= rho` with `lambda - rho` a horizontal `b`-strip.
pub fn add_horizontal_strips(rho: &Partition, b: u32) -> Vec<Partition> {
    candidates_above(rho, b)
        .into_iter()
        .filter(|la| horizontal_strip(rho, la) == Some(b))
        .collect()
}

/// All `mu <= nu` with `nu - mu` a horizontal `a`-strip.
pub fn remove_horizontal_strips(nu: &Partition, a: u32) -> Vec<Partition> {
    candidates_below(nu, a)
        .into_iter()
        .filter(|mu| horizontal_strip(mu, nu) == Some(a))
        .collect()
}

/// All `lambda >= rho` with `lambda - rho` a vertical `a`-strip.
pub fn add_vertical_strips(rho: &Partition, a: u32) -> Vec<Partition> {
    candidates_above(rho, a)
        .into_iter()
        .filter(|la| vertical_strip(rho, la) == Some(a))
        .collect()
}

/// All `mu <= nu` with `nu - mu` a vertical `b`-strip.
pub fn remove_vertical_strips(nu: &Partition, b: u32) -> Vec<Partition> {
    candidates_below(nu, b)
        .into_iter()
        .filter(|mu| vertical_strip(mu, nu) == Some(b))
        .collect()
}

/// All partitions containing `rho` with `|lambda| = |rho| + b`, generated
/// row by row (`lambda_1 <= rho_1 + b` holds automatically).
fn candidates_above(rho: &Partition, b: u32) -> Vec<Partition> {
    let max_rows = rho.len() + b as usize;
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        rho: &Partition,
        row: usize,
        max_rows: usize,
        remaining: u32,
        prev: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let lo = rho.part(row);
        if lo == 0 && remaining == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        if row > max_rows {
            return;
        }
        let hi = prev.min(lo + remaining);
        for p in lo.max(1)..=hi {
            current.push(p);
            rec(
                rho,
                row + 1,
                max_rows,
                remaining - (p - lo),
                p,
                current,
                out,
            );
            current.pop();
        }
    }
    rec(rho, 1, max_rows, b, rho.part(1) + b, &mut current, &mut out);
    out
}

/// All partitions contained in `nu` with `|mu| = |nu| - a`.
fn candidates_below(nu: &Partition, a: u32) -> Vec<Partition> {
    if a > nu.size() {
        return Vec::new();
    }
    let target = nu.size() - a;
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        nu: &Partition,
        row: usize,
        remaining: u32,
        prev: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row > nu.len() {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let hi = nu.part(row).min(prev).min(remaining);
        for p in (0..=hi).rev() {
            if p > 0 {
                current.push(p);
            }
            rec(nu, row + 1, remaining - p, p, current, out);
            if p > 0 {
                current.pop();
            } else {
                break;
            }
        }
    }
    rec(nu, 1, target, u32::MAX, &mut current, &mut out);
    out
}
