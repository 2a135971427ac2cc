//! Partitions, double partitions, dominance orders and the numeric statistics
//! attached to them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{check_size, Error, Result};
use crate::poly::{IntPoly, RatFn};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.get(0);
        Partition { parts: (0..first).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Multiplicities `m_i` as `(part, count)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
            .product()
    }

    /// Partwise sum after padding with zeros.
    pub fn add_partwise(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition { parts: (0..k).map(|i| self.get(i) + other.get(i)).collect() }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&other.parts);
        Self::from_unsorted(v)
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().enumerate().all(|(i, &p)| p <= self.parts[i])
    }

    /// Dominance `self ≤ other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_le(&Composition::from(self), &Composition::from(other))
    }

    /// Dotted notation without the side separator: `21^2`, `{10}1`,
    /// and the empty string for the empty partition.
    pub fn notation(&self) -> String {
        let mut s = String::new();
        for (p, m) in self.multiplicities() {
            if p < 10 {
                s.push_str(&p.to_string());
            } else {
                s.push_str(&format!("{{{p}}}"));
            }
            if m > 1 {
                if m < 10 {
                    s.push_str(&format!("^{m}"));
                } else {
                    s.push_str(&format!("^{{{m}}}"));
                }
            }
        }
        s
    }

    /// Inverse of [`Partition::notation`].
    pub fn parse_notation(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("invalid partition `{s}`: {why}"));
        let bytes = s.as_bytes();
        let mut parts = Vec::new();
        let mut i = 0;
        let read_num = |i: &mut usize| -> Result<usize> {
            if bytes.get(*i) == Some(&b'{') {
                let close = s[*i..].find('}').ok_or_else(|| bad("unclosed brace"))? + *i;
                let v = s[*i + 1..close].parse::<usize>().map_err(|_| bad("bad number"))?;
                *i = close + 1;
                Ok(v)
            } else {
                match bytes.get(*i) {
                    Some(c) if c.is_ascii_digit() => {
                        *i += 1;
                        Ok((c - b'0') as usize)
                    }
                    _ => Err(bad("expected digit")),
                }
            }
        };
        while i < bytes.len() {
            let p = read_num(&mut i)?;
            let mut m = 1;
            if bytes.get(i) == Some(&b'^') {
                i += 1;
                m = read_num(&mut i)?;
            }
            if p == 0 || m == 0 {
                return Err(bad("zero part"));
            }
            parts.extend(std::iter::repeat_n(p, m));
        }
        Partition::new(parts).map_err(|_| bad("parts not weakly decreasing"))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", self.notation())
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Partition::empty());
        }
        Partition::parse_notation(s)
    }
}

/// A finite sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts.clone())
    }
}

/// Dominance `a ≤ b`: every prefix sum of `a` is at most that of `b`.
pub fn dominance_le(a: &Composition, b: &Composition) -> Result<bool> {
    check_size(a.size(), b.size())?;
    let k = a.0.len().max(b.0.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..k {
        sa += a.0.get(i).copied().unwrap_or(0);
        sb += b.0.get(i).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An ordered pair `(λ'; λ'')` of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DoublePartition {
    pub first: Partition,
    pub second: Partition,
}

impl DoublePartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        DoublePartition { first, second }
    }

    /// Convenience constructor from raw part lists; panics on invalid input.
    pub fn from_parts(first: &[usize], second: &[usize]) -> Self {
        DoublePartition {
            first: Partition::new(first.to_vec()).expect("invalid first component"),
            second: Partition::new(second.to_vec()).expect("invalid second component"),
        }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `c(Λ) = (λ'_1, λ''_1, λ'_2, λ''_2, ...)` padded to a common length.
    pub fn c_composition(&self) -> Composition {
        let k = self.first.len().max(self.second.len());
        let mut v = Vec::with_capacity(2 * k);
        for i in 0..k {
            v.push(self.first.get(i));
            v.push(self.second.get(i));
        }
        Composition(v)
    }

    /// `n(λ') + n(λ'')`.
    pub fn n_stat(&self) -> usize {
        self.first.n_stat() + self.second.n_stat()
    }

    /// `a(Λ) = 2n(λ') + 2n(λ'') + |λ''|`.
    pub fn a_stat(&self) -> usize {
        2 * self.n_stat() + self.second.size()
    }

    /// The integer part `2^{k'+k''} z_{λ'} z_{λ''}` of `z_Λ(t)`.
    pub fn z_int(&self) -> u128 {
        (1u128 << (self.first.len() + self.second.len())) * self.first.z() * self.second.z()
    }

    /// The denominator `Π(1 - t^{λ'_j}) Π(1 + t^{λ''_j})` of `z_Λ(t)`.
    pub fn z_denominator(&self) -> IntPoly {
        let mut d = IntPoly::one();
        for &p in self.first.parts() {
            d = &d * &IntPoly::from_terms([(0, 1), (p as i32, -1)]);
        }
        for &p in self.second.parts() {
            d = &d * &IntPoly::from_terms([(0, 1), (p as i32, 1)]);
        }
        d
    }

    /// `z_Λ(t) = 2^{k'+k''} z_{λ'} z_{λ''} Π(1 - t^{λ'_j})^{-1} Π(1 + t^{λ''_j})^{-1}`.
    pub fn z_double(&self) -> RatFn {
        RatFn::new(IntPoly::constant(self.z_int() as i128), self.z_denominator())
    }

    /// Dotted notation `λ'.λ''`, e.g. `21^2.3^2`, `3.`, `.21`, `.`.
    pub fn notation(&self) -> String {
        format!("{}.{}", self.first.notation(), self.second.notation())
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

impl fmt::Debug for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?};{:?})", self.first, self.second)
    }
}

impl FromStr for DoublePartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let dot = s.find('.').ok_or_else(|| Error::Parse(format!("missing `.` in `{s}`")))?;
        if s[dot + 1..].contains('.') {
            return Err(Error::Parse(format!("more than one `.` in `{s}`")));
        }
        Ok(DoublePartition {
            first: Partition::parse_notation(&s[..dot])?,
            second: Partition::parse_notation(&s[dot + 1..])?,
        })
    }
}

/// Dominance on double partitions, `Λ ≤ Μ` iff `c(Λ) ≤ c(Μ)`.
pub fn double_dominance_le(a: &DoublePartition, b: &DoublePartition) -> Result<bool> {
    dominance_le(&a.c_composition(), &b.c_composition())
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All double partitions of `n`, grouped by `|λ'|` descending.
pub fn enumerate_double_partitions(n: usize) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in enumerate_partitions(k) {
            for b in enumerate_partitions(n - k) {
                out.push(DoublePartition::new(a.clone(), b));
            }
        }
    }
    out
}

/// Linear extensions of dominance used as "greatest first" total orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Among incomparable candidates take the smallest `|λ''|`, then the
    /// lexicographically largest `c(Λ)`.
    #[default]
    SecondSizeThenComposition,
    /// Among incomparable candidates take the lexicographically smallest
    /// `c(Λ)`. Used as an independent second linear extension.
    ReverseComposition,
}

fn tie_key_cmp(tb: TieBreak, x: &DoublePartition, y: &DoublePartition) -> Ordering {
    match tb {
        TieBreak::SecondSizeThenComposition => {
            x.second.size().cmp(&y.second.size()).then_with(|| y.c_composition().cmp(&x.c_composition()))
        }
        TieBreak::ReverseComposition => x.c_composition().cmp(&y.c_composition()),
    }
}

/// A linear extension of double dominance, greatest element first.
///
/// Built greedily: at each step the candidates are the elements not strictly
/// dominated by any remaining element, and the tie-break picks one of them.
pub fn total_order_with(n: usize, tb: TieBreak) -> Vec<DoublePartition> {
    let mut rest = enumerate_double_partitions(n);
    let comps: BTreeMap<DoublePartition, Composition> = rest.iter().map(|d| (d.clone(), d.c_composition())).collect();
    let lt =
        |x: &DoublePartition, y: &DoublePartition| -> bool { x != y && dominance_le(&comps[x], &comps[y]).unwrap() };
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let best = rest
            .iter()
            .enumerate()
            .filter(|(_, x)| !rest.iter().any(|y| lt(x, y)))
            .min_by(|(_, x), (_, y)| tie_key_cmp(tb, x, y))
            .map(|(i, _)| i)
            .unwrap();
        out.push(rest.remove(best));
    }
    out
}

/// The default total order on double partitions of `n`.
pub fn total_order(n: usize) -> Vec<DoublePartition> {
    total_order_with(n, TieBreak::default())
}

/// A linear extension of dominance on partitions of `n`, greatest first.
/// Reverse lexicographic order refines dominance.
pub fn partition_order(n: usize) -> Vec<Partition> {
    enumerate_partitions(n)
}

/// All weak compositions of `n` with exactly `k` parts.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if k == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rem {
            cur.push(x);
            rec(rem - x, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Sub-multisets of a partition, returned as `(taken, left)` pairs.
pub fn sub_multisets(p: &Partition) -> Vec<(Partition, Partition)> {
    let mults = p.multiplicities();
    let mut out = vec![(Vec::new(), Vec::new())];
    for (part, m) in mults {
        let mut next = Vec::new();
        for (a, b) in &out {
            for k in 0..=m {
                let mut a2: Vec<usize> = a.clone();
                let mut b2: Vec<usize> = b.clone();
                a2.extend(std::iter::repeat_n(part, k));
                b2.extend(std::iter::repeat_n(part, m - k));
                next.push((a2, b2));
            }
        }
        out = next;
    }
    out.into_iter().map(|(a, b)| (Partition { parts: a }, Partition { parts: b })).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DoublePartition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        let c = |v: &[usize]| Composition(v.to_vec());
        assert!(dominance_le(&c(&[1, 1, 1]), &c(&[3])).unwrap());
        assert!(dominance_le(&c(&[3]), &c(&[3])).unwrap());
        assert!(!dominance_le(&c(&[2, 1]), &c(&[1, 2])).unwrap());
        assert!(dominance_le(&c(&[1, 2]), &c(&[2, 1])).unwrap());
        assert_eq!(dominance_le(&c(&[2]), &c(&[1])), Err(Error::SizeMismatch(2, 1)));
    }

    #[test]
    fn double_dominance_examples() {
        assert!(double_dominance_le(&dp(".1^2"), &dp("2.")).unwrap());
        assert!(!double_dominance_le(&dp(".2"), &dp("1^2.")).unwrap());
        assert!(!double_dominance_le(&dp("1^2."), &dp(".2")).unwrap());
        assert!(double_dominance_le(&dp("1.1"), &dp("1.1")).unwrap());
    }

    #[test]
    fn statistics() {
        assert_eq!(Partition::row(4).n_stat(), 0);
        assert_eq!(Partition::column(3).n_stat(), 3);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().n_stat(), 1);
        assert_eq!(dp(".1^2").a_stat(), 4);
        assert_eq!(dp("1.1").a_stat(), 1);
        assert_eq!(dp("3.").a_stat(), 0);
        assert_eq!(Partition::column(4).z(), 24);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().z(), 2);
        assert_eq!(Partition::row(3).z(), 3);
    }

    #[test]
    fn z_double_examples() {
        let one_minus_t: IntPoly = "-t + 1".parse().unwrap();
        let one_plus_t: IntPoly = "t + 1".parse().unwrap();
        assert_eq!(dp("1.").z_double(), RatFn::new(IntPoly::constant(2), one_minus_t.clone()));
        assert_eq!(dp(".1").z_double(), RatFn::new(IntPoly::constant(2), one_plus_t.clone()));
        assert_eq!(dp("1.1").z_double(), RatFn::new(IntPoly::constant(4), &one_minus_t * &one_plus_t));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_double_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
        assert_eq!(enumerate_double_partitions(0), vec![dp(".")]);
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn notation_round_trip() {
        let x = dp("21^2.3^2");
        assert_eq!(x.first.parts(), &[2, 1, 1]);
        assert_eq!(x.second.parts(), &[3, 3]);
        assert_eq!(x.to_string(), "21^2.3^2");
        assert_eq!(dp("3.").to_string(), "3.");
        assert_eq!(dp(".").size(), 0);
        let big = DoublePartition::from_parts(&[12, 1], &[1; 11]);
        assert_eq!(dp(&big.to_string()), big);
        assert!("21".parse::<DoublePartition>().is_err());
        assert!("12.".parse::<DoublePartition>().is_err());
        assert!("2.1.1".parse::<DoublePartition>().is_err());
        for n in 0..=8 {
            for d in enumerate_double_partitions(n) {
                assert_eq!(dp(&d.to_string()), d);
            }
        }
    }

    #[test]
    fn default_order_small_cases() {
        let names = |v: Vec<DoublePartition>| v.iter().map(|d| d.to_string()).collect::<Vec<_>>();
        assert_eq!(names(total_order(1)), ["1.", ".1"]);
        assert_eq!(names(total_order(2)), ["2.", "1.1", "1^2.", ".2", ".1^2"]);
        assert_eq!(names(total_order(3)), ["3.", "2.1", "21.", "1.2", "1^2.1", "1.1^2", "1^3.", ".3", ".21", ".1^3"]);
    }

    #[test]
    fn total_orders_are_linear_extensions() {
        for tb in [TieBreak::SecondSizeThenComposition, TieBreak::ReverseComposition] {
            for n in 0..=6 {
                let ord = total_order_with(n, tb);
                assert_eq!(ord.len(), enumerate_double_partitions(n).len());
                for i in 0..ord.len() {
                    for j in i + 1..ord.len() {
                        assert!(!double_dominance_le(&ord[i], &ord[j]).unwrap(), "{tb:?} {} before {}", ord[i], ord[j]);
                    }
                }
            }
        }
    }
}
