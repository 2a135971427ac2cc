//! Exact univariate arithmetic in `t`: Laurent polynomials over the integers
//! ([`IntPoly`]) and the field of rational functions `Q(t)` ([`RatFn`]).
//!
//! Coefficients are `i128`; every operation on them is checked so an overflow
//! aborts loudly instead of producing a wrong table entry.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = Ratio<i128>;

#[inline]
fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer coefficient overflow")
}

#[inline]
fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer coefficient overflow")
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// A Laurent polynomial `sum c_k t^k` with integer coefficients.
///
/// Stored densely from the lowest occurring exponent; no leading or trailing
/// zero coefficients are ever kept, so structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    low: i32,
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: i128, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            IntPoly { low: e, coeffs: vec![c] }
        }
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `sum coeffs[k] t^(low + k)`.
    pub fn from_coeffs(low: i32, coeffs: Vec<i128>) -> Self {
        let mut p = IntPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i128)>>(terms: I) -> Self {
        let terms: Vec<(i32, i128)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = cadd(*slot, c);
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i32 - 1)
        }
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.low)
        }
    }

    pub fn leading_coeff(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, e: i32) -> i128 {
        let k = e - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i128)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(k, &c)| (self.low + k as i32, c))
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// True when every occurring exponent `e` satisfies `e ≡ residue (mod modulus)`.
    pub fn exponents_congruent(&self, residue: i32, modulus: i32) -> bool {
        self.terms().all(|(e, _)| (e - residue).rem_euclid(modulus) == 0)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        IntPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// The substitution `t -> t^k` for a nonzero integer `k`.
    pub fn subs_power(&self, k: i32) -> Self {
        assert!(k != 0, "substitution t -> t^0 is not invertible");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// The substitution `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        self.subs_power(-1)
    }

    /// Inverse of `t -> t^k`: returns `f` with `f(t^k) = self`, if every
    /// exponent is divisible by `k`.
    pub fn root_substitution(&self, k: i32) -> Option<Self> {
        if self.terms().any(|(e, _)| e.rem_euclid(k) != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / k, c))))
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        IntPoly { low: self.low, coeffs: self.coeffs.iter().map(|&x| cmul(x, c)).collect() }
    }

    /// Value at an integer point. Panics on a negative exponent unless `q = ±1`.
    pub fn eval(&self, q: i128) -> i128 {
        if !self.is_polynomial() {
            assert!(q == 1 || q == -1, "Laurent polynomial evaluated at {q}");
            return self.terms().map(|(e, c)| if e.rem_euclid(2) == 1 && q == -1 { -c } else { c }).sum();
        }
        let mut acc = 0i128;
        for &c in self.coeffs.iter().rev() {
            acc = cadd(cmul(acc, q), c);
        }
        for _ in 0..self.low {
            acc = cmul(acc, q);
        }
        acc
    }

    /// Value at a rational point; `None` on a pole (negative exponent at zero).
    pub fn eval_rational(&self, q: Rational) -> Option<Rational> {
        if q.is_zero() && !self.is_polynomial() {
            return None;
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            acc += Rational::from(c) * pow_rational(q, e);
        }
        Some(acc)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn at_one(&self) -> i128 {
        self.coeffs.iter().fold(0, |a, &c| cadd(a, c))
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> i128 {
        self.coeffs.iter().fold(0, |g, &c| gcd_i128(g, c))
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: i128) -> Option<Self> {
        if c == 0 {
            return None;
        }
        if self.coeffs.iter().any(|x| x % c != 0) {
            return None;
        }
        Some(IntPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x / c).collect() })
    }

    /// Exact quotient `self / d` in `Z[t, 1/t]`, or `None` if `d` does not
    /// divide `self` there.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            return self.div_scalar_exact(d.coeffs[0]).map(|p| p.shift(-d.low));
        }
        // Long division on the exponent-shifted coefficient vectors.
        let mut rem = self.coeffs.clone();
        let dc = &d.coeffs;
        let dl = dc.len();
        if rem.len() < dl {
            return None;
        }
        let lc = *dc.last().unwrap();
        let qlen = rem.len() - dl + 1;
        let mut quot = vec![0i128; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dl - 1];
            if top == 0 {
                continue;
            }
            if top % lc != 0 {
                return None;
            }
            let f = top / lc;
            quot[k] = f;
            for (j, &c) in dc.iter().enumerate() {
                rem[k + j] = rem[k + j].checked_sub(cmul(f, c)).expect("integer coefficient overflow");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_coeffs(self.low - d.low, quot))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients as a dense vector from `t^0`, for a genuine polynomial.
    fn dense(&self) -> Vec<i128> {
        debug_assert!(self.is_polynomial());
        let mut v = vec![0i128; self.low.max(0) as usize];
        v.extend_from_slice(&self.coeffs);
        v
    }
}

fn pow_rational(q: Rational, e: i32) -> Rational {
    let base = if e < 0 { q.recip() } else { q };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    acc
}

impl From<i128> for IntPoly {
    fn from(c: i128) -> Self {
        IntPoly::constant(c)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in self.terms().chain(rhs.terms()) {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = cadd(*slot, c);
        }
        IntPoly::from_coeffs(lo, coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b));
            }
        }
        IntPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers, `t^k` syntax, `+`/`-` separated, constants bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{}", fmt_exp(e))?,
                (e, m) => write!(f, "{m}t^{}", fmt_exp(e))?,
            }
        }
        Ok(())
    }
}

fn fmt_exp(e: i32) -> String {
    if (0..10).contains(&e) {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`; also accepts `t^12` without
    /// braces, `*` between coefficient and `t`, and an empty string as zero.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '$').collect();
        if compact.is_empty() || compact == "0" {
            return Ok(IntPoly::zero());
        }
        let bad = || Error::Parse(format!("invalid polynomial `{s}`"));
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut sign = 1i128;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest
                .char_indices()
                .find(|&(i, c)| (c == '+' || c == '-') && i > 0 && !matches!(rest.as_bytes()[i - 1], b'^' | b'{'))
                .map_or(rest.len(), |(i, _)| i);
            let term = &rest[..end];
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = match term.find('t') {
                None => (term.parse::<i128>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { term[..pos].parse::<i128>().map_err(|_| bad())? };
                    let tail = &term[pos + 1..];
                    let e = if tail.is_empty() {
                        1
                    } else {
                        let ex = tail.strip_prefix('^').ok_or_else(bad)?;
                        let ex = ex.trim_start_matches('{').trim_end_matches('}');
                        ex.parse::<i32>().map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            terms.push((exp, sign * coef));
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        Ok(IntPoly::from_terms(terms))
    }
}

// ---------------------------------------------------------------------------
// Polynomial gcd over Z.

fn to_big(p: &[i128]) -> Vec<BigInt> {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

fn big_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn big_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Pseudo-remainder of `a` by `b` (both dense, ascending).
fn big_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    let db = b.len() - 1;
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lr * c;
        }
        big_trim(&mut r);
    }
    r
}

/// Primitive gcd of two primitive polynomials with nonzero constant term,
/// normalized to a positive leading coefficient.
fn primitive_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if da == 0 || db == 0 {
        return IntPoly::one();
    }
    let (big, small) = if da >= db { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return positive_lead(small.clone());
    }
    let mut x = to_big(&big.dense());
    let mut y = to_big(&small.dense());
    while !y.is_empty() {
        let mut r = big_prem(&x, &y);
        big_primitive(&mut r);
        x = y;
        y = r;
    }
    big_primitive(&mut x);
    let coeffs: Vec<i128> = x.iter().map(|c| c.to_i128().expect("gcd coefficient overflow")).collect();
    positive_lead(IntPoly::from_coeffs(0, coeffs))
}

fn positive_lead(p: IntPoly) -> IntPoly {
    if p.leading_coeff() < 0 {
        -p
    } else {
        p
    }
}

/// Gcd in `Z[t]` of two polynomials (content included, positive leading
/// coefficient). The gcd of zero and `p` is `p` up to sign.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return positive_lead(b.clone());
    }
    if b.is_zero() {
        return positive_lead(a.clone());
    }
    let tpow = a.low.min(b.low);
    let a0 = a.shift(-a.low);
    let b0 = b.shift(-b.low);
    let (ca, cb) = (a0.content(), b0.content());
    let c = gcd_i128(ca, cb);
    let pa = a0.div_scalar_exact(ca).unwrap();
    let pb = b0.div_scalar_exact(cb).unwrap();
    primitive_gcd(&pa, &pb).scale(c).shift(tpow)
}

// ---------------------------------------------------------------------------
// Cyclotomic bookkeeping, used to build exact common denominators.

/// The cyclotomic polynomial `Φ_d(t)`.
pub fn cyclotomic(d: u32) -> IntPoly {
    assert!(d >= 1);
    let mut p = IntPoly::from_terms([(d as i32, 1), (0, -1)]);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.div_exact(&cyclotomic(e)).expect("cyclotomic division");
        }
    }
    p
}

/// A product `sign * Π Φ_d^{e_d}` kept in factored form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloProduct {
    pub sign: i128,
    pub exps: std::collections::BTreeMap<u32, u32>,
}

impl CycloProduct {
    pub fn one() -> Self {
        CycloProduct { sign: 1, exps: Default::default() }
    }

    /// `t^a - 1`.
    pub fn t_pow_minus_one(a: u32) -> Self {
        let mut p = Self::one();
        for d in 1..=a {
            if a.is_multiple_of(d) {
                *p.exps.entry(d).or_insert(0) += 1;
            }
        }
        p
    }

    /// `1 - t^a`.
    pub fn one_minus_t_pow(a: u32) -> Self {
        let mut p = Self::t_pow_minus_one(a);
        p.sign = -1;
        p
    }

    /// `t^b + 1`.
    pub fn t_pow_plus_one(b: u32) -> Self {
        let mut p = Self::one();
        for d in 1..=2 * b {
            if (2 * b).is_multiple_of(d) && !b.is_multiple_of(d) {
                *p.exps.entry(d).or_insert(0) += 1;
            }
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.sign *= o.sign;
        for (&d, &e) in &o.exps {
            *r.exps.entry(d).or_insert(0) += e;
        }
        r
    }

    /// Least common multiple (sign +1).
    pub fn lcm(&self, o: &Self) -> Self {
        let mut r = CycloProduct { sign: 1, exps: self.exps.clone() };
        for (&d, &e) in &o.exps {
            let slot = r.exps.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        r
    }

    /// `self / o`, assuming `o` divides `self` factorwise.
    pub fn div(&self, o: &Self) -> Self {
        let mut r = CycloProduct { sign: self.sign * o.sign, exps: self.exps.clone() };
        for (&d, &e) in &o.exps {
            let slot = r.exps.get_mut(&d).expect("cyclotomic factor missing");
            assert!(*slot >= e, "cyclotomic factor missing");
            *slot -= e;
        }
        r.exps.retain(|_, e| *e > 0);
        r
    }

    pub fn to_poly(&self) -> IntPoly {
        let mut p = IntPoly::constant(self.sign);
        for (&d, &e) in &self.exps {
            let phi = cyclotomic(d);
            for _ in 0..e {
                p = &p * &phi;
            }
        }
        p
    }
}

// ---------------------------------------------------------------------------

/// An element of `Q(t)` in canonical form.
///
/// Invariants: the denominator is nonzero with positive leading coefficient,
/// numerator and denominator are genuine polynomials with no common factor in
/// `Z[t]` (content included), and zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: IntPoly,
    den: IntPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFn { num: IntPoly::one(), den: IntPoly::one() }
    }

    /// `num / den` normalized. Panics on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        // Move all powers of t to one side, then cancel.
        let k = num.low - den.low;
        let mut n = num.shift(-num.low);
        let mut d = den.shift(-den.low);
        if k > 0 {
            n = n.shift(k);
        } else {
            d = d.shift(-k);
        }
        let g = poly_gcd(&n, &d);
        let mut n = n.div_exact(&g).expect("gcd divides numerator");
        let mut d = d.div_exact(&g).expect("gcd divides denominator");
        if d.leading_coeff() < 0 {
            n = -n;
            d = -d;
        }
        Ok(RatFn { num: n, den: d })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::new(p, IntPoly::one())
    }

    pub fn from_int(c: i128) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(IntPoly::constant(*r.numer()), IntPoly::constant(*r.denom()))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        let inv = o.inv().ok_or_else(|| Error::Arithmetic("division by zero in Q(t)".into()))?;
        Ok(self * &inv)
    }

    /// `Some(p)` when this fraction is a Laurent polynomial with integer
    /// coefficients.
    pub fn to_laurent(&self) -> Option<IntPoly> {
        if !self.den.is_monomial() {
            return None;
        }
        self.num.div_exact(&self.den)
    }

    /// `Some(p)` when this fraction lies in `Z[t]`.
    pub fn to_poly(&self) -> Option<IntPoly> {
        self.to_laurent().filter(IntPoly::is_polynomial)
    }

    pub fn scale_rational(&self, r: Rational) -> Self {
        self * &Self::from_rational(r)
    }

    /// The substitution `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        Self::new(self.num.invert_variable(), self.den.invert_variable())
    }

    /// The substitution `t -> t^k`, `k != 0`.
    pub fn subs_power(&self, k: i32) -> Self {
        Self::new(self.num.subs_power(k), self.den.subs_power(k))
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval_rational(&self, q: Rational) -> Option<Rational> {
        let d = self.den.eval_rational(q)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(q)? / d)
    }
}

impl From<IntPoly> for RatFn {
    fn from(p: IntPoly) -> Self {
        RatFn::from_poly(p)
    }
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        RatFn::new(num, &(&g * &b1) * &d1)
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl AddAssign<&RatFn> for RatFn {
    fn add_assign(&mut self, rhs: &RatFn) {
        *self = &*self + rhs;
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl SubAssign<&RatFn> for RatFn {
    fn sub_assign(&mut self, rhs: &RatFn) {
        *self = &*self - rhs;
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        // Cross-cancel first to keep the products small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFn::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPoly {
    /// An arbitrary but fixed total order, for use as map keys.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}

/// Rational-coefficient accumulator for `Σ r_i t^{e_i}`, converted into a
/// [`RatFn`] with one normalization at the end.
#[derive(Clone, Debug, Default)]
pub struct QPoly {
    terms: std::collections::BTreeMap<i32, Rational>,
}

impl QPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_scaled(&mut self, r: Rational, p: &IntPoly) {
        if r.is_zero() {
            return;
        }
        for (e, c) in p.terms() {
            let slot = self.terms.entry(e).or_insert_with(Rational::zero);
            *slot += r * Rational::from(c);
        }
    }

    /// Clears denominators: returns `(p, m)` with `self = p / m`, `m > 0`.
    pub fn clear_denominators(&self) -> (IntPoly, i128) {
        let m = self.terms.values().fold(1i128, |acc, r| acc.lcm(r.denom()));
        let p = IntPoly::from_terms(self.terms.iter().map(|(&e, r)| (e, (r * Rational::from(m)).to_integer())));
        (p, m)
    }
}
