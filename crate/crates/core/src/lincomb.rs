//! Finitely supported linear combinations over an ordered basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::poly::{IntPoly, RatFn, Rational};

/// Coefficient ring operations needed by [`LinComb`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `Σ c_k · k` with no zero coefficient stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: C) -> Self {
        let mut v = Self::new();
        v.add_term(k, c);
        v
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, C::one())
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                let s = slot.add(&c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn coeff(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, k: &K) -> Option<&C> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::new();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.mul(c));
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one());
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one().neg());
        out
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LinComb<K, D> {
        let mut out = LinComb::new();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), f(x));
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut v = Self::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Display, C: fmt::Display> fmt::Display for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})[{k}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<K: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
