//! Finite formal linear combinations over a ring.

use crate::int::Int;
use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeElement<K: Ord> {
    ring: Ring,
    terms: BTreeMap<K, Int>,
}

impl<K: Ord + Clone> FreeElement<K> {
    pub fn zero(ring: Ring) -> Self {
        FreeElement { ring, terms: BTreeMap::new() }
    }

    pub fn basis(ring: Ring, key: K) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(key, Int::ONE);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Int)>>(ring: Ring, terms: I) -> Self {
        let mut e = Self::zero(ring);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn add_term(&mut self, key: K, c: Int) {
        let c = self.ring.reduce(c);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = self.ring.add(v, &c);
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Int) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn coeff(&self, key: &K) -> Int {
        self.terms.get(key).cloned().unwrap_or(Int::ZERO)
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Int)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Int) -> Self {
        let mut e = Self::zero(self.ring);
        for (k, v) in &self.terms {
            e.add_term(k.clone(), v * c);
        }
        e
    }

    pub fn neg(&self) -> Self {
        self.scale(&Int::from(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        e.add_scaled(other, &Int::ONE);
        e
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut e = self.clone();
        e.add_scaled(other, &Int::from(-1));
        e
    }

    /// Same terms read in another ring (reducing coefficients).
    pub fn change_ring(&self, ring: Ring) -> Self {
        Self::from_terms(ring, self.terms.iter().map(|(k, v)| (k.clone(), v.clone())))
    }

    /// Applies a signed relabeling `k ↦ ±k'` (or drops the term) linearly.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> Option<(L, i64)>>(&self, mut f: F) -> FreeElement<L> {
        let mut e = FreeElement::zero(self.ring);
        for (k, v) in &self.terms {
            if let Some((l, s)) = f(k) {
                e.add_term(l, v * &Int::from(s));
            }
        }
        e
    }

    /// Extends a map on basis keys linearly.
    pub fn flat_map<L: Ord + Clone, F: FnMut(&K) -> FreeElement<L>>(&self, mut f: F) -> FreeElement<L> {
        let mut e = FreeElement::zero(self.ring);
        for (k, v) in &self.terms {
            e.add_scaled(&f(k), v);
        }
        e
    }

    pub fn into_terms(self) -> BTreeMap<K, Int> {
        self.terms
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for FreeElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            let v = self.ring.balanced(v);
            let neg = v.is_negative();
            let abs = if neg { -&v } else { v };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if abs != Int::ONE {
                write!(f, "{abs}·")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let r = Ring::PrimeField(3);
        let mut e = FreeElement::zero(r);
        e.add_term("a", Int::from(2));
        e.add_term("a", Int::from(1));
        assert!(e.is_zero());
        e.add_term("b", Int::from(3));
        assert!(e.is_zero());
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let e = FreeElement::from_terms(Ring::Integers, [("y", Int::from(-2)), ("x", Int::ONE)]);
        assert_eq!(e.to_string(), "x - 2·y");
    }
}
