//! Finite linear combinations keyed by basis labels.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Ring;

/// A finite map `key -> coefficient` with no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVector<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

impl<K: Ord + Clone, R: Ring> Default for SparseVector<K, R> {
    fn default() -> Self {
        SparseVector::zero()
    }
}

impl<K: Ord + Clone, R: Ring> SparseVector<K, R> {
    pub fn zero() -> Self {
        SparseVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: K) -> Self {
        SparseVector::term(k, R::one())
    }

    pub fn term(k: K, c: R) -> Self {
        let mut v = SparseVector::zero();
        v.add_term(k, c);
        v
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

    pub fn get(&self, k: &K) -> Option<&R> {
        self.terms.get(k)
    }

    pub fn coeff(&self, k: &K) -> R {
        self.terms.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                let sum = x.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *x = sum;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &R::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &R::one().neg());
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return SparseVector::zero();
        }
        SparseVector {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect(),
        }
    }

    /// Extends `f`, defined on basis labels, linearly.
    pub fn apply<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> SparseVector<K2, R>) -> SparseVector<K2, R> {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a coefficient map, dropping coefficients that become zero.
    pub fn map_coeffs<R2: Ring>(&self, mut f: impl FnMut(&R) -> R2) -> SparseVector<K, R2> {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<R2: Ring, E>(
        &self,
        mut f: impl FnMut(&R) -> Result<R2, E>,
    ) -> Result<SparseVector<K, R2>, E> {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone, R: Ring> FromIterator<(K, R)> for SparseVector<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut v = SparseVector::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Display, R: fmt::Display> fmt::Display for SparseVector<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{k}")?;
        }
        Ok(())
    }
}
