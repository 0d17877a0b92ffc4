//! Sparse integer linear combinations over an ordered basis.
//!
//! Every algebra operation in the crate produces a [`LinComb`]. Terms are
//! kept in a `BTreeMap`, so iteration order follows the key order and no
//! stored coefficient is ever zero.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt::{self, Debug};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact coefficient type.
pub type Scalar = BigInt;

/// Anything that can index a basis element.
pub trait BasisKey: Clone + Ord + Hash + Debug + Send + Sync {}

impl<T: Clone + Ord + Hash + Debug + Send + Sync> BasisKey for T {}

/// Tensor-power basis key: one basis key per tensor factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorKey<K>(pub Vec<K>);

impl<K> TensorKey<K> {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[K] {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Debug> Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

impl<K: Ord> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: impl Into<Scalar>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff.into());
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, 1)
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

    /// Adds `coeff` to the coefficient of `key`, dropping the term if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn first_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }

    /// Sum of the absolute values of all coefficients.
    pub fn abs_weight(&self) -> Scalar {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn scale(&self, c: &Scalar) -> Self
    where
        K: Clone,
    {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar)
    where
        K: Clone,
    {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Extends a basis map linearly: `sum_k self[k] * f(k)`.
    pub fn linear_extend<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels keys through `f`, merging collisions.
    pub fn map_keys<L: Ord>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

/// Coefficient-wise sum.
pub fn add<K: Ord + Clone>(a: &LinComb<K>, b: &LinComb<K>) -> LinComb<K> {
    let mut out = a.clone();
    out.add_scaled(b, &Scalar::one());
    out
}

/// Multiplies every coefficient by `c`.
pub fn scale<K: Ord + Clone>(c: &Scalar, a: &LinComb<K>) -> LinComb<K> {
    a.scale(c)
}

pub fn linear_extend<K: Ord, L: Ord + Clone>(
    f: impl FnMut(&K) -> LinComb<L>,
    a: &LinComb<K>,
) -> LinComb<L> {
    a.linear_extend(f)
}

pub fn coefficient<K: Ord>(a: &LinComb<K>, key: &K) -> Scalar {
    a.coefficient(key)
}

impl<K: Ord> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> Extend<(K, Scalar)> for LinComb<K> {
    fn extend<I: IntoIterator<Item = (K, Scalar)>>(&mut self, iter: I) {
        for (k, c) in iter {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;

    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;

    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord> Neg for LinComb<K> {
    type Output = LinComb<K>;

    fn neg(mut self) -> LinComb<K> {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

/// `(-1)^k` as a scalar.
pub fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}
