use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::grouprings::Ring;

/// Sparse linear combination of basis vectors; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<R: Ring> {
    terms: BTreeMap<usize, R>,
}

impl<R: Ring> Default for Element<R> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<R: Ring> Element<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize, one: &R) -> Self {
        Self::term(i, one.clone())
    }

    pub fn term(i: usize, c: R) -> Self {
        let mut e = Self::zero();
        e.add_term(i, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<usize, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> Option<&R> {
        self.terms.get(&i)
    }

    pub fn add_term(&mut self, i: usize, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(i) {
            Entry::Occupied(mut o) => {
                let v = o.get().add(&c);
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (i, v) in &self.terms {
            out.add_term(*i, v.mul(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(i, c)| (*i, c.neg())).collect() }
    }
}

/// Sparse element of a tensor power, keyed by the tuple of basis indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<R: Ring> {
    terms: BTreeMap<Vec<usize>, R>,
}

impl<R: Ring> Default for Tensor<R> {
    fn default() -> Self {
        Tensor { terms: BTreeMap::new() }
    }
}

impl<R: Ring> Tensor<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut o) => {
                let v = o.get().add(&c);
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }
}
