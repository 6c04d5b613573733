use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::word::{Letter, Word};

/// Finite formal sum of free-group words with rational coefficients.
///
/// Fox derivatives of words have integer coefficients, so the prime field is
/// enough here; evaluation under a representation embeds them in the number
/// field of the representation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigRational>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_term(w, BigRational::one())
    }

    pub fn from_term(w: Word, c: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GroupRingElement { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.multiply(v), a * b);
            }
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        GroupRingElement { terms: self.terms.iter().map(|(u, c)| (w.multiply(u), c.clone())).collect() }
    }

    /// Linear extension of `g ↦ g^{-1}`.
    pub fn sigma(&self) -> Self {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.inverse(), c.clone())).collect() }
    }

    /// Sum of all coefficients (the augmentation `Z[F] → Q`).
    pub fn augmentation(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
            let neg = c < &BigRational::zero();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            let word = w.display_with(names);
            if abs.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{}*{}", super::ring::format_rational(&abs), word));
            }
        }
        out
    }
}

pub fn word_multiply(u: &Word, v: &Word) -> Word {
    u.multiply(v)
}

/// Fox derivative `∂w/∂g` in the integral group ring of the free group.
///
/// Walks the word once, accumulating the prefix: a letter `g` contributes
/// `+prefix`, a letter `g^{-1}` contributes `-prefix·g^{-1}`.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.generator == g {
            if l.exponent > 0 {
                out.add_term(prefix.clone(), BigRational::one());
            } else {
                out.add_term(prefix.multiply(&Word::letter(l)), -BigRational::one());
            }
        }
        prefix = prefix.multiply(&Word::letter(l));
    }
    out
}

/// `σ`, the involution `g ↦ g^{-1}` extended linearly.
pub fn sigma(e: &GroupRingElement) -> GroupRingElement {
    e.sigma()
}

/// Element `g - 1` of the group ring.
pub fn generator_minus_one(g: usize) -> GroupRingElement {
    GroupRingElement::from_word(Word::letter(Letter::new(g, 1))).sub(&GroupRingElement::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn fox_base_cases() {
        let g = Word::generator(0);
        assert_eq!(fox_derivative(&g, 0), GroupRingElement::one());
        assert!(fox_derivative(&g, 1).is_zero());
        let ginv = g.inverse();
        assert_eq!(fox_derivative(&ginv, 0), GroupRingElement::from_term(ginv.clone(), q(-1)));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(GroupRingElement::one().sigma(), GroupRingElement::one());
        let g = Word::generator(0);
        let h = Word::generator(1);
        let e = GroupRingElement::from_term(g.clone(), q(2)).sub(&GroupRingElement::from_word(h.clone()));
        let expected = GroupRingElement::from_term(g.inverse(), q(2)).sub(&GroupRingElement::from_word(h.inverse()));
        assert_eq!(e.sigma(), expected);
    }

    #[test]
    fn cancellation_removes_terms() {
        let g = GroupRingElement::from_word(Word::generator(0));
        assert!(g.sub(&g).is_zero());
        assert!(g.sub(&g).terms().is_empty());
    }

    #[test]
    fn trefoil_relator_fox_derivative() {
        // alpha = 0, a = 1; relator a alpha a^-1 alpha^-1 a^-1 alpha
        let r = Word::from_pairs(&[(1, 1), (0, 1), (1, -1), (0, -1), (1, -1), (0, 1)]);
        let d = fox_derivative(&r, 0);
        let x1 = Word::from_pairs(&[(1, 1)]);
        let x2 = Word::from_pairs(&[(1, 1), (0, 1), (1, -1), (0, -1)]);
        let x3 = Word::from_pairs(&[(1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        let expected =
            GroupRingElement::from_word(x1).sub(&GroupRingElement::from_word(x2)).add(&GroupRingElement::from_word(x3));
        assert_eq!(d, expected);
    }
}
