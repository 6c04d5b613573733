//! Multivariate Laurent polynomials over a number field, i.e. the group ring
//! `K[Z^b]` of a free abelian group.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::field::{FieldElem, NumberField};
use super::ring::{format_abs_rational, Ring};

/// Element of `Z^b`, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(rank: usize) -> Self {
        ExponentVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    fn dominates(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// Finitely supported map `Z^b → K` with no zero coefficients stored.
#[derive(Clone)]
pub struct LaurentPoly {
    field: Arc<NumberField>,
    rank: usize,
    terms: BTreeMap<ExponentVector, FieldElem>,
}

impl LaurentPoly {
    pub fn zero(field: &Arc<NumberField>, rank: usize) -> Self {
        LaurentPoly { field: field.clone(), rank, terms: BTreeMap::new() }
    }

    pub fn one(field: &Arc<NumberField>, rank: usize) -> Self {
        Self::monomial(field.one(), ExponentVector::zero(rank))
    }

    pub fn constant(c: FieldElem, rank: usize) -> Self {
        Self::monomial(c, ExponentVector::zero(rank))
    }

    pub fn monomial(c: FieldElem, e: ExponentVector) -> Self {
        let mut p = LaurentPoly { field: c.field().clone(), rank: e.rank(), terms: BTreeMap::new() };
        p.add_term(e, c);
        p
    }

    /// The variable `t_{i+1}`.
    pub fn variable(field: &Arc<NumberField>, rank: usize, i: usize) -> Self {
        let mut e = ExponentVector::zero(rank);
        e.0[i] = 1;
        Self::monomial(field.one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, FieldElem)>>(
        field: &Arc<NumberField>,
        rank: usize,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(field, rank);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Univariate convenience constructor: coefficient `c_k` at `t^{lo + k}`.
    pub fn from_int_coeffs(field: &Arc<NumberField>, lo: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            field,
            1,
            coeffs.iter().enumerate().map(|(k, &c)| (ExponentVector(vec![lo + k as i64]), field.from_int(c))),
        )
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, FieldElem> {
        &self.terms
    }

    pub fn coefficient(&self, e: &ExponentVector) -> FieldElem {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, e: ExponentVector, c: FieldElem) {
        debug_assert_eq!(e.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    /// Multiplies by the monomial `c·t^e`.
    pub fn mul_monomial(&self, c: &FieldElem, e: &ExponentVector) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        LaurentPoly {
            field: self.field.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.add(e), v.mul(c))).collect(),
        }
    }

    pub fn shift(&self, e: &ExponentVector) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.add(e), v.clone())).collect(),
        }
    }

    /// Sum of coefficients: the augmentation `K[Z^b] → K`.
    pub fn augmentation(&self) -> FieldElem {
        self.terms.values().fold(self.field.zero(), |acc, c| acc.add(c))
    }

    /// The single term, if this is a monomial `c·t^e`.
    pub fn as_monomial(&self) -> Option<(FieldElem, ExponentVector)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), e.clone()))
        } else {
            None
        }
    }

    /// Constant value, if the support is `{0}` or empty.
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Per-variable minimum exponent over the support (zero vector for 0).
    pub fn min_exponents(&self) -> ExponentVector {
        let mut mins = ExponentVector::zero(self.rank);
        for (i, m) in mins.0.iter_mut().enumerate() {
            *m = self.terms.keys().map(|e| e.0[i]).min().unwrap_or(0);
        }
        mins
    }

    fn leading(&self) -> Option<(&ExponentVector, &FieldElem)> {
        self.terms.iter().next_back()
    }

    /// Canonical representative of `p·{±t^e}`: the lexicographically smallest
    /// exponent is moved to zero and the coefficient there is given a
    /// positive leading rational coefficient.
    pub fn normalize_unit(&self) -> Self {
        let Some((lowest, coeff)) = self.terms.iter().next() else {
            return self.clone();
        };
        let shifted = self.shift(&lowest.neg());
        if coeff.leading_coeff().map_or(false, |c| c.is_negative()) {
            shifted.neg()
        } else {
            shifted
        }
    }

    /// True when `self = u·other` for a unit `u = ±t^e`.
    pub fn eq_up_to_signed_monomial(&self, other: &Self) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    /// True when `self = c·t^e·other` for some nonzero field element `c`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match self.div_exact(other) {
            Some(q) => q.as_monomial().is_some(),
            None => false,
        }
    }

    /// Exact division in the Laurent ring.
    ///
    /// The divisor is shifted so every variable has minimum exponent zero;
    /// then a quotient exists iff ordinary polynomial division of the shifted
    /// dividend leaves no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some((c, e)) = divisor.as_monomial() {
            return Some(self.mul_monomial(&c.inverse()?, &e.neg()));
        }
        let dshift = divisor.min_exponents();
        let g = divisor.shift(&dshift.neg());
        let fshift = self.min_exponents();
        let mut rem = self.shift(&fshift.neg());
        let (glead_e, glead_c) = g.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let glead_inv = glead_c.inverse()?;
        let mut quot = self.zero_like();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if !e.dominates(&glead_e) {
                return None;
            }
            let qe = e.sub(&glead_e);
            let qc = c.mul(&glead_inv);
            rem = rem.sub(&g.mul_monomial(&qc, &qe));
            quot.add_term(qe, qc);
        }
        Some(quot.shift(&fshift.sub(&dshift)))
    }

    /// Formats with variables `t1..tb` (`t` when `b = 1`), ascending
    /// lexicographic exponent order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let mono = format_monomial(e, names);
            let first = out.is_empty();
            match c.as_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    if first {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if neg { " - " } else { " + " });
                    }
                    let abs = format_abs_rational(&q);
                    if mono.is_empty() {
                        out.push_str(&abs);
                    } else if abs == "1" {
                        out.push_str(&mono);
                    } else {
                        out.push_str(&format!("{}*{}", abs, mono));
                    }
                }
                None => {
                    if !first {
                        out.push_str(" + ");
                    }
                    if mono.is_empty() {
                        out.push_str(&format!("({})", c));
                    } else {
                        out.push_str(&format!("({})*{}", c, mono));
                    }
                }
            }
        }
        out
    }

    pub fn default_variable_names(rank: usize) -> Vec<String> {
        if rank == 1 {
            vec!["t".into()]
        } else {
            (1..=rank).map(|i| format!("t{}", i)).collect()
        }
    }
}

fn format_monomial(e: &ExponentVector, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let name = &names[i];
        if k == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{}^{}", name, k));
        }
    }
    parts.join("*")
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&Self::default_variable_names(self.rank)))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field, self.rank)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field, self.rank)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn add_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1.mul(c2));
            }
        }
        out
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
    fn from_rational(&self, q: &BigRational) -> Self {
        if Zero::is_zero(q) {
            return self.zero_like();
        }
        Self::constant(self.field.from_rational(q.clone()), self.rank)
    }
}

/// Normalized representative of `p` up to `±` monomials.
pub fn laurent_normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    p.normalize_unit()
}
