//! Number fields `Q[x]/(f)` for a monic integer polynomial `f`.
//!
//! Irreducibility of `f` is the caller's responsibility; a reducible `f`
//! shows up as a failed inversion.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{format_abs_rational, Ring};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    /// Coefficients of the minimal polynomial, constant term first. Monic.
    min_poly: Vec<BigInt>,
}

impl NumberField {
    pub fn new(min_poly: Vec<BigInt>) -> Result<Arc<Self>, Error> {
        if min_poly.len() < 2 {
            return Err(Error::InvalidField("minimal polynomial must have degree >= 1".into()));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        Ok(Arc::new(NumberField { min_poly }))
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Arc<Self>, Error> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The rationals, `Q[x]/(x)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField { min_poly: vec![BigInt::zero(), BigInt::one()] })
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    pub fn zero(self: &Arc<Self>) -> FieldElem {
        FieldElem { field: self.clone(), coeffs: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> FieldElem {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElem {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> FieldElem {
        FieldElem::from_coeffs(self.clone(), vec![q])
    }

    /// The class of `x`, a root of the minimal polynomial.
    pub fn generator(self: &Arc<Self>) -> FieldElem {
        FieldElem::from_coeffs(self.clone(), vec![BigRational::zero(), BigRational::one()])
    }

    /// Parses `"a0 + a1*x + a2*x^2"`-style strings with rational coefficients `p/q`.
    pub fn parse(self: &Arc<Self>, s: &str) -> Result<FieldElem, Error> {
        let coeffs = parse_univariate(s, "x")?;
        Ok(FieldElem::from_coeffs(self.clone(), coeffs))
    }
}

/// Element of a [`NumberField`], stored as a polynomial of degree below the
/// field degree. The zero element has no coefficients.
#[derive(Clone)]
pub struct FieldElem {
    field: Arc<NumberField>,
    coeffs: Vec<BigRational>,
}

impl FieldElem {
    pub fn from_coeffs(field: Arc<NumberField>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = reduce(coeffs, &field.min_poly);
        FieldElem { field, coeffs }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The element as a rational number, if it lies in the prime field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Highest-degree nonzero rational coefficient; its sign fixes the
    /// `±` part of unit normalization.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn inverse(&self) -> Option<FieldElem> {
        if self.coeffs.is_empty() {
            return None;
        }
        let modulus: Vec<BigRational> =
            self.field.min_poly.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus)?;
        Some(FieldElem::from_coeffs(self.field.clone(), inv))
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for FieldElem {}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_univariate(&self.coeffs, "x"))
    }
}

impl Ring for FieldElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        trim(&mut out);
        FieldElem { field: self.field.clone(), coeffs: out }
    }
    fn neg(&self) -> Self {
        FieldElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return self.zero_like();
        }
        if self.coeffs.len() == 1 && other.coeffs.len() == 1 {
            let mut out = vec![&self.coeffs[0] * &other.coeffs[0]];
            trim(&mut out);
            return FieldElem { field: self.field.clone(), coeffs: out };
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FieldElem::from_coeffs(self.field.clone(), out)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.coeffs.len() == 1 {
            let d = &other.coeffs[0];
            return Some(FieldElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c / d).collect() });
        }
        Some(self.mul(&other.inverse()?))
    }
    fn from_rational(&self, q: &BigRational) -> Self {
        self.field.from_rational(q.clone())
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().map_or(false, |c| Zero::is_zero(c)) {
        v.pop();
    }
}

/// Reduces a rational polynomial modulo a monic integer polynomial.
fn reduce(mut coeffs: Vec<BigRational>, min_poly: &[BigInt]) -> Vec<BigRational> {
    trim(&mut coeffs);
    let deg = min_poly.len() - 1;
    while coeffs.len() > deg {
        let top = coeffs.pop().unwrap();
        if !Zero::is_zero(&top) {
            let shift = coeffs.len() - deg;
            for (k, m) in min_poly[..deg].iter().enumerate() {
                coeffs[shift + k] -= &top * BigRational::from_integer(m.clone());
            }
        }
        trim(&mut coeffs);
    }
    coeffs
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let lead = b.last().expect("division by zero polynomial");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let q = rem.last().unwrap() / lead;
        for (k, bk) in b.iter().enumerate() {
            rem[shift + k] -= &q * bk;
        }
        quot[shift] = q;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero) - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 = gcd; invertible only when it is a nonzero constant
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
    let (_, rem) = poly_divrem(&inv, m);
    Some(rem)
}

pub(crate) fn format_univariate(coeffs: &[BigRational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if Zero::is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = format_abs_rational(c);
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{}^{}", var, k),
        };
        if mono.is_empty() {
            out.push_str(&abs);
        } else if abs == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", abs, mono));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a univariate polynomial with rational coefficients in `var`.
pub(crate) fn parse_univariate(s: &str, var: &str) -> Result<Vec<BigRational>, Error> {
    let bad = |msg: &str| Error::Parse(format!("field element {:?}: {}", s, msg));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let bytes = compact.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigRational::one();
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &compact[start..i];
        if term.is_empty() {
            return Err(bad("dangling sign"));
        }
        let (coef_str, power) = match term.find(var) {
            Some(pos) => {
                let coef = term[..pos].trim_end_matches('*');
                let rest = &term[pos + var.len()..];
                let power = if rest.is_empty() {
                    1usize
                } else if let Some(p) = rest.strip_prefix('^') {
                    p.parse::<usize>().map_err(|_| bad("bad exponent"))?
                } else {
                    return Err(bad("unexpected characters after variable"));
                };
                (coef, power)
            }
            None => (term, 0usize),
        };
        let coef = if coef_str.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coef_str).ok_or_else(|| bad("bad coefficient"))?
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += sign * coef;
    }
    trim(&mut coeffs);
    Ok(coeffs)
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gaussian_integers() {
        let k = NumberField::from_i64(&[1, 0, 1]).unwrap();
        let i = k.generator();
        assert_eq!(i.mul(&i), k.from_int(-1));
        let z = k.parse("1 + 2*x").unwrap();
        let inv = z.inverse().unwrap();
        assert_eq!(z.mul(&inv), k.one());
        assert_eq!(inv, k.parse("1/5 - 2/5*x").unwrap());
    }

    #[test]
    fn golden_ratio() {
        let k = NumberField::from_i64(&[-1, -1, 1]).unwrap();
        let phi = k.generator();
        assert_eq!(phi.mul(&phi), phi.add(&k.one()));
        assert_eq!(phi.inverse().unwrap(), phi.sub(&k.one()));
    }

    #[test]
    fn display_and_parse() {
        let k = NumberField::from_i64(&[1, 1, 1]).unwrap();
        let e = FieldElem::from_coeffs(k.clone(), vec![q(1, 2), q(-3, 1)]);
        assert_eq!(e.to_string(), "1/2 - 3*x");
        assert_eq!(k.parse(&e.to_string()).unwrap(), e);
        assert_eq!(k.zero().to_string(), "0");
        assert_eq!(k.parse("-x").unwrap().to_string(), "-x");
        // x^2 reduces to -1 - x
        assert_eq!(k.parse("x^2").unwrap().to_string(), "-1 - x");
    }

    #[test]
    fn rejects_non_monic() {
        assert!(NumberField::from_i64(&[1, 2]).is_err());
        assert!(NumberField::from_i64(&[1]).is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        let k = NumberField::rationals();
        assert!(k.zero().inverse().is_none());
        assert_eq!(k.from_int(4).inverse().unwrap(), k.from_rational(q(1, 4)));
    }
}
