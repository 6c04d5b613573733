use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with exact arithmetic.
///
/// Elements carry whatever context they need (a number field, a number of
/// Laurent variables), so constants are produced from an existing element.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// Exact quotient `self / other`, `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    /// Embeds a rational number using `self` as the context.
    fn from_rational(&self, q: &BigRational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// True when `self` has an inverse in the ring.
    fn is_unit(&self) -> bool {
        self.one_like().div_exact(self).is_some()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn from_int(&self, n: i64) -> Self {
        self.from_rational(&BigRational::from_integer(n.into()))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self` or `-self` depending on `sign`.
    fn signed(&self, sign: i32) -> Self {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

pub type Rational = BigRational;

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn from_rational(&self, q: &BigRational) -> Self {
        q.clone()
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn format_abs_rational(q: &BigRational) -> String {
    format_rational(&q.abs())
}
