//! Exact algebra: number fields, free-group words and Fox calculus, Smith
//! normal form, and multivariate Laurent polynomials.

pub mod abelian;
pub mod field;
pub mod group_ring;
pub mod laurent;
pub mod matrix;
pub mod ring;
pub mod word;

pub use abelian::{abelianize, smith_normal_form, AbelianizationMap, SmithForm};
pub use field::{FieldElem, NumberField};
pub use group_ring::{fox_derivative, sigma, word_multiply, GroupRingElement};
pub use laurent::{laurent_normalize_unit, ExponentVector, LaurentPoly};
pub use matrix::Matrix;
pub use ring::{Rational, Ring};
pub use word::{Letter, Word};
