mod common;

use proptest::prelude::*;
use suture_kup::grouprings::group_ring::generator_minus_one;
use suture_kup::grouprings::{
    abelianize, fox_derivative, ExponentVector, GroupRingElement, LaurentPoly, Matrix, NumberField, Ring, Word,
};
use suture_kup::hopf::exterior::lambda_extend_unchecked;
use suture_kup::hopf::{exterior_algebra, integral_scales_by_det};
use suture_kup::torsion::bareiss_det;

const GENS: usize = 3;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0..GENS, prop::bool::ANY), 0..=12)
        .prop_map(|v| Word::from_pairs(&v.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 })).collect::<Vec<_>>()))
}

fn small_int() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn int_matrix(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(small_int(), n * n)
}

fn rational_matrix(n: usize, entries: &[i64]) -> Matrix<suture_kup::grouprings::FieldElem> {
    let k = NumberField::rationals();
    Matrix::from_fn(n, n, |i, j| k.from_int(entries[i * n + j]))
}

/// Laurent polynomial in one variable with exponents in `-2..=2`.
fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(small_int(), 5).prop_map(|c| LaurentPoly::from_int_coeffs(&NumberField::rationals(), -2, &c))
}

fn field_elem(field: std::sync::Arc<NumberField>) -> impl Strategy<Value = suture_kup::grouprings::FieldElem> {
    (small_int(), small_int(), 1i64..=3).prop_map(move |(a, b, d)| {
        field.from_int(a).add(&field.generator().mul(&field.from_int(b))).div_exact(&field.from_int(d)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn words_are_freely_reduced(w in word()) {
        for pair in w.letters().windows(2) {
            prop_assert!(pair[0] != pair[1].inverse());
        }
        prop_assert!(w.multiply(&w.inverse()).is_identity());
    }

    #[test]
    fn fox_leibniz_rule(u in word(), v in word(), g in 0..GENS) {
        let lhs = fox_derivative(&u.multiply(&v), g);
        let rhs = fox_derivative(&u, g).add(&GroupRingElement::from_word(u.clone()).mul(&fox_derivative(&v, g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fox_fundamental_identity(w in word()) {
        let mut lhs = GroupRingElement::zero();
        for g in 0..GENS {
            lhs = lhs.add(&fox_derivative(&w, g).mul(&generator_minus_one(g)));
        }
        prop_assert_eq!(lhs, GroupRingElement::from_word(w).sub(&GroupRingElement::one()));
    }

    #[test]
    fn sigma_reverses_products(u in word(), v in word(), g in 0..GENS) {
        let x = fox_derivative(&u, g).add(&GroupRingElement::from_word(v.clone()));
        let y = fox_derivative(&v, g);
        prop_assert_eq!(x.mul(&y).sigma(), y.sigma().mul(&x.sigma()));
        prop_assert_eq!(x.sigma().sigma(), x);
    }

    #[test]
    fn abelianization_kills_relators(rels in prop::collection::vec(word(), 0..=3)) {
        let h = abelianize(GENS, &rels);
        for r in &rels {
            prop_assert!(h.image(r).is_zero());
        }
        prop_assert_eq!(h.gen_images.len(), GENS);
    }

    #[test]
    fn normalization_is_idempotent_and_unit_blind(p in laurent(), e in -3i64..=3, neg in prop::bool::ANY) {
        let n = p.normalize_unit();
        prop_assert_eq!(n.normalize_unit(), n.clone());
        let k = NumberField::rationals();
        let u = LaurentPoly::monomial(k.from_int(if neg { -1 } else { 1 }), ExponentVector(vec![e]));
        prop_assert_eq!(p.mul(&u).normalize_unit(), n);
    }

    #[test]
    fn laurent_det_is_multiplicative(a in prop::collection::vec(laurent(), 4), b in prop::collection::vec(laurent(), 4)) {
        let k = NumberField::rationals();
        let one = LaurentPoly::one(&k, 1);
        let ma = Matrix::from_fn(2, 2, |i, j| a[2 * i + j].clone());
        let mb = Matrix::from_fn(2, 2, |i, j| b[2 * i + j].clone());
        prop_assert_eq!(bareiss_det(&ma.mul(&mb), &one), bareiss_det(&ma, &one).mul(&bareiss_det(&mb, &one)));
        prop_assert_eq!(bareiss_det(&ma, &one), ma.det());
    }

    #[test]
    fn integral_scales_by_determinant(n in 1usize..=3, entries in int_matrix(3)) {
        let t = rational_matrix(n, &entries);
        prop_assert!(integral_scales_by_det(&t, &NumberField::rationals().one()));
    }

    #[test]
    fn lambda_is_functorial(n in 1usize..=3, s in int_matrix(3), t in int_matrix(3)) {
        let one = NumberField::rationals().one();
        let (s, t) = (rational_matrix(n, &s), rational_matrix(n, &t));
        let h = exterior_algebra(n, &one);
        let composed = lambda_extend_unchecked(&s, &one).compose(&lambda_extend_unchecked(&t, &one));
        let direct = lambda_extend_unchecked(&s.mul(&t), &one);
        for i in 0..h.dim() {
            prop_assert_eq!(composed.apply(&h.basis(i)), direct.apply(&h.basis(i)));
        }
    }
}

fn field_axioms(field: std::sync::Arc<NumberField>) {
    let elems = prop::collection::vec(field_elem(field), 3);
    proptest!(ProptestConfig::with_cases(100), |(v in elems)| {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a.add(b).mul(c), a.mul(c).add(&b.mul(c)));
        prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        prop_assert_eq!(a.mul(b), b.mul(a));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
        }
    });
}

#[test]
fn gaussian_field_axioms() {
    field_axioms(NumberField::from_i64(&[1, 0, 1]).unwrap());
}

#[test]
fn golden_field_axioms() {
    let k = NumberField::from_i64(&[-1, -1, 1]).unwrap();
    let x = k.generator();
    assert_eq!(x.mul(&x), x.add(&k.one()));
    field_axioms(k);
}
