#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use suture_kup::diagram::HeegaardDatum;
use suture_kup::grouprings::{abelianize, AbelianizationMap, FieldElem, Matrix, NumberField, Ring};
use suture_kup::kuperberg::Representation;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random invertible matrix with small integer entries, or with small
/// rational entries when `fractions` is set.
pub fn random_invertible(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    n: usize,
    fractions: bool,
) -> Matrix<FieldElem> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| {
            let num = field.from_int(rng.gen_range(-3..=3));
            if fractions {
                num.div_exact(&field.from_int(rng.gen_range(1..=3))).unwrap()
            } else {
                num
            }
        });
        if !m.det_or(&field.one()).is_zero() {
            return m;
        }
    }
}

pub fn random_representation(rng: &mut ChaCha8Rng, field: &Arc<NumberField>, n: usize, gens: usize) -> Representation {
    let mats = (0..gens).map(|_| random_invertible(rng, field, n, true)).collect();
    Representation::new(field.clone(), n, mats).unwrap()
}

pub fn matrix_power(m: &Matrix<FieldElem>, e: i64) -> Matrix<FieldElem> {
    let one = m.get(0, 0).one_like();
    let base = if e < 0 { m.inverse().unwrap() } else { m.clone() };
    let mut acc = Matrix::identity(m.rows(), &one);
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul(&base);
    }
    acc
}

/// `ρ(g) = Π_k A^{(k+1)·h(g)_k}` for one random `A`: commuting images, so
/// every relator maps to the identity.
pub fn abelian_representation(
    rng: &mut ChaCha8Rng,
    field: &Arc<NumberField>,
    n: usize,
    h: &AbelianizationMap,
) -> Representation {
    let a = random_invertible(rng, field, n, false);
    let mats = h
        .gen_images
        .iter()
        .map(|f| {
            let e: i64 = f.0.iter().enumerate().map(|(k, x)| (k as i64 + 1) * x).sum();
            matrix_power(&a, e)
        })
        .collect();
    Representation::new(field.clone(), n, mats).unwrap()
}

pub fn homology(datum: &HeegaardDatum) -> AbelianizationMap {
    let p = datum.presentation().unwrap();
    abelianize(p.num_generators(), &p.relators)
}

pub fn fixture(name: &str) -> HeegaardDatum {
    let path = format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name);
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn rationals() -> Arc<NumberField> {
    NumberField::rationals()
}
