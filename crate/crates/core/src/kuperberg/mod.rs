//! Kuperberg invariants `Z^ρ_H` of extended sutured Heegaard diagrams and
//! their homology-twisted versions.

mod covariance;
mod evaluate;
mod representation;

pub use covariance::{check_covariance_suite, CovarianceReport};
pub use evaluate::{
    contract_exterior, evaluate_z, evaluate_z_exterior, evaluate_z_twisted, evaluate_z_twisted_with, EvaluationOptions,
};
pub use representation::{HopfRepresentation, Representation};

use crate::diagram::{transition_words, HeegaardDatum, Multipoint};
use crate::grouprings::{AbelianizationMap, LaurentPoly, Word};
use crate::Error;

/// `r_H((ρ ⊗ h)(Π_j d̄_j))` for the β-arcs `d_j` from the basepoints of `x`
/// to those of `y`, so that `Z(x) = correction · Z(y)`.
pub fn spinc_correction(
    datum: &HeegaardDatum,
    x: &Multipoint,
    y: &Multipoint,
    rep: &Representation,
    h: &AbelianizationMap,
) -> Result<LaurentPoly, Error> {
    let w = transition_words(datum, x, y)?.iter().fold(Word::identity(), |acc, w| acc.multiply(w));
    Ok(rep.r_of_word_twisted(&w, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::{figure_eight, trefoil};
    use crate::grouprings::{FieldElem, NumberField};
    use crate::hopf::exterior_algebra;

    #[test]
    fn trefoil_twisted_value() {
        let d = trefoil();
        let k = NumberField::rationals();
        let rep = Representation::trivial(&k, 1, 2);
        let (z, _) = evaluate_z_twisted(&d, &rep, &EvaluationOptions::default()).unwrap();
        assert_eq!(z.to_string(), "t^-1 - 1 + t");
        assert_eq!(z.normalize_unit().to_string(), "1 - t + t^2");
    }

    #[test]
    fn figure_eight_twisted_value() {
        let d = figure_eight();
        let k = NumberField::rationals();
        let rep = Representation::trivial(&k, 1, 2);
        let (z, _) = evaluate_z_twisted(&d, &rep, &EvaluationOptions::default()).unwrap();
        assert_eq!(z.normalize_unit().to_string(), "1 - 3*t + t^2");
    }

    #[test]
    fn sweep_matches_full_expansion() {
        let k = NumberField::rationals();
        let m = |rows: &[&[i64]]| {
            crate::grouprings::Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&x| k.from_int(x)).collect::<Vec<FieldElem>>()).collect(),
            )
        };
        let rep = Representation::new(k.clone(), 2, vec![m(&[&[2, 1], &[1, 1]]), m(&[&[1, 3], &[0, 1]])]).unwrap();
        let opts = EvaluationOptions::default();
        for d in [trefoil(), figure_eight()] {
            let fast = evaluate_z_exterior(&d, &rep, &opts).unwrap();
            let h = exterior_algebra(2, &k.one());
            let slow = evaluate_z(&d, &h, &rep.to_hopf().unwrap(), &opts).unwrap();
            assert_eq!(fast, slow);
            for sign in [1, -1] {
                let o = EvaluationOptions::with_sign(sign);
                assert_eq!(evaluate_z_exterior(&d, &rep, &o).unwrap(), fast);
            }
        }
    }
}
