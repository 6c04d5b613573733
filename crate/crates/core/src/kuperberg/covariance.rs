use std::fmt;

use super::evaluate::{evaluate_z_twisted_with, EvaluationOptions};
use super::representation::Representation;
use crate::diagram::HeegaardDatum;
use crate::grouprings::{AbelianizationMap, FieldElem, LaurentPoly, Matrix, Ring, Word};
use crate::Error;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CovarianceReport {
    /// `(description, passed)` per individual comparison.
    pub checks: Vec<(String, bool)>,
}

impl CovarianceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, ok)| !*ok).map(|(s, _)| s.as_str()).collect()
    }
}

impl fmt::Display for CovarianceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.checks {
            writeln!(f, "{} {}", if *ok { "PASS" } else { "FAIL" }, name)?;
        }
        Ok(())
    }
}

/// Exercises the exact transformation laws of `Z` over `Λ(V) ⊗ K[Z^b]`:
/// basepoint moves along β, reversal of α and β curves, conjugation of `ρ`
/// by `phi`, and reordering of closed α-curves. Basepoint moves and
/// β-reversal need `ρ ⊗ h` to kill the relators.
///
/// Both reversals carry the super sign `(-1)^{|c|}`: reversing β negates a
/// block row of the Fox Jacobian, and inverting a generator multiplies a
/// block column by `-ρ(g)`.
pub fn check_covariance_suite(
    datum: &HeegaardDatum,
    rep: &Representation,
    h: &AbelianizationMap,
    phi: &Matrix<FieldElem>,
) -> Result<CovarianceReport, Error> {
    let opts = EvaluationOptions::default();
    let z = |d: &HeegaardDatum, r: &Representation, h: &AbelianizationMap| evaluate_z_twisted_with(d, r, h, &opts);
    let base = z(datum, rep, h)?;
    let n = rep.dimension();
    let super_sign = |x: LaurentPoly| if n % 2 == 1 { x.neg() } else { x };
    let mut report = CovarianceReport::default();

    for (j, b) in datum.beta.iter().enumerate() {
        for p in 0..b.crossings.len() {
            if p == b.basepoint_index {
                continue;
            }
            let (moved, bbar) = datum.move_basepoint(j, p)?;
            let factor = rep.r_of_word_twisted(&bbar, h);
            let ok = base == factor.mul(&z(&moved, rep, h)?);
            report.checks.push((format!("beta {} basepoint moved to {}", j, p), ok));
        }
        let ok = z(&datum.reverse_beta(j)?, rep, h)? == super_sign(base.clone());
        report.checks.push((format!("beta {} reversed", j), ok));
    }

    for i in 0..datum.d() {
        let reversed = datum.reverse_alpha(i)?;
        let zr = z(&reversed, &rep.with_inverted_generator(i), &h.with_inverted_generator(i))?;
        let factor = rep.r_of_word_twisted(&Word::generator(i), h);
        report.checks.push((format!("alpha {} reversed", i), zr == super_sign(factor.mul(&base))));
    }

    let conj = rep.conjugate(phi)?;
    report.checks.push(("conjugated representation".into(), z(datum, &conj, h)? == base));

    for i in 0..datum.d() {
        for k in (i + 1)..datum.d() {
            let mut perm: Vec<usize> = (0..rep.num_generators()).collect();
            perm.swap(i, k);
            let swapped = datum.swap_alpha(i, k)?;
            let zs = z(&swapped, &rep.permuted(&perm), &h.permuted(&perm))?;
            report.checks.push((format!("alpha {} and {} swapped", i, k), zs == super_sign(base.clone())));
        }
    }
    Ok(report)
}
