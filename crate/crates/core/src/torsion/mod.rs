//! Twisted Reidemeister torsion and twisted Alexander polynomials from the
//! Fox Jacobian of a presentation.

use std::fmt;

use crate::diagram::{HeegaardDatum, Presentation};
use crate::grouprings::{
    abelianize, fox_derivative, AbelianizationMap, ExponentVector, FieldElem, GroupRingElement, LaurentPoly, Matrix,
    Ring, Word,
};
use crate::kuperberg::{evaluate_z_exterior, evaluate_z_twisted_with, EvaluationOptions, Representation};
use crate::Error;

/// `rows[j][i] = ∂r_j/∂g_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxMatrix {
    pub rows: Vec<Vec<GroupRingElement>>,
}

impl FoxMatrix {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// The first `k` columns.
    pub fn restrict_columns(&self, k: usize) -> FoxMatrix {
        FoxMatrix { rows: self.rows.iter().map(|r| r[..k].to_vec()).collect() }
    }
}

pub fn fox_matrix(p: &Presentation) -> FoxMatrix {
    FoxMatrix {
        rows: p.relators.iter().map(|r| (0..p.num_generators()).map(|g| fox_derivative(r, g)).collect()).collect(),
    }
}

/// `(ρ ⊗ h)(e)` for a group ring element `e`.
pub fn evaluate_element(e: &GroupRingElement, rep: &Representation, h: &AbelianizationMap) -> Matrix<LaurentPoly> {
    let n = rep.dimension();
    let zero = LaurentPoly::zero(rep.field(), h.rank);
    let mut acc = Matrix::filled(n, n, &zero);
    for (w, c) in e.terms() {
        let coeff = LaurentPoly::constant(rep.field().from_rational(c.clone()), h.rank);
        acc = acc.add(&rep.twisted_image(w, h).scale(&coeff));
    }
    acc
}

/// Block matrix with block `(r, c)` equal to `(ρ ⊗ h)(entry(r, c))`.
fn block_matrix(
    size: usize,
    rep: &Representation,
    h: &AbelianizationMap,
    entry: impl Fn(usize, usize) -> GroupRingElement,
) -> Matrix<LaurentPoly> {
    let n = rep.dimension();
    let blocks: Vec<Vec<Matrix<LaurentPoly>>> =
        (0..size).map(|r| (0..size).map(|c| evaluate_element(&entry(r, c), rep, h)).collect()).collect();
    Matrix::from_fn(size * n, size * n, |i, j| blocks[i / n][j / n].get(i % n, j % n).clone())
}

/// Determinant of a Laurent matrix: each row is shifted into the polynomial
/// ring, the fraction-free elimination runs there, and the shift is undone.
pub fn bareiss_det(m: &Matrix<LaurentPoly>, one: &LaurentPoly) -> LaurentPoly {
    if m.rows() == 0 {
        return one.clone();
    }
    let mut total = ExponentVector::zero(one.rank());
    let rows: Vec<Vec<LaurentPoly>> = (0..m.rows())
        .map(|i| {
            let mut mins: Option<ExponentVector> = None;
            for x in m.row(i).iter().filter(|x| !x.is_zero()) {
                let e = x.min_exponents();
                mins = Some(match mins {
                    None => e,
                    Some(cur) => ExponentVector(cur.0.iter().zip(&e.0).map(|(a, b)| *a.min(b)).collect()),
                });
            }
            let shift = mins.unwrap_or_else(|| ExponentVector::zero(one.rank()));
            total = total.add(&shift);
            m.row(i).iter().map(|x| x.shift(&shift.neg())).collect()
        })
        .collect();
    Matrix::from_rows(rows).det().shift(&total)
}

fn square_check(p: &Presentation, rep: &Representation) -> Result<usize, Error> {
    let d = p.closed_count;
    if p.relators.len() != d {
        return Err(Error::Dimension(format!(
            "{} relators but {} closed generators; the Fox submatrix is not square",
            p.relators.len(),
            d
        )));
    }
    if rep.num_generators() < p.num_generators() {
        return Err(Error::Representation(format!(
            "representation defines {} generators, presentation has {}",
            rep.num_generators(),
            p.num_generators()
        )));
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorsionResult {
    pub raw: LaurentPoly,
    pub normalized: LaurentPoly,
}

/// `det((ρ ⊗ h)(σ(∂r_j/∂g_i)))` over the closed generators.
pub fn twisted_torsion(p: &Presentation, rep: &Representation, h: &AbelianizationMap) -> Result<TorsionResult, Error> {
    let d = square_check(p, rep)?;
    let fox = fox_matrix(p);
    let m = block_matrix(d, rep, h, |r, c| fox.rows[r][c].sigma());
    let raw = bareiss_det(&m, &LaurentPoly::one(rep.field(), h.rank));
    Ok(TorsionResult { normalized: raw.normalize_unit(), raw })
}

/// Untwisted Alexander polynomial: torsion with the trivial one-dimensional representation.
pub fn alexander_polynomial(p: &Presentation) -> Result<(TorsionResult, AbelianizationMap), Error> {
    let h = abelianize(p.num_generators(), &p.relators);
    let field = crate::grouprings::NumberField::rationals();
    let rep = Representation::trivial(&field, 1, p.num_generators());
    Ok((twisted_torsion(p, &rep, &h)?, h))
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlexanderResult {
    pub torsion: TorsionResult,
    pub boundary_factor: LaurentPoly,
    /// Normalized `torsion / boundary_factor` when the division is exact.
    pub quotient: Option<LaurentPoly>,
}

/// Torsion together with `det(t^{h(m)} ρ(m) - I)` for the meridian `m`.
pub fn twisted_alexander_knot(
    p: &Presentation,
    rep: &Representation,
    h: &AbelianizationMap,
    meridian: &Word,
) -> Result<AlexanderResult, Error> {
    let torsion = twisted_torsion(p, rep, h)?;
    let one = LaurentPoly::one(rep.field(), h.rank);
    let n = rep.dimension();
    let id = Matrix::identity(n, &one);
    let boundary = rep.twisted_image(meridian, h).sub(&id);
    let boundary_factor = bareiss_det(&boundary, &one);
    let quotient = if torsion.raw.is_zero() || boundary_factor.is_zero() {
        None
    } else {
        torsion.normalized.exact_div(&boundary_factor.normalize_unit()).map(|q| q.normalize_unit())
    };
    Ok(AlexanderResult { torsion, boundary_factor, quotient })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrosscheckReport {
    pub kuperberg: LaurentPoly,
    pub fox_determinant: LaurentPoly,
    pub passed: bool,
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kuperberg: {}", self.kuperberg)?;
        writeln!(f, "fox determinant: {}", self.fox_determinant)?;
        writeln!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// `det(ρ(∂β̄_i/∂α*_j))_{i,j ≤ d}` with no involution, twisted by `h`.
pub fn fox_determinant(
    datum: &HeegaardDatum,
    rep: &Representation,
    h: &AbelianizationMap,
) -> Result<LaurentPoly, Error> {
    let p = datum.presentation()?;
    let d = square_check(&p, rep)?;
    let fox = fox_matrix(&p);
    let m = block_matrix(d, rep, h, |r, c| fox.rows[r][c].clone());
    Ok(bareiss_det(&m, &LaurentPoly::one(rep.field(), h.rank)))
}

/// Compares `Z` over `Λ(V)` with the Fox determinant exactly. Without a twist
/// both sides are constants of the rank-zero Laurent ring.
pub fn crosscheck(datum: &HeegaardDatum, rep: &Representation, twisted: bool) -> Result<CrosscheckReport, Error> {
    let p = datum.presentation()?;
    let h = if twisted {
        abelianize(p.num_generators(), &p.relators)
    } else {
        AbelianizationMap::trivial(p.num_generators())
    };
    let opts = EvaluationOptions::default();
    let kuperberg = if twisted {
        evaluate_z_twisted_with(datum, rep, &h, &opts)?
    } else {
        let z: FieldElem = evaluate_z_exterior(datum, rep, &opts)?;
        LaurentPoly::constant(z, 0)
    };
    let fox_determinant = fox_determinant(datum, rep, &h)?;
    let passed = kuperberg == fox_determinant;
    Ok(CrosscheckReport { kuperberg, fox_determinant, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprings::NumberField;

    fn lp(lo: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(&NumberField::rationals(), lo, c)
    }

    #[test]
    fn bareiss_examples() {
        let k = NumberField::rationals();
        let one = LaurentPoly::one(&k, 1);
        let zero = LaurentPoly::zero(&k, 1);
        assert_eq!(bareiss_det(&Matrix::identity(3, &one), &one), one);
        let t = LaurentPoly::variable(&k, 1, 0);
        let tinv = LaurentPoly::monomial(k.one(), ExponentVector(vec![-1]));
        let diag = Matrix::from_rows(vec![vec![t.clone(), zero.clone()], vec![zero, tinv]]);
        assert_eq!(bareiss_det(&diag, &one), one);
        let m = Matrix::from_rows(vec![vec![t.clone(), one.clone()], vec![one.clone(), t]]);
        assert_eq!(bareiss_det(&m, &one), lp(0, &[-1, 0, 1]));
    }

    #[test]
    fn unit_relator_torsion() {
        let p = Presentation { generator_names: vec!["g".into()], closed_count: 1, relators: vec![Word::generator(0)] };
        let (t, h) = alexander_polynomial(&p).unwrap();
        assert_eq!(h.rank, 0);
        assert_eq!(t.normalized, LaurentPoly::one(&NumberField::rationals(), 0));
    }
}
