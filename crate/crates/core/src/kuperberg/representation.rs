use std::sync::Arc;

use crate::grouprings::{AbelianizationMap, FieldElem, LaurentPoly, Matrix, NumberField, Ring, Word};
use crate::hopf::exterior::{lambda_extend, twist_by_homology, twisted_matrix};
use crate::hopf::HopfAutomorphism;
use crate::Error;

/// Matrices `ρ(g) ∈ GL(n, K)` for every generator of a free group.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    field: Arc<NumberField>,
    dimension: usize,
    matrices: Vec<Matrix<FieldElem>>,
    inverses: Vec<Matrix<FieldElem>>,
}

impl Representation {
    pub fn new(field: Arc<NumberField>, dimension: usize, matrices: Vec<Matrix<FieldElem>>) -> Result<Self, Error> {
        let mut inverses = Vec::with_capacity(matrices.len());
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != dimension || m.cols() != dimension {
                return Err(Error::Dimension(format!(
                    "generator {} has a {}x{} matrix, expected {}x{}",
                    g,
                    m.rows(),
                    m.cols(),
                    dimension,
                    dimension
                )));
            }
            if m.entries().iter().any(|x| x.field() != &field) {
                return Err(Error::Representation(format!("generator {} has entries outside the field", g)));
            }
            let inv =
                m.inverse().ok_or_else(|| Error::Singular(format!("matrix of generator {} is not invertible", g)))?;
            inverses.push(inv);
        }
        Ok(Representation { field, dimension, matrices, inverses })
    }

    /// Every generator acts as the identity.
    pub fn trivial(field: &Arc<NumberField>, dimension: usize, num_generators: usize) -> Self {
        let id = Matrix::identity(dimension, &field.one());
        Representation {
            field: field.clone(),
            dimension,
            matrices: vec![id.clone(); num_generators],
            inverses: vec![id; num_generators],
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn num_generators(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, g: usize) -> &Matrix<FieldElem> {
        &self.matrices[g]
    }

    pub fn identity_matrix(&self) -> Matrix<FieldElem> {
        Matrix::identity(self.dimension, &self.field.one())
    }

    /// `ρ(w)`, multiplying generator matrices left to right.
    pub fn image(&self, w: &Word) -> Matrix<FieldElem> {
        let mut acc = self.identity_matrix();
        for l in w.letters() {
            let m = if l.exponent > 0 { &self.matrices[l.generator] } else { &self.inverses[l.generator] };
            acc = acc.mul(m);
        }
        acc
    }

    /// `(ρ ⊗ h)(w) = ρ(w) · t^{h(w)}` as a Laurent matrix.
    pub fn twisted_image(&self, w: &Word, h: &AbelianizationMap) -> Matrix<LaurentPoly> {
        twisted_matrix(&self.image(w), &h.image(w))
    }

    /// `r(Λ(ρ(w))) = det ρ(w)`.
    pub fn r_of_word(&self, w: &Word) -> FieldElem {
        self.image(w).det_or(&self.field.one())
    }

    /// `r(Λ(ρ(w)) ⊗ h) = det ρ(w) · t^{n·h(w)}`.
    pub fn r_of_word_twisted(&self, w: &Word, h: &AbelianizationMap) -> LaurentPoly {
        LaurentPoly::monomial(self.r_of_word(w), h.image(w).scale(self.dimension as i64))
    }

    /// Indices of relators not sent to the identity.
    pub fn relator_defects(&self, relators: &[Word]) -> Vec<usize> {
        let id = self.identity_matrix();
        relators.iter().enumerate().filter(|(_, r)| self.image(r) != id).map(|(j, _)| j).collect()
    }

    /// `g ↦ φ ρ(g) φ^{-1}`.
    pub fn conjugate(&self, phi: &Matrix<FieldElem>) -> Result<Self, Error> {
        let inv = phi.inverse().ok_or_else(|| Error::Singular("conjugating matrix is not invertible".into()))?;
        Representation::new(
            self.field.clone(),
            self.dimension,
            self.matrices.iter().map(|m| phi.mul(m).mul(&inv)).collect(),
        )
    }

    /// `g ↦ ρ(g)^{-T}`.
    pub fn inverse_transpose(&self) -> Self {
        Representation {
            field: self.field.clone(),
            dimension: self.dimension,
            matrices: self.inverses.iter().map(|m| m.transpose()).collect(),
            inverses: self.matrices.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Representation for the presentation where generator `g` is inverted.
    pub fn with_inverted_generator(&self, g: usize) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.matrices[g], &mut out.inverses[g]);
        out
    }

    /// New generator `i` acts as old generator `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Representation {
            field: self.field.clone(),
            dimension: self.dimension,
            matrices: perm.iter().map(|&p| self.matrices[p].clone()).collect(),
            inverses: perm.iter().map(|&p| self.inverses[p].clone()).collect(),
        }
    }

    /// Per-generator Hopf automorphisms `Λ(ρ(g))` over the field.
    pub fn to_hopf(&self) -> Result<HopfRepresentation<FieldElem>, Error> {
        let one = self.field.one();
        let generators = self.matrices.iter().map(|m| lambda_extend(m, &one)).collect::<Result<_, _>>()?;
        let inverses = self.inverses.iter().map(|m| lambda_extend(m, &one)).collect::<Result<_, _>>()?;
        Ok(HopfRepresentation { generators, inverses, identity: identity_auto(self.dimension, &one) })
    }

    /// Per-generator automorphisms `Λ(ρ(g)) ⊗ h(g)` over `K[Z^b]`.
    pub fn to_hopf_twisted(&self, h: &AbelianizationMap) -> Result<HopfRepresentation<LaurentPoly>, Error> {
        let mut generators = Vec::new();
        let mut inverses = Vec::new();
        for g in 0..self.num_generators() {
            let f = &h.gen_images[g];
            generators.push(twist_by_homology(&self.field, &self.matrices[g], f)?);
            inverses.push(twist_by_homology(&self.field, &self.inverses[g], &f.neg())?);
        }
        let one = LaurentPoly::one(&self.field, h.rank);
        Ok(HopfRepresentation { generators, inverses, identity: identity_auto(self.dimension, &one) })
    }
}

fn identity_auto<R: Ring>(n: usize, one: &R) -> HopfAutomorphism<R> {
    lambda_extend(&Matrix::identity(n, one), one).expect("identity is invertible")
}

/// A free-group representation into the automorphisms of a Hopf superalgebra.
#[derive(Debug, Clone)]
pub struct HopfRepresentation<R: Ring> {
    pub generators: Vec<HopfAutomorphism<R>>,
    pub inverses: Vec<HopfAutomorphism<R>>,
    pub identity: HopfAutomorphism<R>,
}

impl<R: Ring> HopfRepresentation<R> {
    pub fn image(&self, w: &Word) -> HopfAutomorphism<R> {
        let mut acc = self.identity.clone();
        for l in w.letters() {
            let g = if l.exponent > 0 { &self.generators[l.generator] } else { &self.inverses[l.generator] };
            acc = acc.compose(g);
        }
        acc
    }
}
