use super::algebra::HopfSuperAlgebra;
use super::element::{Element, Tensor};
use crate::grouprings::Ring;
use crate::Error;

/// Degree-preserving linear map given by the images of basis vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAutomorphism<R: Ring> {
    pub images: Vec<Element<R>>,
}

impl<R: Ring> HopfAutomorphism<R> {
    pub fn identity(h: &HopfSuperAlgebra<R>) -> Self {
        HopfAutomorphism { images: (0..h.dim()).map(|i| h.basis(i)).collect() }
    }

    pub fn apply(&self, x: &Element<R>) -> Element<R> {
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            for (j, b) in self.images[*i].terms() {
                out.add_term(*j, a.mul(b));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        HopfAutomorphism { images: other.images.iter().map(|x| self.apply(x)).collect() }
    }

    fn apply_tensor(&self, t: &Tensor<R>) -> Tensor<R> {
        let mut out = Tensor::zero();
        for (k, a) in t.terms() {
            let mut partial: Vec<(Vec<usize>, R)> = vec![(Vec::new(), a.clone())];
            for &i in k {
                let mut next = Vec::new();
                for (key, c) in &partial {
                    for (j, b) in self.images[i].terms() {
                        let mut nk = key.clone();
                        nk.push(*j);
                        next.push((nk, c.mul(b)));
                    }
                }
                partial = next;
            }
            for (key, c) in partial {
                out.add_term(key, c);
            }
        }
        out
    }

    /// Checks that the map commutes with `m`, `Δ`, `ε`, `S` on all basis elements.
    pub fn is_hopf_morphism(&self, h: &HopfSuperAlgebra<R>) -> bool {
        let n = h.dim();
        for i in 0..n {
            let x = h.basis(i);
            let fx = self.apply(&x);
            if h.degree_of(&fx).map_or(false, |d| d != h.degrees[i]) {
                return false;
            }
            if h.coproduct(&fx) != self.apply_tensor(&h.coproduct(&x)) {
                return false;
            }
            if h.counit_of(&fx) != h.counit[i] {
                return false;
            }
            if h.antipode_of(&fx) != self.apply(&h.antipode[i]) {
                return false;
            }
            for j in 0..n {
                let y = h.basis(j);
                if self.apply(&h.product(&x, &y)) != h.product(&fx, &self.apply(&y)) {
                    return false;
                }
            }
        }
        true
    }
}

/// The scalar `r` with `φ(c) = r·c`.
pub fn r_of<R: Ring>(h: &HopfSuperAlgebra<R>, phi: &HopfAutomorphism<R>) -> Result<R, Error> {
    let c = &h.cointegral;
    let (k, ck) = c.terms().iter().next().ok_or_else(|| Error::InvalidArgument("cointegral is zero".into()))?;
    let image = phi.apply(c);
    let r = image
        .coefficient(*k)
        .cloned()
        .unwrap_or_else(|| h.zero())
        .div_exact(ck)
        .ok_or_else(|| Error::InvalidArgument("cointegral coefficient is not invertible".into()))?;
    if image != c.scale(&r) {
        return Err(Error::InvalidArgument("image of the cointegral is not proportional to it".into()));
    }
    Ok(r)
}
