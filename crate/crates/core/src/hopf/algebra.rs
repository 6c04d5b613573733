use std::fmt;

use super::element::{Element, Tensor};
use crate::grouprings::Ring;
use crate::Error;

/// Finite-dimensional graded Hopf superalgebra given by structure tables
/// over a commutative base ring `R`.
///
/// Tensor products use the Koszul rule
/// `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'`.
#[derive(Debug, Clone)]
pub struct HopfSuperAlgebra<R: Ring> {
    pub labels: Vec<String>,
    pub degrees: Vec<i32>,
    /// `mult[i][j] = e_i · e_j`.
    pub mult: Vec<Vec<Element<R>>>,
    /// `comult[i]` lists `(a, b, coeff)` with `Δ(e_i) = Σ coeff · e_a ⊗ e_b`.
    pub comult: Vec<Vec<(usize, usize, R)>>,
    pub unit: Element<R>,
    pub counit: Vec<R>,
    pub antipode: Vec<Element<R>>,
    pub cointegral: Element<R>,
    pub integral: Vec<R>,
    /// Unit of the base ring, used as arithmetic context.
    pub one: R,
}

pub(crate) fn odd(d: i32) -> bool {
    d.rem_euclid(2) == 1
}

pub(crate) fn koszul(d1: i32, d2: i32) -> i32 {
    if odd(d1) && odd(d2) {
        -1
    } else {
        1
    }
}

impl<R: Ring> HopfSuperAlgebra<R> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> R {
        self.one.zero_like()
    }

    pub fn basis(&self, i: usize) -> Element<R> {
        Element::basis(i, &self.one)
    }

    /// Degree of a homogeneous element, `None` for zero or mixed degree.
    pub fn degree_of(&self, x: &Element<R>) -> Option<i32> {
        let mut degs = x.terms().keys().map(|&i| self.degrees[i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn product(&self, x: &Element<R>, y: &Element<R>) -> Element<R> {
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a.mul(b);
                for (k, c) in self.mult[*i][*j].terms() {
                    out.add_term(*k, ab.mul(c));
                }
            }
        }
        out
    }

    pub fn counit_of(&self, x: &Element<R>) -> R {
        let mut acc = self.zero();
        for (i, a) in x.terms() {
            acc.add_assign(&a.mul(&self.counit[*i]));
        }
        acc
    }

    pub fn integral_of(&self, x: &Element<R>) -> R {
        let mut acc = self.zero();
        for (i, a) in x.terms() {
            acc.add_assign(&a.mul(&self.integral[*i]));
        }
        acc
    }

    pub fn antipode_of(&self, x: &Element<R>) -> Element<R> {
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            out = out.add(&self.antipode[*i].scale(a));
        }
        out
    }

    pub fn coproduct(&self, x: &Element<R>) -> Tensor<R> {
        let mut out = Tensor::zero();
        for (i, a) in x.terms() {
            for (l, r, c) in &self.comult[*i] {
                out.add_term(vec![*l, *r], a.mul(c));
            }
        }
        out
    }

    /// `Δ^k`: `k = 0` gives the counit (a tensor with the empty key),
    /// `k = 1` the identity, larger `k` by left-nested iteration.
    pub fn iterated_coproduct(&self, x: &Element<R>, k: i64) -> Result<Tensor<R>, Error> {
        if k < 0 {
            return Err(Error::InvalidArgument(format!("coproduct power must be >= 0, got {}", k)));
        }
        let mut out = Tensor::zero();
        if k == 0 {
            out.add_term(Vec::new(), self.counit_of(x));
            return Ok(out);
        }
        for (i, a) in x.terms() {
            out.add_term(vec![*i], a.clone());
        }
        for _ in 1..k {
            let mut next = Tensor::zero();
            for (key, a) in out.terms() {
                for (l, r, c) in &self.comult[key[0]] {
                    let mut nk = Vec::with_capacity(key.len() + 1);
                    nk.push(*l);
                    nk.push(*r);
                    nk.extend_from_slice(&key[1..]);
                    next.add_term(nk, a.mul(c));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Product in `H ⊗ H` with the Koszul sign.
    pub fn tensor_product(&self, x: &Tensor<R>, y: &Tensor<R>) -> Tensor<R> {
        let mut out = Tensor::zero();
        for (k1, a) in x.terms() {
            for (k2, b) in y.terms() {
                let sign = koszul(self.degrees[k1[1]], self.degrees[k2[0]]);
                let coeff = a.mul(b).signed(sign);
                let left = &self.mult[k1[0]][k2[0]];
                let right = &self.mult[k1[1]][k2[1]];
                for (i, c) in left.terms() {
                    for (j, d) in right.terms() {
                        out.add_term(vec![*i, *j], coeff.mul(&c.mul(d)));
                    }
                }
            }
        }
        out
    }

    /// Koszul-signed flip `a⊗b ↦ (-1)^{|a||b|} b⊗a`.
    pub fn flip(&self, x: &Tensor<R>) -> Tensor<R> {
        let mut out = Tensor::zero();
        for (k, a) in x.terms() {
            let sign = koszul(self.degrees[k[0]], self.degrees[k[1]]);
            out.add_term(vec![k[1], k[0]], a.signed(sign));
        }
        out
    }

    pub fn element_label(&self, x: &Element<R>) -> String
    where
        R: fmt::Display,
    {
        if x.is_zero() {
            return "0".into();
        }
        x.terms().iter().map(|(i, c)| format!("({})*{}", c, self.labels[*i])).collect::<Vec<_>>().join(" + ")
    }

    /// Checks every Hopf superalgebra axiom on all basis elements.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let n = self.dim();
        let b: Vec<Element<R>> = (0..n).map(|i| self.basis(i)).collect();
        let lab = |i: usize| self.labels[i].clone();

        // grading
        let mut w = None;
        'grading: for i in 0..n {
            for j in 0..n {
                if self.mult[i][j].terms().keys().any(|&k| self.degrees[k] != self.degrees[i] + self.degrees[j]) {
                    w = Some(format!("{}·{}", lab(i), lab(j)));
                    break 'grading;
                }
            }
            if self.comult[i].iter().any(|(l, r, _)| self.degrees[*l] + self.degrees[*r] != self.degrees[i]) {
                w = Some(format!("Δ({})", lab(i)));
                break;
            }
            if self.antipode[i].terms().keys().any(|&k| self.degrees[k] != self.degrees[i]) {
                w = Some(format!("S({})", lab(i)));
                break;
            }
            if self.degrees[i] != 0 && !self.counit[i].is_zero() {
                w = Some(format!("ε({})", lab(i)));
                break;
            }
        }
        report.push("degree additivity", w);

        let mut w = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.product(&b[i], &b[j]);
                for k in 0..n {
                    let l = self.product(&ij, &b[k]);
                    let r = self.product(&b[i], &self.product(&b[j], &b[k]));
                    if l != r {
                        w = Some(format!("({}, {}, {})", lab(i), lab(j), lab(k)));
                        break 'assoc;
                    }
                }
            }
        }
        report.push("associativity", w);

        let w = (0..n)
            .find(|&i| self.product(&self.unit, &b[i]) != b[i] || self.product(&b[i], &self.unit) != b[i])
            .map(lab);
        report.push("unit", w);

        let w = (0..n)
            .find(|&i| {
                let d = self.coproduct(&b[i]);
                let mut left = Tensor::zero();
                let mut right = Tensor::zero();
                for (k, a) in d.terms() {
                    for (l, r, c) in &self.comult[k[0]] {
                        left.add_term(vec![*l, *r, k[1]], a.mul(c));
                    }
                    for (l, r, c) in &self.comult[k[1]] {
                        right.add_term(vec![k[0], *l, *r], a.mul(c));
                    }
                }
                left != right
            })
            .map(lab);
        report.push("coassociativity", w);

        let w = (0..n)
            .find(|&i| {
                let d = self.coproduct(&b[i]);
                let mut left = Element::zero();
                let mut right = Element::zero();
                for (k, a) in d.terms() {
                    left.add_term(k[1], a.mul(&self.counit[k[0]]));
                    right.add_term(k[0], a.mul(&self.counit[k[1]]));
                }
                left != b[i] || right != b[i]
            })
            .map(lab);
        report.push("counit", w);

        let mut w = None;
        let one_one = {
            let mut t = Tensor::zero();
            for (i, a) in self.unit.terms() {
                for (j, c) in self.unit.terms() {
                    t.add_term(vec![*i, *j], a.mul(c));
                }
            }
            t
        };
        if self.coproduct(&self.unit) != one_one || !self.counit_of(&self.unit).is_one() {
            w = Some("1".to_string());
        }
        'bialg: for i in 0..n {
            for j in 0..n {
                let xy = self.product(&b[i], &b[j]);
                let lhs = self.coproduct(&xy);
                let rhs = self.tensor_product(&self.coproduct(&b[i]), &self.coproduct(&b[j]));
                let eps = self.counit_of(&xy) == self.counit[i].mul(&self.counit[j]);
                if lhs != rhs || !eps {
                    w = Some(format!("({}, {})", lab(i), lab(j)));
                    break 'bialg;
                }
            }
        }
        report.push("bialgebra compatibility", w);

        let w = (0..n)
            .find(|&i| {
                let target = self.unit.scale(&self.counit[i]);
                let mut left = Element::zero();
                let mut right = Element::zero();
                for (l, r, c) in &self.comult[i] {
                    left = left.add(&self.product(&self.antipode[*l], &b[*r]).scale(c));
                    right = right.add(&self.product(&b[*l], &self.antipode[*r]).scale(c));
                }
                left != target || right != target
            })
            .map(lab);
        report.push("antipode", w);

        let w = (0..n).find(|&i| self.antipode_of(&self.antipode[i]) != b[i]).map(lab);
        report.push("involutivity S∘S = id", w);

        let w = (0..n)
            .find(|&i| {
                let target = self.cointegral.scale(&self.counit[i]);
                self.product(&self.cointegral, &b[i]) != target || self.product(&b[i], &self.cointegral) != target
            })
            .map(lab);
        report.push("two-sided cointegral", w);

        let mu_deg = self.degree_of(&self.cointegral).unwrap_or(0);
        let w = (0..n)
            .find(|&i| {
                let target = self.unit.scale(&self.integral[i]);
                let mut left = Element::zero();
                let mut right = Element::zero();
                for (l, r, c) in &self.comult[i] {
                    left.add_term(*r, c.mul(&self.integral[*l]));
                    let s = koszul(mu_deg, self.degrees[*l]);
                    right.add_term(*l, c.mul(&self.integral[*r]).signed(s));
                }
                left != target || right != target
            })
            .map(lab);
        report.push("two-sided integral", w);

        let w = (!self.integral_of(&self.cointegral).is_one()).then(|| "c".to_string());
        report.push("normalization μ(c) = 1", w);

        let sign = if odd(mu_deg) { -1 } else { 1 };
        let w = (self.antipode_of(&self.cointegral) != self.cointegral.scale(&self.one.signed(sign)))
            .then(|| "c".to_string());
        report.push("S(c) = (-1)^{|c|} c", w);

        let dc = self.coproduct(&self.cointegral);
        let w = (self.flip(&dc) != dc).then(|| "c".to_string());
        report.push("Δ(c) = Δ^op(c)", w);

        report
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Pass/fail per axiom with a failing witness where one exists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(AxiomCheck { name: name.to_string(), passed: witness.is_none(), witness });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "PASS {}", c.name)?,
                Some(w) => writeln!(f, "FAIL {} (witness {})", c.name, w)?,
            }
        }
        Ok(())
    }
}

/// Sign of a super permutation: `perm[new] = old`, and each inversion of two
/// odd factors contributes `-1`.
pub fn super_permutation_sign(degrees: &[i32], perm: &[usize]) -> i32 {
    assert_eq!(degrees.len(), perm.len(), "degree list and permutation differ in length");
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(p < perm.len() && !seen[p], "not a permutation: {:?}", perm);
        seen[p] = true;
    }
    let mut sign = 1;
    for i in 0..perm.len() {
        if !odd(degrees[perm[i]]) {
            continue;
        }
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] && odd(degrees[perm[j]]) {
                sign = -sign;
            }
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        assert_eq!(super_permutation_sign(&[0, 2, 4], &[2, 0, 1]), 1);
        assert_eq!(super_permutation_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(super_permutation_sign(&[1, 1, 1], &[1, 2, 0]), 1);
        assert_eq!(super_permutation_sign(&[1, 0, 1], &[2, 1, 0]), -1);
    }
}
