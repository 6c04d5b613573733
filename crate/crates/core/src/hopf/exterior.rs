//! Exterior algebras `Λ(V)` with `V` odd and primitive, and the functor
//! `T ↦ Λ(T)`.
//!
//! Basis vectors are bitmasks: bit `k` stands for `X_{k+1}`, and a mask is the
//! ascending product of its generators.

use std::sync::Arc;

use super::algebra::HopfSuperAlgebra;
use super::automorphism::HopfAutomorphism;
use super::element::Element;
use crate::grouprings::{ExponentVector, FieldElem, LaurentPoly, Matrix, NumberField, Ring};
use crate::Error;

/// Sign of `X_a · X_b = ± X_{a|b}`, `None` when they share a generator.
pub fn merge_sign(a: usize, b: usize) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    // each generator of b moves left past the generators of a above it
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

pub fn mask_label(mask: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..usize::BITS).filter(|k| mask >> k & 1 == 1).map(|k| format!("X{}", k + 1)).collect()
}

fn mask_members(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|k| mask >> k & 1 == 1).collect()
}

/// `Λ(V)` for `dim V = n` over the base ring of `one`.
pub fn exterior_algebra<R: Ring>(n: usize, one: &R) -> HopfSuperAlgebra<R> {
    assert!(n < 16, "exterior algebra dimension too large");
    let dim = 1usize << n;
    let zero = one.zero_like();
    let full = dim - 1;
    let mult = (0..dim)
        .map(|a| {
            (0..dim)
                .map(|b| match merge_sign(a, b) {
                    Some(s) => Element::term(a | b, one.signed(s)),
                    None => Element::zero(),
                })
                .collect()
        })
        .collect();
    let comult = (0..dim)
        .map(|s| {
            // every submask a of s, with b = s \ a; sign reorders s into a-then-b
            let mut terms = Vec::new();
            let mut a = s;
            loop {
                let b = s & !a;
                let sign = merge_sign(a, b).expect("disjoint");
                terms.push((a, b, one.signed(sign)));
                if a == 0 {
                    break;
                }
                a = (a - 1) & s;
            }
            terms.reverse();
            terms
        })
        .collect();
    HopfSuperAlgebra {
        labels: (0..dim).map(mask_label).collect(),
        degrees: (0..dim).map(|m: usize| m.count_ones() as i32).collect(),
        mult,
        comult,
        unit: Element::basis(0, one),
        counit: (0..dim).map(|m| if m == 0 { one.clone() } else { zero.clone() }).collect(),
        antipode: (0..dim)
            .map(|m: usize| Element::term(m, one.signed(if m.count_ones() % 2 == 0 { 1 } else { -1 })))
            .collect(),
        cointegral: Element::basis(full, one),
        integral: (0..dim).map(|m| if m == full { one.clone() } else { zero.clone() }).collect(),
        one: one.clone(),
    }
}

/// All minors `det T[J, S]` with `|J| = |S|`, indexed `[J][S]` by masks
/// (zero where the sizes differ).
pub fn minors<R: Ring>(t: &Matrix<R>, one: &R) -> Vec<Vec<R>> {
    let n = t.rows();
    let dim = 1usize << n;
    let zero = one.zero_like();
    let mut out = vec![vec![zero; dim]; dim];
    for s in 0..dim {
        let cols = mask_members(s);
        for (j, row) in out.iter_mut().enumerate() {
            if j.count_ones() != s.count_ones() {
                continue;
            }
            let rows = mask_members(j);
            row[s] = t.select(&rows, &cols).det_or(one);
        }
    }
    out
}

/// `Λ(T)`, the multiplicative extension of `T(X_k) = Σ_l T[l][k] X_l`.
pub fn lambda_extend<R: Ring>(t: &Matrix<R>, one: &R) -> Result<HopfAutomorphism<R>, Error> {
    if !t.is_square() {
        return Err(Error::Dimension(format!("{}x{} matrix is not square", t.rows(), t.cols())));
    }
    if !t.det_or(one).is_unit() {
        return Err(Error::Singular("matrix is not invertible over the base ring".into()));
    }
    Ok(lambda_extend_unchecked(t, one))
}

/// `Λ(T)` for an arbitrary endomorphism `T`.
pub fn lambda_extend_unchecked<R: Ring>(t: &Matrix<R>, one: &R) -> HopfAutomorphism<R> {
    let m = minors(t, one);
    let dim = m.len();
    let images = (0..dim)
        .map(|s| {
            let mut e = Element::zero();
            for (j, row) in m.iter().enumerate() {
                e.add_term(j, row[s].clone());
            }
            e
        })
        .collect();
    HopfAutomorphism { images }
}

/// Entrywise embedding of a field matrix as constants of `K[Z^rank]`.
pub fn lift_to_laurent(t: &Matrix<FieldElem>, rank: usize) -> Matrix<LaurentPoly> {
    t.map(|x| LaurentPoly::constant(x.clone(), rank))
}

/// `T ⊗ t^f`: every entry scaled by the monomial `t^f`.
pub fn twisted_matrix(t: &Matrix<FieldElem>, f: &ExponentVector) -> Matrix<LaurentPoly> {
    t.map(|x| LaurentPoly::monomial(x.clone(), f.clone()))
}

/// `Λ(T) ⊗ h`: a degree-`k` monomial maps to `Λ(T)` of it times `t^{k·f}`.
pub fn twist_by_homology(
    field: &Arc<NumberField>,
    t: &Matrix<FieldElem>,
    f: &ExponentVector,
) -> Result<HopfAutomorphism<LaurentPoly>, Error> {
    let one = LaurentPoly::one(field, f.rank());
    let base = lambda_extend(&lift_to_laurent(t, f.rank()), &one)?;
    let images = base
        .images
        .iter()
        .enumerate()
        .map(|(s, img)| {
            let k = s.count_ones() as i64;
            let mono = LaurentPoly::monomial(field.one(), f.scale(k));
            img.scale(&mono)
        })
        .collect();
    Ok(HopfAutomorphism { images })
}

fn convolution<R: Ring>(
    h: &HopfSuperAlgebra<R>,
    f: &HopfAutomorphism<R>,
    g: &HopfAutomorphism<R>,
    x: &Element<R>,
) -> Element<R> {
    let mut out = Element::zero();
    for (k, a) in h.coproduct(x).terms() {
        let prod = h.product(&f.apply(&h.basis(k[0])), &g.apply(&h.basis(k[1])));
        out = out.add(&prod.scale(a));
    }
    out
}

/// `μ ∘ Λ(T) = det(T)·μ` on every basis monomial.
pub fn integral_scales_by_det<R: Ring>(t: &Matrix<R>, one: &R) -> bool {
    let h = exterior_algebra(t.rows(), one);
    let lt = lambda_extend_unchecked(t, one);
    let det = t.det_or(one);
    (0..h.dim()).all(|i| {
        let x = h.basis(i);
        h.integral_of(&lt.apply(&x)) == det.mul(&h.integral_of(&x))
    })
}

/// `Λ(T1 + T2) = m ∘ (Λ(T1) ⊗ Λ(T2)) ∘ Δ` on every basis monomial.
pub fn sum_to_convolution_holds<R: Ring>(t1: &Matrix<R>, t2: &Matrix<R>, one: &R) -> bool {
    let h = exterior_algebra(t1.rows(), one);
    let lhs = lambda_extend_unchecked(&t1.add(t2), one);
    let f = lambda_extend_unchecked(t1, one);
    let g = lambda_extend_unchecked(t2, one);
    (0..h.dim()).all(|i| {
        let x = h.basis(i);
        lhs.apply(&x) == convolution(&h, &f, &g, &x)
    })
}

/// For `T` on `V ⊕ W` with `V` spanned by the first `p` generators, checks
/// `Λ(T) = (m⊗m)(id⊗τ⊗id)(ΛT_VV ⊗ ΛT_VW ⊗ ΛT_WV ⊗ ΛT_WW)(Δ⊗Δ)` on every
/// basis monomial, where `Λ(V⊕W) ≅ Λ(V)⊗Λ(W)`.
pub fn decomposition_holds<R: Ring>(t: &Matrix<R>, p: usize, one: &R) -> bool {
    let n = t.rows();
    assert!(p <= n);
    let h = exterior_algebra(n, one);
    let zero = one.zero_like();
    let in_v = |k: usize| k < p;
    // component from `src` to `dst`, embedded in End(V ⊕ W)
    let block = |src_v: bool, dst_v: bool| {
        Matrix::from_fn(
            n,
            n,
            |l, k| {
                if in_v(k) == src_v && in_v(l) == dst_v {
                    t.get(l, k).clone()
                } else {
                    zero.clone()
                }
            },
        )
    };
    let vv = lambda_extend_unchecked(&block(true, true), one);
    let vw = lambda_extend_unchecked(&block(true, false), one);
    let wv = lambda_extend_unchecked(&block(false, true), one);
    let ww = lambda_extend_unchecked(&block(false, false), one);
    let full = lambda_extend_unchecked(t, one);
    let v_mask = (1usize << p) - 1;
    (0..h.dim()).all(|a| {
        let (av, aw) = (a & v_mask, a & !v_mask);
        let mut rhs = Element::zero();
        for (kv, cv) in h.coproduct(&h.basis(av)).terms() {
            for (kw, cw) in h.coproduct(&h.basis(aw)).terms() {
                // ΛT_VW(X_{kv[1]}) ∈ Λ(W) moves past ΛT_WV(X_{kw[0]}) ∈ Λ(V)
                let sign = if (kv[1].count_ones() * kw[0].count_ones()) % 2 == 0 { 1 } else { -1 };
                let left = h.product(&vv.apply(&h.basis(kv[0])), &wv.apply(&h.basis(kw[0])));
                let right = h.product(&vw.apply(&h.basis(kv[1])), &ww.apply(&h.basis(kw[1])));
                let term = h.product(&left, &right);
                rhs = rhs.add(&term.scale(&cv.mul(cw).signed(sign)));
            }
        }
        full.apply(&h.basis(a)) == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::automorphism::r_of;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn mat(rows: &[&[i64]]) -> Matrix<FieldElem> {
        let k = q();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| k.from_int(x)).collect()).collect())
    }

    #[test]
    fn wedge_signs() {
        let k = q();
        let h = exterior_algebra(2, &k.one());
        let x1 = h.basis(0b01);
        let x2 = h.basis(0b10);
        assert_eq!(h.product(&x1, &x2), h.basis(0b11));
        assert_eq!(h.product(&x2, &x1), h.basis(0b11).neg());
        assert!(h.product(&x1, &x1).is_zero());
        assert_eq!(h.product(&h.unit, &x1), x1);
    }

    #[test]
    fn coproduct_of_top_degree() {
        let k = q();
        let h = exterior_algebra(2, &k.one());
        let d = h.iterated_coproduct(&h.basis(0b11), 2).unwrap();
        let one = k.one();
        let expected =
            [(vec![0, 3], one.clone()), (vec![1, 2], one.clone()), (vec![2, 1], one.neg()), (vec![3, 0], one.clone())];
        assert_eq!(d.len(), 4);
        for (key, c) in expected {
            assert_eq!(d.terms().get(&key), Some(&c), "{:?}", key);
        }
        let d0 = h.iterated_coproduct(&h.basis(0b11), 0).unwrap();
        assert!(d0.is_zero());
        assert!(h.iterated_coproduct(&h.basis(1), -1).is_err());
        let prim = h.iterated_coproduct(&h.basis(1), 2).unwrap();
        assert_eq!(prim.len(), 2);
    }

    #[test]
    fn antipode_values() {
        let k = q();
        let h = exterior_algebra(3, &k.one());
        assert_eq!(h.antipode_of(&h.basis(1)), h.basis(1).neg());
        assert_eq!(h.antipode_of(&h.unit), h.unit);
        assert_eq!(h.antipode_of(&h.cointegral), h.cointegral.neg());
    }

    #[test]
    fn axioms_pass() {
        let k = q();
        for n in 1..=3 {
            let report = exterior_algebra(n, &k.one()).verify_axioms();
            assert!(report.all_passed(), "n = {}:\n{}", n, report);
        }
    }

    #[test]
    fn broken_antipode_detected() {
        let k = q();
        let mut h = exterior_algebra(1, &k.one());
        h.antipode = (0..2).map(|i| h.basis(i)).collect();
        let report = h.verify_axioms();
        let check = report.get("antipode").unwrap();
        assert!(!check.passed);
        assert_eq!(check.witness.as_deref(), Some("X1"));
    }

    #[test]
    fn wrong_cointegral_detected() {
        let k = q();
        let mut h = exterior_algebra(2, &k.one());
        h.cointegral = h.basis(0b01);
        assert!(!h.verify_axioms().get("two-sided cointegral").unwrap().passed);
    }

    #[test]
    fn lambda_of_matrices() {
        let k = q();
        let one = k.one();
        let h = exterior_algebra(2, &one);
        let id = lambda_extend(&mat(&[&[1, 0], &[0, 1]]), &one).unwrap();
        assert_eq!(id, HopfAutomorphism::identity(&h));
        let t = mat(&[&[2, 3], &[5, 7]]);
        let phi = lambda_extend(&t, &one).unwrap();
        assert_eq!(phi.apply(&h.cointegral), h.cointegral.scale(&k.from_int(-1)));
        assert_eq!(r_of(&h, &phi).unwrap(), k.from_int(-1));
        assert!(phi.is_hopf_morphism(&h));
        assert!(lambda_extend(&mat(&[&[1, 2], &[2, 4]]), &one).is_err());
    }

    #[test]
    fn homology_twist() {
        let k = q();
        let f = ExponentVector(vec![1]);
        let phi = twist_by_homology(&k, &mat(&[&[1]]), &f).unwrap();
        let one = LaurentPoly::one(&k, 1);
        let h = exterior_algebra(1, &one);
        let t = LaurentPoly::variable(&k, 1, 0);
        assert_eq!(phi.apply(&h.basis(1)), h.basis(1).scale(&t));
        let phi3 = twist_by_homology(&k, &mat(&[&[2, 1, 0], &[0, 1, 0], &[1, 0, 1]]), &f).unwrap();
        let h3 = exterior_algebra(3, &one);
        let expected = LaurentPoly::monomial(k.from_int(2), ExponentVector(vec![3]));
        assert_eq!(r_of(&h3, &phi3).unwrap(), expected);
        let zero = ExponentVector(vec![0]);
        let plain = twist_by_homology(&k, &mat(&[&[2, 1], &[1, 1]]), &zero).unwrap();
        let lifted = lambda_extend(&lift_to_laurent(&mat(&[&[2, 1], &[1, 1]]), 1), &one).unwrap();
        assert_eq!(plain, lifted);
    }

    #[test]
    fn convolution_identities() {
        let k = q();
        let one = k.one();
        let t1 = mat(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let t2 = mat(&[&[0, 1, 1], &[2, 0, 5], &[1, 1, 0]]);
        assert!(sum_to_convolution_holds(&t1, &t2, &one));
        for p in 0..=3 {
            assert!(decomposition_holds(&t1, p, &one), "p = {}", p);
        }
    }
}
