use super::algebra::HopfSuperAlgebra;
use super::element::Element;
use crate::grouprings::Ring;

/// Group algebra `k[Z/m]`, purely even, with `c = Σ g^i` and `μ(g^i) = δ_{i,0}`.
pub fn cyclic_group_algebra<R: Ring>(m: usize, one: &R) -> HopfSuperAlgebra<R> {
    assert!(m >= 1);
    let zero = one.zero_like();
    let delta0 = |i: usize| if i == 0 { one.clone() } else { zero.clone() };
    let mut cointegral = Element::zero();
    for i in 0..m {
        cointegral.add_term(i, one.clone());
    }
    HopfSuperAlgebra {
        labels: (0..m).map(|i| format!("g^{}", i)).collect(),
        degrees: vec![0; m],
        mult: (0..m).map(|i| (0..m).map(|j| Element::basis((i + j) % m, one)).collect()).collect(),
        comult: (0..m).map(|i| vec![(i, i, one.clone())]).collect(),
        unit: Element::basis(0, one),
        counit: vec![one.clone(); m],
        antipode: (0..m).map(|i| Element::basis((m - i) % m, one)).collect(),
        cointegral,
        integral: (0..m).map(delta0).collect(),
        one: one.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprings::Rational;
    use num_traits::One;

    #[test]
    fn cyclic_axioms() {
        for m in 1..=4 {
            let h = cyclic_group_algebra(m, &Rational::one());
            assert!(h.verify_axioms().all_passed(), "m = {}", m);
        }
    }
}
