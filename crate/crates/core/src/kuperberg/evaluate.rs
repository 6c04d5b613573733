use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::representation::{HopfRepresentation, Representation};
use crate::diagram::{HeegaardDatum, Slot};
use crate::grouprings::{abelianize, AbelianizationMap, FieldElem, LaurentPoly, Matrix, Ring};
use crate::hopf::algebra::odd;
use crate::hopf::exterior::{merge_sign, minors};
use crate::hopf::{super_permutation_sign, Element, HopfSuperAlgebra};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationOptions {
    /// Homology orientation sign `δ`; the result is multiplied by `δ^{|c|}`.
    pub sign: i32,
    /// Worker threads for the generic contraction; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Assert degree conservation on every contraction term.
    pub check_degrees: bool,
}

impl Default for EvaluationOptions {
    fn default() -> Self {
        EvaluationOptions { sign: 1, threads: None, check_degrees: cfg!(debug_assertions) }
    }
}

impl EvaluationOptions {
    pub fn with_sign(sign: i32) -> Self {
        EvaluationOptions { sign, ..Self::default() }
    }
}

fn check_sign(sign: i32) -> Result<(), Error> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("orientation sign must be +1 or -1, got {}", sign)))
    }
}

fn check_generators(datum: &HeegaardDatum, available: usize) -> Result<(), Error> {
    let needed = datum.d() + datum.l();
    if available < needed {
        return Err(Error::Representation(format!(
            "representation defines {} generators, diagram needs {}",
            available, needed
        )));
    }
    Ok(())
}

/// `Z = μ^{⊗d} m_β P (⊗ ρ(β̄_x)) S_α Δ_α (c^{⊗d})`, times `δ^{|c|}`, by full
/// expansion of the coproducts over the structure tables of `h`.
pub fn evaluate_z<R: Ring>(
    datum: &HeegaardDatum,
    h: &HopfSuperAlgebra<R>,
    rho: &HopfRepresentation<R>,
    opts: &EvaluationOptions,
) -> Result<R, Error> {
    check_sign(opts.sign)?;
    check_generators(datum, rho.generators.len())?;
    let beta_slots = datum.beta_slots()?;
    let c_deg =
        h.degree_of(&h.cointegral).ok_or_else(|| Error::InvalidArgument("cointegral is not homogeneous".into()))?;

    // slot numbering in α order
    let mut alpha_index: HashMap<&str, usize> = HashMap::new();
    let mut alpha_ranges = Vec::with_capacity(datum.d());
    for curve in &datum.alpha_closed {
        let start = alpha_index.len();
        for x in &curve.crossings {
            alpha_index.insert(x.as_str(), alpha_index.len());
        }
        alpha_ranges.push(start..alpha_index.len());
    }
    let total = alpha_index.len();
    // perm[β position] = α position
    let slots_in_beta: Vec<&Slot> = beta_slots.iter().flatten().collect();
    if slots_in_beta.len() != total {
        return Err(Error::InvalidDiagram("closed alpha crossings are not all on beta curves".into()));
    }
    let perm: Vec<usize> = slots_in_beta.iter().map(|s| alpha_index[s.id.as_str()]).collect();

    // per-slot maps ρ(β̄_x) ∘ S^{ε_x}, indexed by α position
    let mut slot_maps: Vec<Option<Vec<Element<R>>>> = vec![None; total];
    for s in &slots_in_beta {
        let phi = rho.image(&s.word);
        let images = (0..h.dim())
            .map(|b| {
                let x = h.basis(b);
                let x = if s.sign < 0 { h.antipode_of(&x) } else { x };
                phi.apply(&x)
            })
            .collect();
        slot_maps[alpha_index[s.id.as_str()]] = Some(images);
    }
    let slot_maps: Vec<Vec<Element<R>>> = slot_maps.into_iter().map(|m| m.expect("every slot mapped")).collect();

    let per_alpha: Vec<Vec<(Vec<usize>, R)>> = alpha_ranges
        .iter()
        .map(|r| {
            h.iterated_coproduct(&h.cointegral, r.len() as i64)
                .map(|t| t.terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect())
        })
        .collect::<Result<_, _>>()?;
    if per_alpha.iter().any(|t| t.is_empty()) {
        return Ok(h.zero());
    }

    let beta_lengths: Vec<usize> = beta_slots.iter().map(|b| b.len()).collect();
    let d = datum.d();
    let term_count: usize = per_alpha.iter().map(|t| t.len()).product();
    let radices: Vec<usize> = per_alpha.iter().map(|t| t.len()).collect();

    let evaluate_term = |idx: usize| -> R {
        let mut rest = idx;
        let mut keys = Vec::with_capacity(total);
        let mut coeff = h.one.clone();
        for (t, &radix) in per_alpha.iter().zip(&radices) {
            let (k, c) = &t[rest % radix];
            rest /= radix;
            keys.extend_from_slice(k);
            coeff = coeff.mul(c);
        }
        let degrees: Vec<i32> = keys.iter().map(|&k| h.degrees[k]).collect();
        if opts.check_degrees {
            let sum: i32 = degrees.iter().sum();
            assert_eq!(sum, c_deg * d as i32, "degree not conserved in contraction term");
        }
        let mut value = coeff.signed(super_permutation_sign(&degrees, &perm));
        let mut pos = 0;
        for &len in &beta_lengths {
            let mut acc = h.unit.clone();
            for &a in &perm[pos..pos + len] {
                let image = &slot_maps[a][keys[a]];
                acc = h.product(&acc, image);
                if acc.is_zero() {
                    return h.zero();
                }
            }
            pos += len;
            value = value.mul(&h.integral_of(&acc));
            if value.is_zero() {
                return value;
            }
        }
        value
    };

    let run = || -> R {
        let values: Vec<R> = (0..term_count).into_par_iter().map(evaluate_term).collect();
        let mut acc = h.zero();
        for v in &values {
            acc.add_assign(v);
        }
        acc
    };
    let z = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {}", e)))?
            .install(run),
        None => run(),
    };
    Ok(if opts.sign < 0 && odd(c_deg) { z.neg() } else { z })
}

/// `Z` over `Λ(V)`, `dim V = n`, by a sweep along the β-curves that tracks
/// which generators of each `Δ(c)` have been placed.
///
/// `slot_matrix` gives the matrix acting at a slot; the result is the same as
/// [`evaluate_z`] over the exterior algebra.
pub fn contract_exterior<R: Ring>(
    datum: &HeegaardDatum,
    n: usize,
    one: &R,
    sign: i32,
    mut slot_matrix: impl FnMut(&Slot) -> Matrix<R>,
) -> Result<R, Error> {
    check_sign(sign)?;
    let d = datum.d();
    if d * n > 64 {
        return Err(Error::InvalidArgument("too many curves for the exterior sweep".into()));
    }
    let beta_slots = datum.beta_slots()?;
    let full = (1usize << n) - 1;
    let alpha_full: u64 = if d * n == 64 { u64::MAX } else { (1u64 << (d * n)) - 1 };
    let dim = 1usize << n;

    let mut states: BTreeMap<(u64, usize), R> = BTreeMap::new();
    states.insert((0, 0), one.clone());
    for slots in &beta_slots {
        for s in slots {
            let minors = minors(&slot_matrix(s), one);
            let i = s.alpha;
            let shift = i * n;
            let eps = u32::from(s.sign < 0);
            let mut next: BTreeMap<(u64, usize), R> = BTreeMap::new();
            for ((am, bm), value) in &states {
                let placed = ((am >> shift) as usize) & full;
                let higher = if (i + 1) * n >= 64 { 0 } else { (am >> ((i + 1) * n)).count_ones() };
                let free = full & !placed;
                // every subset of the unplaced generators of α_i
                let mut sub = free;
                loop {
                    let size = sub.count_ones();
                    let mut inv = eps * size;
                    let mut rest = sub;
                    while rest != 0 {
                        let v = rest.trailing_zeros();
                        inv += higher + (placed >> (v + 1)).count_ones();
                        rest &= rest - 1;
                    }
                    let base = value.signed(if inv % 2 == 0 { 1 } else { -1 });
                    for j in 0..dim {
                        if j.count_ones() != size {
                            continue;
                        }
                        let Some(ms) = merge_sign(*bm, j) else { continue };
                        let minor = &minors[j][sub];
                        if minor.is_zero() {
                            continue;
                        }
                        let key = (am | ((sub as u64) << shift), bm | j);
                        let term = base.mul(minor).signed(ms);
                        match next.get_mut(&key) {
                            Some(v) => v.add_assign(&term),
                            None => {
                                next.insert(key, term);
                            }
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & free;
                }
            }
            states = next;
        }
        // μ on this β-curve: only the top-degree part survives
        states = states
            .into_iter()
            .filter(|((_, bm), v)| *bm == full && !v.is_zero())
            .map(|((am, _), v)| ((am, 0), v))
            .collect();
    }
    let z = states.remove(&(alpha_full, 0)).unwrap_or_else(|| one.zero_like());
    Ok(if sign < 0 && n % 2 == 1 { z.neg() } else { z })
}

/// Untwisted `Z` over `Λ(V)` for a matrix representation.
pub fn evaluate_z_exterior(
    datum: &HeegaardDatum,
    rep: &Representation,
    opts: &EvaluationOptions,
) -> Result<FieldElem, Error> {
    check_generators(datum, rep.num_generators())?;
    let one = rep.field().one();
    contract_exterior(datum, rep.dimension(), &one, opts.sign, |s| rep.image(&s.word))
}

/// `Z` over `Λ(V) ⊗ K[Z^b]` with slot automorphisms `Λ(ρ(β̄_x)) ⊗ h(β̄_x)`.
pub fn evaluate_z_twisted_with(
    datum: &HeegaardDatum,
    rep: &Representation,
    h: &AbelianizationMap,
    opts: &EvaluationOptions,
) -> Result<LaurentPoly, Error> {
    check_generators(datum, rep.num_generators())?;
    let one = LaurentPoly::one(rep.field(), h.rank);
    contract_exterior(datum, rep.dimension(), &one, opts.sign, |s| rep.twisted_image(&s.word, h))
}

/// Twisted `Z`, with `h` the abelianization of the diagram's presentation.
pub fn evaluate_z_twisted(
    datum: &HeegaardDatum,
    rep: &Representation,
    opts: &EvaluationOptions,
) -> Result<(LaurentPoly, AbelianizationMap), Error> {
    let p = datum.presentation()?;
    let h = abelianize(p.num_generators(), &p.relators);
    let z = evaluate_z_twisted_with(datum, rep, &h, opts)?;
    Ok((z, h))
}
