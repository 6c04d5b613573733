use std::collections::HashMap;

use super::{AlphaRef, Crossing, HeegaardDatum};
use crate::grouprings::{AbelianizationMap, ExponentVector, Letter, Word};
use crate::Error;

/// One crossing per closed α-curve (entry `i` lies on `α_i`) whose β-curves
/// are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multipoint(pub Vec<String>);

impl Multipoint {
    /// Checks the bijection onto closed α-curves and onto β-curves.
    pub fn check(&self, table: &HashMap<String, Crossing>, d: usize) -> Result<(), Error> {
        if self.0.len() != d {
            return Err(Error::InvalidArgument(format!("multipoint has {} entries, expected {}", self.0.len(), d)));
        }
        let mut betas = vec![false; d];
        for (i, x) in self.0.iter().enumerate() {
            let c = table.get(x).ok_or_else(|| Error::InvalidArgument(format!("unknown crossing {:?}", x)))?;
            if c.alpha != AlphaRef::Closed(i) {
                return Err(Error::InvalidArgument(format!("crossing {:?} is not on closed alpha {}", x, i)));
            }
            if std::mem::replace(&mut betas[c.beta], true) {
                return Err(Error::InvalidArgument(format!("beta {} is hit twice by the multipoint", c.beta)));
            }
        }
        Ok(())
    }
}

/// Every multipoint of the diagram, in lexicographic order of α positions.
pub fn enumerate_multipoints(datum: &HeegaardDatum) -> Result<Vec<Multipoint>, Error> {
    let table = datum.crossings()?;
    let d = datum.d();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn walk(
        datum: &HeegaardDatum,
        table: &HashMap<String, Crossing>,
        current: &mut Vec<String>,
        used: &mut [bool],
        out: &mut Vec<Multipoint>,
    ) {
        let i = current.len();
        if i == datum.d() {
            out.push(Multipoint(current.clone()));
            return;
        }
        for x in &datum.alpha_closed[i].crossings {
            let j = table[x].beta;
            if used[j] {
                continue;
            }
            used[j] = true;
            current.push(x.clone());
            walk(datum, table, current, used, out);
            current.pop();
            used[j] = false;
        }
    }
    walk(datum, &table, &mut current, &mut used, &mut out);
    Ok(out)
}

/// Basepoint index on each β-curve induced by a multipoint: just before a
/// positive crossing, just after a negative one.
fn induced_basepoints(datum: &HeegaardDatum, x: &Multipoint) -> Result<Vec<usize>, Error> {
    let table = datum.crossings()?;
    x.check(&table, datum.d())?;
    let mut q: Vec<usize> = datum.beta.iter().map(|b| b.basepoint_index).collect();
    for id in &x.0 {
        let c = &table[id];
        let len = datum.beta[c.beta].crossings.len();
        q[c.beta] = if c.sign > 0 { c.beta_pos } else { (c.beta_pos + 1) % len };
    }
    Ok(q)
}

pub fn basepoints_from_multipoint(datum: &HeegaardDatum, x: &Multipoint) -> Result<HeegaardDatum, Error> {
    let q = induced_basepoints(datum, x)?;
    let mut out = datum.clone();
    for (b, p) in out.beta.iter_mut().zip(q) {
        b.basepoint_index = p;
    }
    Ok(out)
}

/// Words `d̄_j` read along each β-curve from the basepoint induced by `x`
/// up to the one induced by `y`.
pub fn transition_words(datum: &HeegaardDatum, x: &Multipoint, y: &Multipoint) -> Result<Vec<Word>, Error> {
    let qx = induced_basepoints(datum, x)?;
    let qy = induced_basepoints(datum, y)?;
    let table = datum.crossings()?;
    Ok(datum
        .beta
        .iter()
        .enumerate()
        .map(|(j, b)| {
            let len = b.crossings.len();
            let mut letters = Vec::new();
            let mut p = qx[j];
            while len > 0 && p != qy[j] {
                let (id, s) = &b.crossings[p];
                letters.push(Letter::new(datum.generator_index(table[id].alpha), *s));
                p = (p + 1) % len;
            }
            Word::from_letters(letters)
        })
        .collect())
}

/// `Σ_j h(d̄_j)`, the relative class of `x` with respect to `y`.
pub fn epsilon_class(
    datum: &HeegaardDatum,
    x: &Multipoint,
    y: &Multipoint,
    h: &AbelianizationMap,
) -> Result<ExponentVector, Error> {
    let mut out = ExponentVector::zero(h.rank);
    for w in transition_words(datum, x, y)? {
        out = out.add(&h.image(&w));
    }
    Ok(out)
}
