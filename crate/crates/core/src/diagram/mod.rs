//! Combinatorial extended sutured Heegaard diagrams: ordered, oriented and
//! based curves recorded as crossing sequences.

mod multipoint;
mod random;
mod transform;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grouprings::{fox_derivative, GroupRingElement, Letter, Word};
use crate::Error;

pub use multipoint::{basepoints_from_multipoint, enumerate_multipoints, epsilon_class, transition_words, Multipoint};
pub use random::random_datum;

/// A closed α-curve or an arc, as the crossing ids met from its basepoint
/// along its orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaCurve {
    pub crossings: Vec<String>,
    pub name: String,
}

/// A β-curve as a cyclic sequence of `(crossing id, sign)`. The basepoint
/// sits just before entry `basepoint_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaCurve {
    pub basepoint_index: usize,
    pub crossings: Vec<(String, i8)>,
    pub name: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeegaardDatum {
    pub alpha_closed: Vec<AlphaCurve>,
    pub arcs: Vec<AlphaCurve>,
    pub beta: Vec<BetaCurve>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlphaRef {
    Closed(usize),
    Arc(usize),
}

/// Where a crossing sits on both sides of the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: String,
    pub alpha: AlphaRef,
    pub alpha_pos: usize,
    pub beta: usize,
    pub beta_pos: usize,
    pub sign: i8,
}

impl Crossing {
    /// `0` for a positive crossing, `1` for a negative one.
    pub fn epsilon(&self) -> u8 {
        if self.sign > 0 {
            0
        } else {
            1
        }
    }
}

/// `⟨g_0..g_{d+l-1} | r_0..r_{k-1}⟩`; the first `closed_count` generators are
/// duals of closed α-curves, the rest duals of arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_names: Vec<String>,
    pub closed_count: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generator_names.join(", "))?;
        writeln!(f, "closed: {}", self.closed_count)?;
        for (j, r) in self.relators.iter().enumerate() {
            writeln!(f, "relator {}: {}", j, r.display_with(&self.generator_names))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.errors.is_empty() {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid ({} problems)", self.errors.len())?;
        for e in &self.errors {
            writeln!(f, "  {}", e)?;
        }
        Ok(())
    }
}

/// A closed-α crossing as seen from its β-curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub id: String,
    pub alpha: usize,
    pub sign: i8,
    pub word: Word,
}

impl HeegaardDatum {
    pub fn d(&self) -> usize {
        self.alpha_closed.len()
    }

    pub fn l(&self) -> usize {
        self.arcs.len()
    }

    pub fn generator_index(&self, a: AlphaRef) -> usize {
        match a {
            AlphaRef::Closed(i) => i,
            AlphaRef::Arc(j) => self.d() + j,
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.alpha_closed.iter().chain(&self.arcs).map(|c| c.name.clone()).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut errors = Vec::new();
        if self.alpha_closed.len() != self.beta.len() {
            errors.push(format!("{} closed alpha curves but {} beta curves", self.alpha_closed.len(), self.beta.len()));
        }
        let mut names: HashMap<&str, usize> = HashMap::new();
        for c in self.alpha_closed.iter().chain(&self.arcs) {
            *names.entry(c.name.as_str()).or_default() += 1;
        }
        let mut dup_names: Vec<&str> = names.iter().filter(|(_, &k)| k > 1).map(|(n, _)| *n).collect();
        dup_names.sort();
        for n in dup_names {
            errors.push(format!("alpha name {:?} used more than once", n));
        }
        let mut alpha_side: HashMap<&str, usize> = HashMap::new();
        for c in self.alpha_closed.iter().chain(&self.arcs) {
            for x in &c.crossings {
                *alpha_side.entry(x.as_str()).or_default() += 1;
            }
        }
        let mut beta_side: HashMap<&str, usize> = HashMap::new();
        for (j, b) in self.beta.iter().enumerate() {
            for (x, s) in &b.crossings {
                *beta_side.entry(x.as_str()).or_default() += 1;
                if *s != 1 && *s != -1 {
                    errors.push(format!("crossing {:?} on beta {} has sign {}, expected +1 or -1", x, j, s));
                }
            }
            let len = b.crossings.len();
            if (len > 0 && b.basepoint_index >= len) || (len == 0 && b.basepoint_index != 0) {
                errors.push(format!(
                    "beta {} basepoint index {} out of range for {} crossings",
                    j, b.basepoint_index, len
                ));
            }
        }
        let mut ids: Vec<&str> = alpha_side.keys().chain(beta_side.keys()).copied().collect();
        ids.sort();
        ids.dedup();
        for id in ids {
            let a = alpha_side.get(id).copied().unwrap_or(0);
            let b = beta_side.get(id).copied().unwrap_or(0);
            if a != 1 {
                errors.push(format!("crossing {:?} appears {} times on the alpha side", id, a));
            }
            if b != 1 {
                errors.push(format!("crossing {:?} appears {} times on the beta side", id, b));
            }
        }
        ValidationReport { errors }
    }

    /// Crossing table keyed by id; fails on invalid data.
    pub fn crossings(&self) -> Result<HashMap<String, Crossing>, Error> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidDiagram(report.errors.join("; ")));
        }
        let mut alpha: HashMap<&str, (AlphaRef, usize)> = HashMap::new();
        for (i, c) in self.alpha_closed.iter().enumerate() {
            for (p, x) in c.crossings.iter().enumerate() {
                alpha.insert(x, (AlphaRef::Closed(i), p));
            }
        }
        for (i, c) in self.arcs.iter().enumerate() {
            for (p, x) in c.crossings.iter().enumerate() {
                alpha.insert(x, (AlphaRef::Arc(i), p));
            }
        }
        let mut out = HashMap::new();
        for (j, b) in self.beta.iter().enumerate() {
            for (p, (x, s)) in b.crossings.iter().enumerate() {
                let (a, ap) = alpha[x.as_str()];
                out.insert(
                    x.clone(),
                    Crossing { id: x.clone(), alpha: a, alpha_pos: ap, beta: j, beta_pos: p, sign: *s },
                );
            }
        }
        Ok(out)
    }

    /// Entries of β_j in traversal order from its basepoint.
    pub fn beta_traversal(&self, j: usize) -> impl Iterator<Item = &(String, i8)> + '_ {
        let b = &self.beta[j];
        let n = b.crossings.len();
        (0..n).map(move |k| &b.crossings[(b.basepoint_index + k) % n])
    }

    fn letter_of(&self, table: &HashMap<String, Crossing>, id: &str, sign: i8) -> Letter {
        Letter::new(self.generator_index(table[id].alpha), sign)
    }

    /// The word read along β_j from its basepoint.
    pub fn relator_word(&self, j: usize) -> Result<Word, Error> {
        let table = self.crossings()?;
        if j >= self.beta.len() {
            return Err(Error::InvalidArgument(format!("no beta curve {}", j)));
        }
        Ok(Word::from_letters(self.beta_traversal(j).map(|(x, s)| self.letter_of(&table, x, *s))))
    }

    /// Prefix of the relator before `x`, followed by the inverse dual letter
    /// when `x` is negative.
    pub fn beta_subword(&self, x: &str) -> Result<Word, Error> {
        let table = self.crossings()?;
        let c = table.get(x).ok_or_else(|| Error::InvalidArgument(format!("unknown crossing {:?}", x)))?;
        Ok(self.subword_with(&table, c))
    }

    fn subword_with(&self, table: &HashMap<String, Crossing>, c: &Crossing) -> Word {
        let mut letters = Vec::new();
        for (y, s) in self.beta_traversal(c.beta) {
            if *y == c.id {
                break;
            }
            letters.push(self.letter_of(table, y, *s));
        }
        if c.sign < 0 {
            letters.push(Letter::new(self.generator_index(c.alpha), -1));
        }
        Word::from_letters(letters)
    }

    pub fn presentation(&self) -> Result<Presentation, Error> {
        let relators = (0..self.beta.len()).map(|j| self.relator_word(j)).collect::<Result<_, _>>()?;
        Ok(Presentation { generator_names: self.generator_names(), closed_count: self.d(), relators })
    }

    /// Closed-α crossings of each β-curve in traversal order, with their words.
    pub fn beta_slots(&self) -> Result<Vec<Vec<Slot>>, Error> {
        let table = self.crossings()?;
        Ok((0..self.beta.len())
            .map(|j| {
                self.beta_traversal(j)
                    .filter_map(|(x, _)| {
                        let c = &table[x];
                        match c.alpha {
                            AlphaRef::Closed(i) => {
                                Some(Slot { id: x.clone(), alpha: i, sign: c.sign, word: self.subword_with(&table, c) })
                            }
                            AlphaRef::Arc(_) => None,
                        }
                    })
                    .collect()
            })
            .collect())
    }

    /// Checks `∂β̄_j/∂α*_i = Σ_{x ∈ α_i ∩ β_j} m_x β̄_x` for all `i, j`.
    pub fn fox_consistency(&self) -> Result<bool, Error> {
        let table = self.crossings()?;
        let ngen = self.d() + self.l();
        for j in 0..self.beta.len() {
            let r = self.relator_word(j)?;
            for g in 0..ngen {
                let mut expected = GroupRingElement::zero();
                for (x, _) in &self.beta[j].crossings {
                    let c = &table[x];
                    if self.generator_index(c.alpha) == g {
                        let w = GroupRingElement::from_word(self.subword_with(&table, c));
                        expected = if c.sign > 0 { expected.add(&w) } else { expected.sub(&w) };
                    }
                }
                if fox_derivative(&r, g) != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn alpha(name: &str, ids: &[&str]) -> AlphaCurve {
        AlphaCurve { name: name.into(), crossings: ids.iter().map(|s| s.to_string()).collect() }
    }

    fn beta(name: &str, entries: &[(&str, i8)], basepoint: usize) -> BetaCurve {
        BetaCurve {
            name: name.into(),
            crossings: entries.iter().map(|(s, m)| (s.to_string(), *m)).collect(),
            basepoint_index: basepoint,
        }
    }

    pub fn trefoil() -> HeegaardDatum {
        HeegaardDatum {
            alpha_closed: vec![alpha("alpha", &["x1", "x2", "x3"])],
            arcs: vec![alpha("a", &["a1", "a2", "a3"])],
            beta: vec![beta("beta", &[("a1", 1), ("x1", 1), ("a2", -1), ("x2", -1), ("a3", -1), ("x3", 1)], 0)],
        }
    }

    pub fn figure_eight() -> HeegaardDatum {
        HeegaardDatum {
            alpha_closed: vec![alpha("alpha", &["x1", "x4", "x3", "x2", "x5"])],
            arcs: vec![alpha("a", &["a1", "a2", "a3", "a4", "a5"])],
            beta: vec![beta(
                "beta",
                &[
                    ("a1", 1),
                    ("x1", 1),
                    ("a2", -1),
                    ("x2", -1),
                    ("a3", 1),
                    ("x3", 1),
                    ("a4", 1),
                    ("x4", -1),
                    ("a5", -1),
                    ("x5", 1),
                ],
                0,
            )],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn names(d: &HeegaardDatum) -> Vec<String> {
        d.generator_names()
    }

    #[test]
    fn trefoil_words() {
        let d = trefoil();
        assert!(d.validate().is_valid());
        let n = names(&d);
        assert_eq!(d.relator_word(0).unwrap().display_with(&n), "a*alpha*a^-1*alpha^-1*a^-1*alpha");
        assert_eq!(d.beta_subword("x1").unwrap().display_with(&n), "a");
        assert_eq!(d.beta_subword("x2").unwrap().display_with(&n), "a*alpha*a^-1*alpha^-1");
        assert_eq!(d.beta_subword("x3").unwrap().display_with(&n), "a*alpha*a^-1*alpha^-1*a^-1");
        assert!(d.fox_consistency().unwrap());
    }

    #[test]
    fn figure_eight_words() {
        let d = figure_eight();
        assert!(d.validate().is_valid());
        assert_eq!(
            d.relator_word(0).unwrap().display_with(&names(&d)),
            "a*alpha*a^-1*alpha^-1*a*alpha*a*alpha^-1*a^-1*alpha"
        );
        assert!(d.fox_consistency().unwrap());
    }

    #[test]
    fn invalid_data_reported() {
        let mut d = trefoil();
        d.beta.push(BetaCurve { name: "b2".into(), crossings: vec![("x1".into(), 1)], basepoint_index: 0 });
        let r = d.validate();
        assert!(!r.is_valid());
        assert!(r.errors.iter().any(|e| e.contains("\"x1\" appears 2 times on the beta side")));
        assert!(HeegaardDatum::default().validate().is_valid());
    }

    #[test]
    fn small_relators() {
        let d = HeegaardDatum {
            alpha_closed: vec![AlphaCurve { name: "alpha".into(), crossings: vec!["x".into()] }],
            arcs: vec![],
            beta: vec![BetaCurve { name: "beta".into(), crossings: vec![("x".into(), 1)], basepoint_index: 0 }],
        };
        assert_eq!(d.relator_word(0).unwrap(), Word::generator(0));
        assert!(d.beta_subword("x").unwrap().is_identity());
        let empty = HeegaardDatum {
            alpha_closed: vec![AlphaCurve { name: "alpha".into(), crossings: vec![] }],
            arcs: vec![],
            beta: vec![BetaCurve { name: "beta".into(), crossings: vec![], basepoint_index: 0 }],
        };
        assert!(empty.relator_word(0).unwrap().is_identity());
    }
}
