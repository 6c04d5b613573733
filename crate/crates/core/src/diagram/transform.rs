//! Reorderings and reorientations of a diagram used by the covariance checks.

use std::collections::HashSet;

use super::HeegaardDatum;
use crate::grouprings::{Letter, Word};
use crate::Error;

impl HeegaardDatum {
    /// Moves the basepoint of β_j before entry `new_pos` and returns the word
    /// of the β-arc traversed, from the old basepoint to the new one.
    pub fn move_basepoint(&self, j: usize, new_pos: usize) -> Result<(HeegaardDatum, Word), Error> {
        let table = self.crossings()?;
        let b = self.beta.get(j).ok_or_else(|| Error::InvalidArgument(format!("no beta curve {}", j)))?;
        let len = b.crossings.len();
        if (len == 0 && new_pos != 0) || (len > 0 && new_pos >= len) {
            return Err(Error::InvalidArgument(format!("basepoint index {} out of range", new_pos)));
        }
        let mut letters = Vec::new();
        let mut p = b.basepoint_index;
        while p != new_pos {
            let (id, s) = &b.crossings[p];
            letters.push(Letter::new(self.generator_index(table[id].alpha), *s));
            p = (p + 1) % len;
        }
        let mut out = self.clone();
        out.beta[j].basepoint_index = new_pos;
        Ok((out, Word::from_letters(letters)))
    }

    fn flip_signs(&mut self, ids: &HashSet<String>) {
        for b in &mut self.beta {
            for (x, s) in &mut b.crossings {
                if ids.contains(x) {
                    *s = -*s;
                }
            }
        }
    }

    /// Reverses closed α_i: its traversal order and all its crossing signs.
    pub fn reverse_alpha(&self, i: usize) -> Result<HeegaardDatum, Error> {
        self.crossings()?;
        let mut out = self.clone();
        let curve =
            out.alpha_closed.get_mut(i).ok_or_else(|| Error::InvalidArgument(format!("no closed alpha {}", i)))?;
        curve.crossings.reverse();
        let ids: HashSet<String> = curve.crossings.iter().cloned().collect();
        out.flip_signs(&ids);
        Ok(out)
    }

    /// Reverses β_j keeping its basepoint on the same edge, and flips the
    /// signs of its crossings.
    pub fn reverse_beta(&self, j: usize) -> Result<HeegaardDatum, Error> {
        self.crossings()?;
        let mut out = self.clone();
        let b = out.beta.get_mut(j).ok_or_else(|| Error::InvalidArgument(format!("no beta curve {}", j)))?;
        let len = b.crossings.len();
        b.crossings.reverse();
        for (_, s) in &mut b.crossings {
            *s = -*s;
        }
        if len > 0 {
            b.basepoint_index = (len - b.basepoint_index) % len;
        }
        Ok(out)
    }

    /// Exchanges closed α-curves `i` and `k` in the ordering.
    pub fn swap_alpha(&self, i: usize, k: usize) -> Result<HeegaardDatum, Error> {
        if i >= self.d() || k >= self.d() {
            return Err(Error::InvalidArgument(format!("cannot swap alpha {} and {}", i, k)));
        }
        let mut out = self.clone();
        out.alpha_closed.swap(i, k);
        Ok(out)
    }

    /// Exchanges β-curves `i` and `k` in the ordering.
    pub fn swap_beta(&self, i: usize, k: usize) -> Result<HeegaardDatum, Error> {
        if i >= self.beta.len() || k >= self.beta.len() {
            return Err(Error::InvalidArgument(format!("cannot swap beta {} and {}", i, k)));
        }
        let mut out = self.clone();
        out.beta.swap(i, k);
        Ok(out)
    }
}
