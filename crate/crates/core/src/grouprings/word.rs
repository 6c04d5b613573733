use std::fmt;

use crate::Error;

/// A generator raised to `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Letter { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, exponent: -self.exponent }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.exponent == -other.exponent
    }
}

/// Freely reduced word in a free group. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word { letters: vec![Letter::new(g, 1)] }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    /// Builds a word from `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Self::from_letters(pairs.iter().map(|&(g, e)| Letter::new(g, e)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Exponent sum of each generator, for `num_generators` generators.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut out = vec![0i64; num_generators];
        for l in &self.letters {
            out[l.generator] += l.exponent as i64;
        }
        out
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Renders with generator names, e.g. `a*alpha*a^-1`. Identity is `1`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = names.get(l.generator).cloned().unwrap_or_else(|| format!("g{}", l.generator));
                if l.exponent < 0 {
                    format!("{}^-1", name)
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Parses `"a*alpha^-1*a"`; `"1"` or an empty string is the identity.
    /// `^k` with any nonzero integer `k` is accepted and expanded.
    pub fn parse(s: &str, names: &[String]) -> Result<Word, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        for tok in compact.split('*') {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 =
                        e.parse().map_err(|_| Error::Parse(format!("bad exponent in word token {:?}", tok)))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            if name == "1" {
                continue;
            }
            let g = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {:?} in word {:?}", name, s)))?;
            let l = Letter::new(g, if exp < 0 { -1 } else { 1 });
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Ok(Word::from_letters(letters))
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last().map_or(false, |&last| last.cancels(l)) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}
