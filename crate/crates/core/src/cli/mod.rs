//! File formats and command implementations behind the `suture-kup` binary.
//!
//! Every command returns its full stdout text and a success flag, so the
//! binary only prints and picks an exit code.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagram::{random_datum, HeegaardDatum, Presentation};
use crate::grouprings::{abelianize, AbelianizationMap, FieldElem, Matrix, NumberField, Word};
use crate::hopf::exterior_algebra;
use crate::kuperberg::{evaluate_z, evaluate_z_exterior, evaluate_z_twisted_with, EvaluationOptions, Representation};
use crate::torsion::{alexander_polynomial, crosscheck, twisted_alexander_knot};
use crate::{Error, Result};

/// Environment variable read by `random-diagram` when no seed is given.
pub const SEED_ENV: &str = "SUTURE_KUP_SEED";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, success: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    /// Monic integer minimal polynomial, constant term first.
    pub min_poly: Vec<i64>,
    pub dimension: usize,
    /// Row-major matrices of field-element strings such as `"1/2 - x"`.
    pub generators: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meridian: Option<String>,
}

impl RepresentationFile {
    pub fn field(&self) -> Result<Arc<NumberField>> {
        NumberField::from_i64(&self.min_poly)
    }

    /// Matrices in the order of `names`; every name must be present.
    pub fn representation(&self, names: &[String]) -> Result<Representation> {
        let field = self.field()?;
        let n = self.dimension;
        let mut mats = Vec::with_capacity(names.len());
        for name in names {
            let rows = self
                .generators
                .get(name)
                .ok_or_else(|| Error::Representation(format!("no matrix for generator {:?}", name)))?;
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension(format!("matrix of {:?} is not {}x{}", name, n, n)));
            }
            let parsed = rows
                .iter()
                .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<FieldElem>>>())
                .collect::<Result<Vec<_>>>()?;
            mats.push(Matrix::from_rows(parsed));
        }
        Representation::new(field, n, mats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub closed_count: usize,
    pub relators: Vec<String>,
}

impl PresentationFile {
    pub fn presentation(&self) -> Result<Presentation> {
        if self.closed_count > self.generators.len() {
            return Err(Error::InvalidArgument(format!(
                "closed_count {} exceeds {} generators",
                self.closed_count,
                self.generators.len()
            )));
        }
        let relators = self.relators.iter().map(|r| Word::parse(r, &self.generators)).collect::<Result<_>>()?;
        Ok(Presentation { generator_names: self.generators.clone(), closed_count: self.closed_count, relators })
    }
}

/// A diagram or a bare presentation, told apart by the `relators` key.
#[derive(Debug, Clone)]
pub enum Input {
    Diagram(HeegaardDatum),
    Presentation(Presentation),
}

impl Input {
    pub fn presentation(&self) -> Result<Presentation> {
        match self {
            Input::Diagram(d) => d.presentation(),
            Input::Presentation(p) => Ok(p.clone()),
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))
}

fn from_value<T: serde::de::DeserializeOwned>(path: &Path, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))
}

pub fn load_diagram(path: &Path) -> Result<HeegaardDatum> {
    from_value(path, read_json(path)?)
}

pub fn load_representation(path: &Path) -> Result<RepresentationFile> {
    from_value(path, read_json(path)?)
}

pub fn load_input(path: &Path) -> Result<Input> {
    let v = read_json(path)?;
    if v.get("relators").is_some() {
        let file: PresentationFile = from_value(path, v)?;
        Ok(Input::Presentation(file.presentation()?))
    } else {
        Ok(Input::Diagram(from_value(path, v)?))
    }
}

/// Pretty JSON with sorted keys.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json's default map is ordered, so a round trip through Value sorts keys
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses `exterior:n`.
pub fn parse_hopf(name: &str) -> Result<usize> {
    let bad = || Error::InvalidArgument(format!("unsupported Hopf algebra {:?}; expected exterior:n", name));
    let n = name.strip_prefix("exterior:").ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?;
    if n == 0 || n > 8 {
        return Err(Error::InvalidArgument(format!("exterior algebra rank must be in 1..=8, got {}", n)));
    }
    Ok(n)
}

fn representation_for(rep: Option<&Path>, names: &[String], n: usize) -> Result<Representation> {
    match rep {
        None => Ok(Representation::trivial(&NumberField::rationals(), n, names.len())),
        Some(path) => {
            let r = load_representation(path)?.representation(names)?;
            if r.dimension() != n {
                return Err(Error::Dimension(format!(
                    "representation has dimension {}, Hopf algebra needs {}",
                    r.dimension(),
                    n
                )));
            }
            Ok(r)
        }
    }
}

fn homology_text(h: &AbelianizationMap, names: &[String]) -> String {
    let mut out = format!("rank: {}\n", h.rank);
    let tors: Vec<String> = h.torsion_invariants.iter().map(|t| t.to_string()).collect();
    out.push_str(&format!("torsion: [{}]\n", tors.join(", ")));
    for (name, img) in names.iter().zip(&h.gen_images) {
        let parts: Vec<String> = img.0.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{} -> ({})\n", name, parts.join(", ")));
    }
    out
}

pub fn cmd_validate(diagram: &Path) -> Result<Outcome> {
    let d = load_diagram(diagram)?;
    let report = d.validate();
    let mut text = report.to_string();
    let mut success = report.is_valid();
    if success {
        let fox = d.fox_consistency()?;
        text.push_str(&format!("fox consistency: {}\n", if fox { "ok" } else { "failed" }));
        success = fox;
    }
    Ok(Outcome { text, success })
}

pub fn cmd_presentation(diagram: &Path) -> Result<Outcome> {
    Ok(Outcome::ok(load_diagram(diagram)?.presentation()?.to_string()))
}

pub fn cmd_homology(input: &Path) -> Result<Outcome> {
    let p = load_input(input)?.presentation()?;
    let h = abelianize(p.num_generators(), &p.relators);
    Ok(Outcome::ok(homology_text(&h, &p.generator_names)))
}

pub fn cmd_alexander(input: &Path) -> Result<Outcome> {
    let p = load_input(input)?.presentation()?;
    let (t, _) = alexander_polynomial(&p)?;
    Ok(Outcome::ok(format!("{}\n", t.normalized)))
}

pub fn cmd_twisted_alexander(input: &Path, rep: &Path) -> Result<Outcome> {
    let p = load_input(input)?.presentation()?;
    let file = load_representation(rep)?;
    let r = file.representation(&p.generator_names)?;
    let h = abelianize(p.num_generators(), &p.relators);
    let mut text = String::new();
    let defects = r.relator_defects(&p.relators);
    if !defects.is_empty() {
        text.push_str(&format!("warning: relators {:?} are not sent to the identity\n", defects));
    }
    match &file.meridian {
        None => {
            let t = crate::torsion::twisted_torsion(&p, &r, &h)?;
            text.push_str(&format!("torsion: {}\nnormalized: {}\n", t.raw, t.normalized));
        }
        Some(m) => {
            let meridian = Word::parse(m, &p.generator_names)?;
            let a = twisted_alexander_knot(&p, &r, &h, &meridian)?;
            text.push_str(&format!(
                "torsion: {}\nnormalized: {}\nboundary factor: {}\n",
                a.torsion.raw, a.torsion.normalized, a.boundary_factor
            ));
            match a.quotient {
                Some(q) => text.push_str(&format!("quotient: {}\n", q)),
                None => text.push_str("quotient: not exact\n"),
            }
        }
    }
    Ok(Outcome::ok(text))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Sweep along β-curves tracking placed exterior generators.
    #[default]
    Sweep,
    /// Full expansion of the coproducts over the structure tables.
    Expand,
}

#[derive(Debug, Clone)]
pub struct KuperbergArgs<'a> {
    pub diagram: &'a Path,
    pub n: usize,
    pub rep: Option<&'a Path>,
    pub twisted: bool,
    pub normalize: bool,
    pub sign: i32,
    pub threads: Option<usize>,
    pub method: Method,
}

pub fn cmd_kuperberg(args: &KuperbergArgs<'_>) -> Result<Outcome> {
    let d = load_diagram(args.diagram)?;
    let p = d.presentation()?;
    let rep = representation_for(args.rep, &p.generator_names, args.n)?;
    let opts = EvaluationOptions { sign: args.sign, threads: args.threads, check_degrees: false };
    let mut text = String::new();
    let defects = rep.relator_defects(&p.relators);
    if !defects.is_empty() {
        text.push_str(&format!("warning: relators {:?} are not sent to the identity\n", defects));
    }
    if args.twisted {
        let h = abelianize(p.num_generators(), &p.relators);
        let z = match args.method {
            Method::Sweep => evaluate_z_twisted_with(&d, &rep, &h, &opts)?,
            Method::Expand => {
                let one = crate::grouprings::LaurentPoly::one(rep.field(), h.rank);
                evaluate_z(&d, &exterior_algebra(args.n, &one), &rep.to_hopf_twisted(&h)?, &opts)?
            }
        };
        let z = if args.normalize { z.normalize_unit() } else { z };
        text.push_str(&format!("{}\n", z));
    } else {
        let z = match args.method {
            Method::Sweep => evaluate_z_exterior(&d, &rep, &opts)?,
            Method::Expand => evaluate_z(&d, &exterior_algebra(args.n, &rep.field().one()), &rep.to_hopf()?, &opts)?,
        };
        text.push_str(&format!("{}\n", z));
    }
    Ok(Outcome::ok(text))
}

pub fn cmd_crosscheck(diagram: &Path, n: usize, rep: Option<&Path>, twisted: bool) -> Result<Outcome> {
    let d = load_diagram(diagram)?;
    let p = d.presentation()?;
    let r = representation_for(rep, &p.generator_names, n)?;
    let report = crosscheck(&d, &r, twisted)?;
    Ok(Outcome { text: report.to_string(), success: report.passed })
}

pub fn cmd_axioms(n: usize) -> Result<Outcome> {
    let h = exterior_algebra(n, &NumberField::rationals().one());
    let report = h.verify_axioms();
    Ok(Outcome { text: report.to_string(), success: report.all_passed() })
}

/// Seed from the argument, else from [`SEED_ENV`], else zero.
pub fn resolve_seed(seed: Option<u64>) -> Result<u64> {
    if let Some(s) = seed {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Error::InvalidArgument(format!("{} is not an integer: {:?}", SEED_ENV, v)))
        }
        Err(_) => Ok(0),
    }
}

pub fn cmd_random_diagram(seed: Option<u64>, d: usize, l: usize, max_crossings: usize) -> Result<Outcome> {
    if d == 0 || max_crossings == 0 {
        return Err(Error::InvalidArgument("need at least one closed curve and one crossing".into()));
    }
    let datum = random_datum(resolve_seed(seed)?, d, l, max_crossings);
    Ok(Outcome::ok(format!("{}\n", canonical_json(&datum)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_spec_parsing() {
        assert_eq!(parse_hopf("exterior:3").unwrap(), 3);
        assert!(parse_hopf("exterior:0").is_err());
        assert!(parse_hopf("group:2").is_err());
        assert!(parse_hopf("exterior:x").is_err());
    }

    #[test]
    fn canonical_json_round_trip() {
        let d = crate::diagram::fixtures::trefoil();
        let text = canonical_json(&d).unwrap();
        let back: HeegaardDatum = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(canonical_json(&back).unwrap(), text);
        assert!(text.find("\"alpha_closed\"").unwrap() < text.find("\"arcs\"").unwrap());
    }

    #[test]
    fn presentation_file_rejects_unknown_generator() {
        let f = PresentationFile { generators: vec!["x".into()], closed_count: 1, relators: vec!["y".into()] };
        assert!(f.presentation().is_err());
    }
}
