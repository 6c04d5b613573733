mod common;

use std::path::Path;

use common::*;
use suture_kup::cli::{load_input, load_representation};
use suture_kup::diagram::{random_datum, Presentation};
use suture_kup::grouprings::{abelianize, Matrix, Ring, Word};
use suture_kup::kuperberg::{evaluate_z_twisted, EvaluationOptions, Representation};
use suture_kup::torsion::{alexander_polynomial, crosscheck, twisted_alexander_knot, twisted_torsion};

fn fixture_path(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn alexander_of(name: &str) -> String {
    let p = load_input(&fixture_path(name)).unwrap().presentation().unwrap();
    alexander_polynomial(&p).unwrap().0.normalized.to_string()
}

#[test]
fn alexander_polynomials_of_fixtures() {
    assert_eq!(alexander_of("trefoil.json"), "1 - t + t^2");
    assert_eq!(alexander_of("figure8.json"), "1 - 3*t + t^2");
    assert_eq!(alexander_of("figure8_wirtinger.json"), "1 - 3*t + t^2");
}

#[test]
fn trivial_boundary_factor_for_trefoil() {
    let d = fixture("trefoil.json");
    let p = d.presentation().unwrap();
    let h = homology(&d);
    let rep = Representation::trivial(&rationals(), 1, 2);
    let meridian = Word::generator(1);
    let a = twisted_alexander_knot(&p, &rep, &h, &meridian).unwrap();
    assert_eq!(a.torsion.normalized.to_string(), "1 - t + t^2");
    assert_eq!(a.boundary_factor.normalize_unit().to_string(), "1 - t");
    // t - 1 does not divide 1 - t + t^2
    assert_eq!(a.quotient, None);
}

fn sl2_knot(
    diagram: &str,
    rep: &str,
) -> (Presentation, Representation, suture_kup::grouprings::AbelianizationMap, Word) {
    let d = fixture(diagram);
    let p = d.presentation().unwrap();
    let file = load_representation(&fixture_path(rep)).unwrap();
    let r = file.representation(&p.generator_names).unwrap();
    assert!(r.relator_defects(&p.relators).is_empty());
    let h = abelianize(p.num_generators(), &p.relators);
    let m = Word::parse(file.meridian.as_deref().unwrap(), &p.generator_names).unwrap();
    (p, r, h, m)
}

#[test]
fn parabolic_trefoil_over_cyclotomic_field() {
    let (p, r, h, m) = sl2_knot("trefoil.json", "trefoil_sl2.json");
    assert_eq!(r.field().degree(), 2);
    let a = twisted_alexander_knot(&p, &r, &h, &m).unwrap();
    assert_eq!(a.quotient.unwrap().to_string(), "1 + t^2");
    let report = crosscheck(&fixture("trefoil.json"), &r, true).unwrap();
    assert!(report.passed, "{}", report);
}

#[test]
fn holonomy_of_figure_eight() {
    let (p, r, h, m) = sl2_knot("figure8.json", "figure8_sl2.json");
    let a = twisted_alexander_knot(&p, &r, &h, &m).unwrap();
    assert_eq!(a.quotient.unwrap().to_string(), "1 - 4*t + t^2");
    assert!(crosscheck(&fixture("figure8.json"), &r, true).unwrap().passed);
}

#[test]
fn crosscheck_on_fixtures() {
    let k = rationals();
    for name in ["trefoil.json", "figure8.json"] {
        let d = fixture(name);
        for n in 1..=2 {
            let mut r = rng(40 + n as u64);
            let rep = random_representation(&mut r, &k, n, 2);
            for twisted in [false, true] {
                let report = crosscheck(&d, &rep, twisted).unwrap();
                assert!(report.passed, "{} n={} twisted={}\n{}", name, n, twisted, report);
            }
        }
    }
}

#[test]
fn torsion_agrees_with_kuperberg_up_to_unit() {
    let d = fixture("trefoil.json");
    let p = d.presentation().unwrap();
    let rep = Representation::trivial(&rationals(), 1, 2);
    let (z, h) = evaluate_z_twisted(&d, &rep, &EvaluationOptions::default()).unwrap();
    let t = twisted_torsion(&p, &rep, &h).unwrap();
    assert!(t.raw.eq_up_to_unit(&z));
}

#[test]
fn torsion_class_survives_relator_moves() {
    let k = rationals();
    let mut checked = 0;
    for seed in 0..40u64 {
        let d = random_datum(seed, 2, 1, 5);
        let p = d.presentation().unwrap();
        let h = abelianize(p.num_generators(), &p.relators);
        let mut r = rng(seed);
        let rep = abelian_representation(&mut r, &k, 2, &h);
        let base = twisted_torsion(&p, &rep, &h).unwrap().raw;
        if base.is_zero() {
            continue;
        }
        checked += 1;
        let with = |relators: Vec<Word>| {
            let q = Presentation { relators, ..p.clone() };
            twisted_torsion(&q, &rep, &h).unwrap().raw
        };
        let swapped = with(vec![p.relators[1].clone(), p.relators[0].clone()]);
        assert!(swapped.eq_up_to_unit(&base));
        let w = Word::from_pairs(&[(2, 1), (0, -1)]);
        let conj = with(vec![w.multiply(&p.relators[0]).multiply(&w.inverse()), p.relators[1].clone()]);
        assert_eq!(conj, base.mul(&rep.r_of_word_twisted(&w.inverse(), &h)));
        let inverted = with(vec![p.relators[0].inverse(), p.relators[1].clone()]);
        assert!(inverted.eq_up_to_unit(&base));
    }
    assert!(checked >= 10, "only {} nondegenerate samples", checked);
}

#[test]
fn inverse_transpose_is_an_involution() {
    let mut r = rng(3);
    let rep = random_representation(&mut r, &rationals(), 3, 2);
    assert_eq!(rep.inverse_transpose().inverse_transpose(), rep);
}

#[test]
fn singular_generator_is_rejected() {
    let k = rationals();
    let m = Matrix::from_rows(vec![vec![k.one(), k.one()], vec![k.one(), k.one()]]);
    assert!(Representation::new(k.clone(), 2, vec![m]).is_err());
}

#[test]
fn non_square_presentation_is_rejected() {
    let k = rationals();
    let p = Presentation {
        generator_names: vec!["g".into(), "h".into()],
        closed_count: 2,
        relators: vec![Word::generator(0)],
    };
    let h = abelianize(2, &p.relators);
    assert!(twisted_torsion(&p, &Representation::trivial(&k, 1, 2), &h).is_err());
}
