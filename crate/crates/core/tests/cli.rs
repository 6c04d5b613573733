use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_suture-kup")).args(args).env_remove("SUTURE_KUP_SEED").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn kuperberg_trefoil_prints_raw_value() {
    assert_eq!(stdout(&["kuperberg", &path("trefoil.json"), "--hopf", "exterior:1", "--twisted"]), "t^-1 - 1 + t\n");
    assert_eq!(stdout(&["kuperberg", &path("trefoil.json"), "--twisted", "--normalize"]), "1 - t + t^2\n");
    assert_eq!(stdout(&["kuperberg", &path("trefoil.json"), "--twisted", "--sign", "-1"]), "-t^-1 + 1 - t\n");
}

#[test]
fn output_is_independent_of_method_and_threads() {
    let base = stdout(&[
        "kuperberg",
        &path("figure8.json"),
        "--hopf",
        "exterior:2",
        "--rep",
        &path("rational_rep2.json"),
        "--twisted",
    ]);
    for threads in ["1", "4"] {
        let other = stdout(&[
            "kuperberg",
            &path("figure8.json"),
            "--hopf",
            "exterior:2",
            "--rep",
            &path("rational_rep2.json"),
            "--twisted",
            "--method",
            "expand",
            "--threads",
            threads,
        ]);
        assert_eq!(other, base);
    }
}

#[test]
fn crosscheck_passes_with_rational_representation() {
    let out =
        stdout(&["crosscheck", &path("figure8.json"), "--hopf", "exterior:2", "--rep", &path("rational_rep2.json")]);
    assert!(out.ends_with("PASS\n"), "{}", out);
}

#[test]
fn axioms_pass_for_rank_three() {
    let out = stdout(&["axioms", "--hopf", "exterior:3"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{}", out);
}

#[test]
fn alexander_and_homology_of_wirtinger_presentation() {
    assert_eq!(stdout(&["alexander", &path("figure8_wirtinger.json")]), "1 - 3*t + t^2\n");
    assert_eq!(stdout(&["homology", &path("figure8_wirtinger.json")]), "rank: 1\ntorsion: []\nx -> (1)\ny -> (1)\n");
}

#[test]
fn twisted_alexander_reports_quotient() {
    let out = stdout(&["twisted-alexander", &path("figure8.json"), &path("figure8_sl2.json")]);
    assert!(out.contains("quotient: 1 - 4*t + t^2\n"), "{}", out);
}

#[test]
fn presentation_and_validate() {
    let out = stdout(&["presentation", &path("trefoil.json")]);
    assert!(out.contains("relator 0: a*alpha*a^-1*alpha^-1*a^-1*alpha"));
    assert!(stdout(&["validate", &path("trefoil.json")]).starts_with("valid\n"));
}

#[test]
fn random_diagram_uses_seed_variable() {
    let a = Command::new(env!("CARGO_BIN_EXE_suture-kup"))
        .args(["random-diagram", "--d", "2"])
        .env("SUTURE_KUP_SEED", "17")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(String::from_utf8(a.stdout).unwrap(), stdout(&["random-diagram", "--d", "2", "--seed", "17"]));
}

#[test]
fn failures_exit_nonzero() {
    assert_eq!(run(&["kuperberg", "missing.json"]).status.code(), Some(2));
    assert_eq!(run(&["axioms", "--hopf", "group:2"]).status.code(), Some(2));
    let mismatch =
        run(&["kuperberg", &path("trefoil.json"), "--hopf", "exterior:1", "--rep", &path("rational_rep2.json")]);
    assert_eq!(mismatch.status.code(), Some(2));
    let broken = std::env::temp_dir().join("suture_kup_broken.json");
    std::fs::write(&broken, r#"{"alpha_closed":[{"name":"a","crossings":["x"]}],"arcs":[],"beta":[]}"#).unwrap();
    assert_eq!(run(&["validate", &broken.display().to_string()]).status.code(), Some(1));
}
