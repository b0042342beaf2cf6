use std::path::PathBuf;
use std::process::{Command, Output};

use chernhodge::invariants::PoincarePoly;
use chernhodge::{ChernPoly, Report};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chernhodge"))
        .args(args)
        .env_remove("CHERNHODGE_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

#[test]
fn kclass_outputs() {
    let o = run(&["kclass", "--n", "6", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1/12)*c1*c5 + (13/4)*c6"));

    let o = run(&["kclass", "--n", "4", "--k", "0", "--format", "json"]);
    assert_eq!(json(&o)["class"], "c4");

    let o = run(&["kclass", "--n", "2", "--k", "2"]);
    assert!(stdout(&o).contains("(1/12)*c1^2 + (1/12)*c2"));

    let o = run(&["kclass", "--n", "6", "--k", "2", "--format", "latex"]);
    assert!(stdout(&o).contains(r"\frac{1}{12}c_{1}c_{5} + \frac{13}{4}c_{6}"));

    let o = run(&["kclass", "--n", "6", "--k", "4", "--subst", "c1=0", "--verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["class"], "-(1/240)*c3^2 + (1/240)*c2*c4 + (31/120)*c6");
    assert!(v["report"]["checks"].as_array().unwrap().len() >= 3);
}

#[test]
fn kclass_rejects_bad_arguments() {
    assert_eq!(run(&["kclass", "--n", "3", "--k", "4"]).status.code(), Some(2));
    assert_eq!(run(&["kclass", "--n", "11", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["kclass", "--n", "3", "--k", "1", "--subst", "c2=0"]).status.code(), Some(2));
    assert_eq!(run(&["kclass", "--n", "x", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn hilbert_and_symmetric_products() {
    let o = run(&["hilb", "--surface", "k3", "--m", "2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["betti"], serde_json::json!([1, 0, 23, 0, 276, 0, 23, 0, 1]));
    assert_eq!(v["euler"], 324);
    assert_eq!(v["Phi"], "0");

    let o = run(&["hilb", "--surface", "k3", "--m", "8", "--format", "json"]);
    assert_eq!(json(&o)["euler"], 30178575);

    let o = run(&["sym", "--surface", "k3", "--m", "2", "--format", "json"]);
    assert_eq!(json(&o)["betti"], serde_json::json!([1, 0, 22, 0, 254, 0, 22, 0, 1]));

    let o = run(&["hilb", "--surface", &data("cp2.json"), "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("phi"));

    assert_eq!(run(&["hilb", "--surface", "k3", "--m", "13"]).status.code(), Some(2));
    assert_eq!(run(&["hilb", "--surface", "mars", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "lemmas", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = run(&["verify", "--suite", "moduli", "--g-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("WARN")).count(), 1);
    assert!(!out.lines().any(|l| l.starts_with("FAIL")));

    let o = run(&["verify", "--suite", "holonomy", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status,name,anchor,detail"));

    assert_eq!(run(&["verify", "--suite", "lemmas", "--n-max", "11"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_reports_round_trip_as_json() {
    let o = run(&["verify", "--suite", "theorems", "--n-max", "5", "--format", "json"]);
    let v = json(&o);
    let report: Report = serde_json::from_value(v["report"].clone()).unwrap();
    assert!(report.ok());
    assert_eq!(serde_json::to_value(&report).unwrap(), v["report"]);
}

#[test]
fn fixture_directory_override() {
    let dir = std::env::temp_dir().join(format!("chernhodge-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = include_str!("../fixtures/reference.toml").replace("euler = 108", "euler = 107");
    std::fs::write(dir.join("reference.toml"), text).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_chernhodge"))
        .args(["verify", "--suite", "hilbert", "--m-max", "1"])
        .env("CHERNHODGE_FIXTURES", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  e(K_2) = 108"));
    let o = run(&["verify", "--suite", "hilbert", "--m-max", "1", "--fixtures", dir.join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn invariants_from_files() {
    let o = run(&["invariants", "--betti", &data("spin7_joyce.json"), "--b4-minus", "43"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().any(|l| l.starts_with("Phi ") && l.trim_end().ends_with(" 0")));

    let o = run(&["invariants", "--qk", &data("gr2_c9.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["constraint"], "0");

    let o = run(&["invariants", "--chern", &data("quintic.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["chi"], serde_json::json!([0, 100, -100, 0]));

    let o = run(&["invariants", "--hodge", &data("k3_hodge.json")]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["invariants", "--betti", &data("cp2.json"), "--holonomy", "hk"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invariants_input_errors_name_the_problem() {
    let o = run(&["invariants", "--chern", &data("bad_key.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("c5c1"));

    let o = run(&["invariants", "--betti", &data("broken_duality.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("b_1"));

    assert_eq!(run(&["invariants"]).status.code(), Some(2));
    assert_eq!(
        run(&["invariants", "--betti", &data("cp2.json"), "--qk", &data("gr2_c9.json")]).status.code(),
        Some(2)
    );
}

#[test]
fn result_types_round_trip() {
    let p = PoincarePoly::manifold(vec![1, 0, 23, 0, 276, 0, 23, 0, 1]).unwrap();
    let back: PoincarePoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(back.betti, p.betti);
    let k = chernhodge::charclass::kclass(5, 2).unwrap();
    let back: ChernPoly = serde_json::from_str(&serde_json::to_string(&k).unwrap()).unwrap();
    assert_eq!(back, k);
}
