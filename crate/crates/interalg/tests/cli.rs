use std::process::{Command, Output};

use interalg::off::read_off;
use interalg::report::ReportJson;
use interalg_core::formulas::f_signature_formula_kb;
use interalg_core::rational::{format_fraction, frac};
use serde_json::Value;

fn interalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&interalg(args))).unwrap()
}

fn error_kind(args: &[&str]) -> String {
    let out = interalg(args);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&out.stderr).expect("error is JSON");
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn three_two_all_methods() {
    let args = [
        "--a",
        "3",
        "--b",
        "2",
        "--method",
        "all",
        "--samples",
        "200000",
    ];
    let first = stdout(&interalg(&args));
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["fSignature"], "11/36");
    assert_eq!(v["hilbertKunz"], "41/18");
    assert_eq!(v["hilbertSamuel"], 4);
    assert_eq!(v["fSignatureMethod"], "both-agree");
    assert_eq!(v["oracles"].as_array().unwrap().len(), 3);
    for o in v["oracles"].as_array().unwrap() {
        assert_eq!(o["monteCarlo"]["seed"], 42);
        assert!(o["monteCarlo"]["sigmas"].as_f64().unwrap() <= 4.0);
    }
    // Same flags, same bytes.
    assert_eq!(stdout(&interalg(&args)), first);
    let parsed = ReportJson::from_json(&first).unwrap();
    assert_eq!(ReportJson::from_json(&parsed.to_json()).unwrap(), parsed);
}

#[test]
fn seed_changes_only_estimates() {
    let base = [
        "--a",
        "2",
        "--b",
        "1",
        "--method",
        "oracle",
        "--invariants",
        "fsig",
        "--samples",
        "50000",
    ];
    let v1 = json(&base);
    let mut other = base.to_vec();
    other.extend(["--seed", "7"]);
    let v2 = json(&other);
    assert_eq!(v1["fSignature"], v2["fSignature"]);
    assert_ne!(
        v1["oracles"][0]["monteCarlo"]["estimate"],
        v2["oracles"][0]["monteCarlo"]["estimate"]
    );
    assert_eq!(v1["oracles"][0]["lattice"], v2["oracles"][0]["lattice"]);
}

#[test]
fn meshes_for_one_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out");
    let v = json(&["--a", "1", "--b", "1", "--mesh", path.to_str().unwrap()]);
    assert_eq!(v["hilbertSamuel"], 2);
    assert_eq!(v["hilbertSamuelVolume"], "1/3");
    let expected = [
        ("hilbert-samuel", 1.0 / 3.0),
        ("f-signature", 2.0 / 3.0),
        ("hilbert-kunz", 4.0 / 3.0),
    ];
    let meshes = v["meshes"].as_array().unwrap();
    for ((region, vol), m) in expected.iter().zip(meshes) {
        assert_eq!(m["region"], *region);
        let text = std::fs::read_to_string(path.join(format!("{region}.off"))).unwrap();
        let mesh = read_off(&text).unwrap();
        assert!(
            (mesh.volume() - vol).abs() < 1e-9,
            "{region}: {}",
            mesh.volume()
        );
    }
    assert_eq!(meshes[0]["volume"], "1/3");
    assert_eq!(meshes[2]["volume"], "4/3");
}

#[test]
fn mesh_needs_one_variable() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        error_kind(&[
            "--a",
            "2,1",
            "--b",
            "1,1",
            "--mesh",
            dir.path().to_str().unwrap()
        ]),
        "InvalidInput"
    );
}

#[test]
fn two_variable_example() {
    let v = json(&["--a", "5,2", "--b", "2,3", "--invariants", "hs,embdim"]);
    assert_eq!(v["hilbertSamuel"], 7);
    assert_eq!(v["embeddingDimension"], 10);
    assert_eq!(v["dimension"], 4);
    assert!(v.get("fSignature").is_none());
}

#[test]
fn fan_order_is_reported() {
    let v = json(&["--a", "1,3", "--b", "2,1", "--invariants", "embdim"]);
    assert_eq!(v["fanOrder"]["a"], serde_json::json!([3, 1]));
    assert_eq!(v["fanOrder"]["permutation"], serde_json::json!([2, 1]));
}

#[test]
fn degenerate_inputs() {
    let v = json(&["--a", "3,0", "--b", "2,4"]);
    assert_eq!(v["adjoinedVariables"], serde_json::json!([2]));
    assert_eq!(v["hilbertKunz"], "41/18");
    let v = json(&["--a", "0", "--b", "0"]);
    assert_eq!(v["polynomialRing"], true);
    assert_eq!(v["hilbertKunz"], "1/1");
    assert_eq!(v["hilbertKunzMethod"], "regular");
}

#[test]
fn invalid_inputs() {
    assert_eq!(error_kind(&["--a", "1,2", "--b", "3"]), "LengthMismatch");
    assert_eq!(error_kind(&["--a", "-1", "--b", "3"]), "NegativeEntry");
    assert_eq!(error_kind(&["--a", "x", "--b", "3"]), "InvalidInput");
    assert_eq!(
        error_kind(&["--a", "1", "--b", "1", "--method", "fast"]),
        "InvalidInput"
    );
    assert_eq!(error_kind(&["--sweep", "k=1..2"]), "InvalidInput");
}

#[test]
fn table_output() {
    let t = stdout(&interalg(&["--a", "3", "--b", "2", "--output", "table"]));
    assert!(t.contains("41/18"));
    assert!(t
        .lines()
        .any(|l| l.starts_with("hilbert-samuel") && l.trim_end().ends_with('4')));
}

fn csv(args: &[&str]) -> Vec<Vec<String>> {
    stdout(&interalg(args))
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn sweep_f_signature_kb() {
    let rows = csv(&["--sweep", "k=1..3,b=1..3", "--invariants", "fsig"]);
    assert_eq!(rows.len(), 9);
    for r in rows {
        let (k, b): (i64, i64) = (r[0].parse().unwrap(), r[2].parse().unwrap());
        assert_eq!(
            r[3],
            format_fraction(&f_signature_formula_kb(k, &[b]).unwrap())
        );
    }
}

#[test]
fn sweep_hilbert_kunz_diagonal() {
    let rows = csv(&["--sweep", "a=b,a=1..4", "--invariants", "hk"]);
    assert_eq!(rows.len(), 4);
    for r in rows {
        let a: i64 = r[0].parse().unwrap();
        assert_eq!(
            r[2],
            format_fraction(&frac(1 - 3 * a + 6 * a * a, 3 * a * a))
        );
    }
}

#[test]
fn sweep_scroll() {
    let rows = csv(&[
        "--sweep",
        "a=1..4,b=1",
        "--invariants",
        "hk",
        "--method",
        "exact",
    ]);
    assert_eq!(rows.len(), 4);
    for r in rows {
        let a: i64 = r[0].parse().unwrap();
        assert_eq!(r[2], format_fraction(&frac(1 + 4 * a + 3 * a * a, 6 * a)));
    }
}
