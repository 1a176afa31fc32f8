use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn darboux(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_darboux")).args(args).env_remove("DARBOUX_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn all_pass(report: &Value) -> bool {
    report["checks"].as_array().unwrap().iter().all(|c| c["pass"] == Value::Bool(true))
}

#[test]
fn canonical_k1_spec_verifies() {
    let out = darboux(&["verify", "--spec", spec("k1.json").to_str().unwrap(), "--points", "10", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(all_pass(&r));
    assert_eq!(r["points"].as_array().unwrap().len(), 10);
    assert_eq!(r["vdim"], -1);
}

#[test]
fn master_equation_failure_exits_2() {
    let out = darboux(&["verify", "--spec", spec("broken.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert!(r["checks"][0]["witness"].as_str().unwrap().contains("MasterEquationFails"));
}

#[test]
fn runs_are_reproducible() {
    let path = spec("k3.json");
    let args = ["verify", "--spec", path.to_str().unwrap(), "--seed", "3"];
    let a = darboux(&args);
    let b = darboux(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = darboux(&["verify", "--spec", spec("k3.json").to_str().unwrap(), "--seed", "4"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_env_overrides_flag() {
    let path = spec("k3.json");
    let flag = darboux(&["verify", "--spec", path.to_str().unwrap(), "--seed", "11"]);
    let env = Command::new(env!("CARGO_BIN_EXE_darboux"))
        .args(["verify", "--spec", path.to_str().unwrap(), "--seed", "0"])
        .env("DARBOUX_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_darboux"))
        .args(["verify", "--spec", path.to_str().unwrap()])
        .env("DARBOUX_SEED", "abc")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn vdim_table_matches_parity_pattern() {
    let out = darboux(&["vdim-table", "--k", "-1", "-3", "-4", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["symplectic"], serde_json::json!([0]));
    assert_eq!(rows[0]["contact"], serde_json::json!([-1]));
    assert!(rows.iter().all(|r| r["pass"] == Value::Bool(true)));
}

#[test]
fn input_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("bad.json");
    std::fs::write(&garbage, "{not json").unwrap();
    let wrong_m = dir.path().join("m.json");
    std::fs::write(&wrong_m, r#"{"k": -3, "m": [1], "H": "0"}"#).unwrap();
    for args in [
        vec!["verify", "--spec", garbage.to_str().unwrap()],
        vec!["verify", "--spec", wrong_m.to_str().unwrap()],
        vec!["verify", "--spec", "/nonexistent.json"],
        vec!["nonsense"],
        vec!["jet", "--shift", "1", "--dim", "1"],
        vec!["verify", "--spec", spec("k4_symplectic.json").to_str().unwrap(), "--alt-form"],
        vec!["prequantum", "--dim", "1", "--twist", r#"{"weight":1,"terms":[{"coef":"1","mono":[["p_1",1]],"wedge":["x_1"]}]}"#],
    ] {
        assert_eq!(darboux(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn built_instances_can_be_verified_and_symplectified() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    let out = darboux(&["build", "--spec", spec("k3.json").to_str().unwrap(), "--out", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&inst).unwrap()).unwrap();
    assert_eq!(saved["type"], "contact");
    assert_eq!(saved["vdim"], -1);

    let direct = darboux(&["verify", "--spec", spec("k3.json").to_str().unwrap()]);
    let loaded = darboux(&["verify", "--spec", inst.to_str().unwrap()]);
    assert_eq!(loaded.status.code(), Some(0));
    assert_eq!(direct.stdout, loaded.stdout);

    let s = darboux(&["symplectify", "--spec", inst.to_str().unwrap(), "--t", "-3"]);
    assert_eq!(s.status.code(), Some(0));
    let v = json(&s);
    assert!(all_pass(&v["report"]));
    assert_eq!(v["report"]["vdim"], 0);
    assert_eq!(v["instance"]["type"], "symplectification");
}

#[test]
fn alt_form_and_artin_flags() {
    let out = darboux(&["verify", "--spec", spec("k3.json").to_str().unwrap(), "--alt-form", "--artin-w", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["description"].as_str().unwrap().contains("alt-form"));
    assert_eq!(r["artin_block"]["pass"], true);
    assert_eq!(r["vdim"], 1);
}

#[test]
fn stack_examples_and_text_output() {
    let out = darboux(&["jet", "--shift", "-2", "--dim", "2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] nondegenerate (minimal-convention)"));
    assert!(!text.contains("FAIL"));
    let out = darboux(&["verify", "--spec", spec("prequantum.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = darboux(&["verify", "--spec", spec("k4_symplectic.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tampered_instance_fails_with_witness() {
    let built = darboux(&["build", "--spec", spec("k1.json").to_str().unwrap()]);
    let mut inst = json(&built);
    // drop the y d_dR x term from alpha
    let terms = inst["alpha"]["terms"].as_array_mut().unwrap();
    terms.retain(|t| t["wedge"] != serde_json::json!(["x0_1"]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.json");
    std::fs::write(&path, inst.to_string()).unwrap();
    let out = darboux(&["verify", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    let failed: Vec<&Value> = r["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_string()));
}
