//! Exit codes and output of the `orelab` binary.

mod common;

use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn orelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orelab")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_z6() {
    let o = orelab(&["analyze", "Z/6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["profile"]["max_den_count"], 2);
    assert_eq!(v["ring"]["order"], 6);
}

#[test]
fn analyze_selected_phases() {
    let o = orelab(&["analyze", "Z/4", "--phases", "criteria"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v.get("profile").is_none());
    assert!(v["criteria"]["verdicts"].as_array().unwrap().iter().all(|c| c["verdict"] == false));
}

#[test]
fn bound_flag_produces_partial_report() {
    let o = orelab(&["analyze", "tri(2,F2)", "--profile-bound", "4"]);
    // The ring itself is built under the same bound.
    assert_eq!(o.status.code(), Some(2));
    let o = orelab(&["analyze", "Z/12", "--oracle-bound", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["profile"]["candidate_sweep_only"], true);
}

#[test]
fn parse_error_is_input_error() {
    let o = orelab(&["analyze", "mat(2;F2)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 5"));
}

#[test]
fn inconsistent_ring_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = r#"{"name":"bad","order":2,"zero":0,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]}"#;
    fs::write(&path, text).unwrap();
    let o = orelab(&["maxden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ring axiom violated"));
}

#[test]
fn maxden_and_localize() {
    let o = orelab(&["maxden", "tri(2,F2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ll"], serde_json::json!([0, 2, 4, 6]));

    let o = orelab(&["localize", "Z/6", "--set", "1,2,4,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["target_order"], 3);

    let o = orelab(&["localize", "Z/6", "--set", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn criteria_with_explicit_fourth_family() {
    let o = orelab(&["criteria", "Z/6", "--which", "fourth", "--fourth-set", "1,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)[0]["verdict"], false);
    let o = orelab(&["criteria", "Z/6", "--which", "fourth", "--fourth-set", "1,3,5", "--fourth-set", "1,2,4,5"]);
    assert_eq!(json(&o)[0]["verdict"], true);
    let o = orelab(&["criteria", "Z/6", "--which", "fifth"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_theorems_passes() {
    let o = orelab(&["verify-theorems", "prod(F2,tri(2,F2))"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["all_hold"], true);
}

#[test]
fn corpus_run_and_altered_golden() {
    let o = orelab(&["corpus", "run", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));

    let dir = tempfile::tempdir().unwrap();
    let golden = common::manifest_path().parent().unwrap().join("golden/z6.json");
    let mut v: Value = serde_json::from_str(&fs::read_to_string(golden).unwrap()).unwrap();
    v["profile"]["max_den_count"] = 3.into();
    fs::write(dir.path().join("z6.json"), v.to_string()).unwrap();
    let manifest = dir.path().join("manifest.toml");
    fs::write(&manifest, "[[ring]]\nname = \"Z/6\"\nspec = \"Z/6\"\nexpected = \"z6.json\"\n").unwrap();
    let o = orelab(&["corpus", "run", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("/profile/max_den_count: expected 3, found 2"));
}

#[test]
fn corpus_regen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.toml");
    fs::write(&manifest, "[[ring]]\nname = \"F4\"\nspec = \"F4\"\nexpected = \"g/f4.json\"\nregenerate = true\n").unwrap();
    let m = manifest.to_str().unwrap();
    assert_eq!(orelab(&["corpus", "regen", "--manifest", m]).status.code(), Some(0));
    let first = fs::read_to_string(dir.path().join("g/f4.json")).unwrap();
    assert_eq!(orelab(&["corpus", "regen", "--manifest", m]).status.code(), Some(0));
    assert_eq!(first, fs::read_to_string(dir.path().join("g/f4.json")).unwrap());
}

#[test]
fn unknown_subcommand() {
    assert_eq!(orelab(&["frobnicate"]).status.code(), Some(2));
}
