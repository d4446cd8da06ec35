use std::process::{Command, Output};

use serde_json::Value;

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer")).args(args).env_remove("BRAUER_SEED").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = brauer(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn paths_to_one_box() {
    let v = json(&["paths", "--lambda", "1", "--n", "3", "--N", "3"]);
    let paths = v["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 3);
    // the middle step runs through (2), (1,1), ∅ in that order
    let mids: Vec<&Value> = paths.iter().map(|p| &p[2]).collect();
    assert_eq!(mids, [&serde_json::json!([2]), &serde_json::json!([1, 1]), &serde_json::json!([])]);
}

#[test]
fn central_series_of_empty_diagram() {
    let v = json(&["central", "--mu", "", "--N", "3", "--order", "2"]);
    assert_eq!(v["Z"], serde_json::json!(["3", "3", "3"]));
    let v = json(&["central", "--mu", "0", "--N", "7/2", "--order", "1"]);
    assert_eq!(v["Z"][0], "7/2");
}

#[test]
fn loop_in_product() {
    let v = json(&["mult", "--n", "2", "sbar1", "sbar1"]);
    assert_eq!(v[0]["coeff"], "N");
    let v = json(&["mult", "--n", "2", "sbar1", "[1-2 1b-2b]", "--N", "4"]);
    assert_eq!(v[0]["coeff"], "4");
    assert_eq!(v[0]["diagram"]["edges"], serde_json::json!([["1", "2"], ["1b", "2b"]]));
}

#[test]
fn rep_matrices_are_square() {
    let v = json(&["rep", "--lambda", "1", "--n", "3", "--N", "3"]);
    let s1 = v["matrices"]["s1"].as_array().unwrap();
    assert_eq!(s1.len(), 3);
    assert!(s1.iter().all(|r| r.as_array().unwrap().len() == 3));
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn shapes_sum_of_squares() {
    let v = json(&["shapes", "--n", "4", "--N", "5"]);
    assert_eq!(v["sum_of_squares"], 105);
}

#[test]
fn affine_normal_form() {
    let v = json(&["affine", "nf", "--n", "2", "--word", "sbar1 sbar1", "--N", "3"]);
    assert_eq!(v["normal_form"][0]["coeff"], "3");
    let v = json(&["affine", "nf", "--n", "2", "--word", "s1 s1"]);
    assert_eq!(v["normal_form"].as_array().unwrap().len(), 1);
}

#[test]
fn checks_pass() {
    json(&["relations", "--n", "4"]);
    json(&["oracle", "--n", "2", "--N", "3"]);
    json(&["verify-all", "--only", "1"]);
    let t = brauer(&["--format", "table", "verify-all", "--only", "7"]);
    assert!(t.status.success());
    assert!(String::from_utf8_lossy(&t.stdout).starts_with("criterion 7 PASS"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["paths", "--lambda", "2,3", "--n", "3", "--N", "3"][..],
        &["central", "--mu", "1", "--N", "x"],
        &["mult", "--n", "2", "s5"],
        &["affine", "nf", "--n", "2", "--word", "q1"],
        &["affine", "check", "--suite", "nope"],
        &["verify-all", "--only", "9"],
        &["frobnicate"],
    ] {
        assert_eq!(brauer(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn seed_env_overrides_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(["--seed", "1", "oracle", "--n", "2", "--N", "2"])
        .env("BRAUER_SEED", "77")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 77);
    let bad = Command::new(env!("CARGO_BIN_EXE_brauer")).args(["relations", "--n", "2"]).env("BRAUER_SEED", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
