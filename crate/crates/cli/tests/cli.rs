use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_equidouble"))
        .args(args)
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, text) = run(args);
    (code, serde_json::from_str(&text).unwrap())
}

#[test]
fn dw_on_three_torus() {
    let (code, v) = json(&["dw", "--presentation", "T3", "--group", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    // commuting triples in S3 number 48, over |S3| = 6
    assert_eq!(v["result"]["hom_count"], 48);
    assert_eq!(v["result"]["invariant"], "8");
}

#[test]
fn unknown_group_is_usage_error() {
    let (code, _) = run(&["double", "--group", "NoSuchGroup"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["dw", "--presentation", "Nope", "--group", "S3"]);
    assert_eq!(code, 2);
}

#[test]
fn budgets_are_resource_errors() {
    let (code, v) = json(&["double", "--group", "S4"]);
    assert_eq!(code, 3);
    assert!(v["error"].as_str().unwrap().contains("budget"));
    let (code, _) = run(&[
        "dw",
        "--presentation",
        "Sigma_3",
        "--group",
        "S4",
        "--budget-homs",
        "1000",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn smatrix_csv() {
    let (code, text) = run(&["smatrix", "--group", "Z2", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with(','));
    assert!(lines[1].split(',').skip(1).all(|x| x == "1" || x == "-1"));
}

#[test]
fn smatrix_json_for_s3() {
    let (code, v) = json(&["smatrix", "--group", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["labels"].as_array().unwrap().len(), 8);
    assert_eq!(v["result"]["invertible"], true);
    assert_eq!(v["result"]["character_formula_agrees"], true);
}

#[test]
fn simples_and_sectors() {
    let (code, v) = json(&["simples", "--extension", "A3-S3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 10);
    let (code, v) = json(&["simples", "--group", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 8);
    let (code, v) = json(&["sectors", "--extension", "A3-S3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["sectors"][1]["orbits"], 1);
    assert_eq!(v["result"]["sectors"][1]["stabilizer_orders"], serde_json::json!([1]));
}

#[test]
fn csv_unavailable_for_other_commands() {
    let (code, _) = run(&["catalogue", "--format", "csv"]);
    assert_eq!(code, 2);
}

#[test]
fn catalogue_lists_identifiers() {
    let (code, v) = json(&["catalogue"]);
    assert_eq!(code, 0);
    let ext = v["result"]["extensions"].as_array().unwrap();
    assert!(ext.iter().any(|x| x == "A3-S3") && ext.iter().any(|x| x == "Z2-Z4"));
    assert!(v["result"]["presentations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|x| x == "T3"));
}

#[test]
fn cech_matches_sector() {
    let (code, v) = json(&["cech", "--extension", "Z2-Z4", "--monodromy", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["cech_classes"], v["result"]["sector_orbits"]);
    let (code, _) = run(&["cech", "--extension", "Z2-Z4", "--monodromy", "7"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_all_writes_report_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let (code, _) = run(&["verify-all", "--extension", "A3-S3", "--out", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    let out = Command::new(env!("CARGO_BIN_EXE_equidouble"))
        .args(["verify-all", "--extension", "A3-S3", "--out", b.to_str().unwrap()])
        .env("EQUIDOUBLE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["modularity"]["j_modular_claim"], true);
}

#[test]
fn text_format() {
    let (code, text) = run(&["dw", "--presentation", "S2xS1", "--group", "Z3", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(text.contains("result.invariant: 1"));
}

#[test]
fn bad_thread_count_is_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_equidouble"))
        .arg("catalogue")
        .env("EQUIDOUBLE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
