use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn homdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homdist"))
        .args(args)
        .env_remove("HOMDIST_VERTEX_CAP")
        .env_remove("HOMDIST_ENUM_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = homdist(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn exact(doc: &Value, pointer: &str) -> String {
    doc.pointer(pointer)
        .and_then(|v| v.get("exact"))
        .and_then(Value::as_str)
        .unwrap_or_else(|| panic!("no rational at {pointer}: {doc}"))
        .to_string()
}

fn instance(name: &str, body: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    format!("@{}", path.display())
}

#[test]
fn info_examples() {
    let w6 = json(&["info", "W6"]);
    assert_eq!(w6["n"], 6);
    assert_eq!(w6["m"], 10);
    assert_eq!(w6["orbit_sizes"], serde_json::json!([5, 5]));
    assert_eq!(json(&["info", "petersen"])["edge_transitive"], true);
    let k1 = json(&["info", "K1"]);
    assert_eq!((k1["n"].as_u64(), k1["m"].as_u64()), (Some(1), Some(0)));
}

#[test]
fn s_examples() {
    assert_eq!(exact(&json(&["s", "K2", "C9"]), "/s"), "8/9");
    let w6 = json(&["s", "K3", "W6"]);
    assert_eq!(exact(&w6, "/s"), "9/10");
    let weights: Vec<&str> = w6["certificate"]["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["exact"].as_str().unwrap())
        .collect();
    assert_eq!(weights, vec!["1/10", "1/10"]);
    let one = json(&["s", "K3", "K2"]);
    assert_eq!(exact(&one, "/s"), "1/1");
    assert_eq!(one["s"]["num"], 1);
    assert_eq!(one["s"]["den"], 1);
}

#[test]
fn d_examples() {
    assert_eq!(exact(&json(&["d", "K2", "C5"]), "/d"), "1/5");
    assert_eq!(exact(&json(&["d", "W7", "K3"]), "/d"), "0/1");
    assert_eq!(exact(&json(&["d", "K2", "K3"]), "/d"), "1/3");
}

#[test]
fn mc_examples() {
    let c5 = instance("c5_uniform", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let k4 = instance("k4_uniform", "# K4, unit weights\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(exact(&json(&["mc", "K2", &c5]), "/ratio"), "4/5");
    assert_eq!(exact(&json(&["mc", "K3", &k4]), "/ratio"), "5/6");
    let full = json(&["mc", "K4", &k4]);
    assert_eq!(exact(&full, "/ratio"), "1/1");
    assert_eq!(full["witness"].as_array().unwrap().len(), 4);
    let weighted = instance("c5_weighted", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n0 1 7/2\n");
    assert_eq!(exact(&json(&["mc", "K2", &weighted]), "/value"), "13/2");
}

#[test]
fn bounds_examples() {
    let c11 = json(&["bounds", "C11", "--via", "K2"]);
    assert_eq!(c11["transfer"]["lower_bound"], "0.798697");
    let w6 = json(&["bounds", "W6", "--hastad", "--c", "0"]);
    assert_eq!(exact(&w6, "/hastad/lower_bound_exact"), "5/9");
    let k3 = json(&["bounds", "K3", "--fj", "3"]);
    assert_eq!(k3["transfer"]["lower_bound"], "0.836008");
    let compare = json(&["bounds", "W6", "--via", "K3", "--compare"]);
    assert_eq!(compare["transfer"]["lower_bound"], "0.752407");
    assert_eq!(compare["hastad"]["lower_bound"], "0.555556");
    let hard = json(&["bounds", "C9", "--via", "K2", "--beta", "0.878567"]);
    assert_eq!(hard["inapproximability"]["upper_bound"]["decimal"], "0.988388");
    assert_eq!(hard["inapproximability"]["conditional"], true);
}

#[test]
fn sweep_examples() {
    let out = homdist(&["sweep", "cycles", "3..11", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);

    let wheels = json(&["sweep", "wheels", "6..10"]);
    let ks: Vec<&str> = wheels["rows"].as_array().unwrap().iter().map(|r| r["parameter"].as_str().unwrap()).collect();
    assert_eq!(ks, vec!["6", "8", "10"]);
    for row in wheels["rows"].as_array().unwrap() {
        assert_eq!(row["fj_dominates"], "true");
    }

    let complete = json(&["sweep", "complete", "2..6"]);
    let alphas: Vec<&str> = complete["rows"].as_array().unwrap().iter().map(|r| r["fj"].as_str().unwrap()).collect();
    assert_eq!(&alphas[..2], &["0.878567", "0.836008"]);
}

#[test]
fn sweep_csv_and_json_agree() {
    let out = homdist(&["sweep", "wheels", "4..12", "--c", "1/2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().clone();
    let doc = json(&["sweep", "wheels", "4..12", "--c", "1/2"]);
    let rows = doc["rows"].as_array().unwrap();
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (record, row) in records.iter().zip(rows) {
        for (key, cell) in header.iter().zip(record.iter()) {
            assert_eq!(row[key].as_str().unwrap(), cell, "column {key}");
        }
    }
}

#[test]
fn check_metric_examples() {
    let pool = json(&["check-metric", "K2", "K3", "C5", "C7", "W6"]);
    assert_eq!(pool["all_hold"], true);
    let pair = json(&["check-metric", "W7", "K3"]);
    assert_eq!(pair["d"][0][1], "0");
    assert_eq!(pair["hom_equivalent"], serde_json::json!([["W7", "K3"]]));
    assert_eq!(homdist(&["check-metric", "K2"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(homdist(&["s", "X9", "K2"]).status.code(), Some(2));
    assert_eq!(homdist(&["d", "K2", "K1"]).status.code(), Some(2));
    assert_eq!(homdist(&["info", "K13"]).status.code(), Some(3));
    assert_eq!(homdist(&["s", "K3", "W6", "--enum-budget", "10"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_homdist"))
        .args(["info", "W6"])
        .env("HOMDIST_VERTEX_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    let missing = homdist(&["mc", "K2", "@/nonexistent/instance"]);
    assert_eq!(missing.status.code(), Some(2));
    let bad = instance("bad_header", "3\n0 1\n");
    let out = homdist(&["mc", "K2", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["s", "K2", "K8/3", "--format", "json"],
        vec!["check-metric", "K2", "C5", "W6", "--format", "json"],
        vec!["sweep", "turan-dense", "4..7", "--format", "csv"],
    ] {
        assert_eq!(homdist(&args).stdout, homdist(&args).stdout);
    }
}

#[test]
fn help_lists_grammar() {
    let out = homdist(&["--help"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(homdist::GraphSpec::GRAMMAR));
    for verb in ["info", "hom", "mc", "bounds", "sweep", "check-metric"] {
        assert!(text.contains(verb));
    }
}

#[test]
fn text_output_is_aligned() {
    let out = homdist(&["s", "K2", "C9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("s ") && l.ends_with("8/9 (0.888889)")));
    let hom = json(&["hom", "C5", "K3"]);
    assert_eq!(hom["exists"], true);
    assert_eq!(hom["reverse_exists"], false);
}
