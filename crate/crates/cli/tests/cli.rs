use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distinguish"))
        .args(args)
        .env_remove("DISTINGUISH_MAX_AUT")
        .env_remove("DISTINGUISH_MAX_COLORINGS")
        .env_remove("DISTINGUISH_MAX_VERTICES")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn analyze_petersen() {
    let out = run(&["analyze", "builtin:petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let g = &v["graphs"][0];
    assert_eq!((g["D"].as_u64(), g["theta"].as_u64(), g["aut_order"].as_u64()), (Some(3), Some(8), Some(120)));
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["analyze", "builtin:C7", "--steady", "--phi-max", "5"]);
    let b = run(&["analyze", "builtin:C7", "--steady", "--phi-max", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["analyze", "builtin:C7", "--steady", "--phi-max", "5", "--sequential"]);
    let strip = |o: &Output| {
        let mut v = json(o);
        v["budget"]["parallel"] = Value::Null;
        v["input_digest"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&c));
}

#[test]
fn verify_vertex_sums() {
    let out = run(&["verify", "thm3.7", "--grid", "K3,t=2..5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 4);
    assert!(verdicts.iter().all(|x| x["status"] == "agree" && x["agree"] == true));
    let d: Vec<u64> = verdicts.iter().map(|x| x["brute_force"].as_u64().unwrap()).collect();
    assert_eq!(d, [3, 3, 4, 4]);
}

#[test]
fn verify_skip_record() {
    let out = run(&["verify", "cor3.8", "--grid", "n=3,t=2; n=5,t=3", "--max-aut", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 1);
    let skip = &v["skipped"][0];
    assert_eq!(skip["theorem_id"], "cor3.8");
    assert!(skip["reason"].as_str().unwrap().contains("cap of 100"));
}

#[test]
fn path_table_matches_closed_form() {
    let out = run(&["table", "path", "2..8", "--phi-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["table"].as_array().unwrap();
    assert_eq!(rows.len(), 7 * 4);
    assert!(rows.iter().all(|r| r["Phi"] == r["closed_form"]));
}

#[test]
fn products_emit_graph6() {
    let out = run(&["product", "corona", "K1", "K2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "Bw");
    let out = run(&["product", "lexicographic", "P2", "K2", "--emit", "json"]);
    let v = json(&out);
    assert_eq!((v["n"].as_u64(), v["edges"].as_u64()), (Some(4), Some(6)));
    let out = run(&["product", "power", "K3@0", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["product", "rooted", "K3"]).status.code(), Some(2));
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("p3.el");
    fs::write(&el, "3 2\n0 1\n1 2\n").unwrap();
    let g6 = dir.path().join("p3.g6");
    assert_eq!(run(&["convert", el.to_str().unwrap(), g6.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&g6).unwrap(), "Bg\n");
    let back = dir.path().join("back.el");
    assert_eq!(run(&["convert", g6.to_str().unwrap(), back.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&back).unwrap(), "3 2\n0 1\n1 2\n");
    let many = dir.path().join("many.g6");
    fs::write(&many, "A_\nBw\n").unwrap();
    let out = run(&["analyze", many.to_str().unwrap()]);
    let v = json(&out);
    assert_eq!(v["graphs"][1]["name"], "many.g6#2");
    assert_eq!(run(&["convert", many.to_str().unwrap(), back.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "builtin:Q9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm9.9"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "K7", "--max-aut", "100"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "A!\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside the printable range"));
    assert!(out.stdout.is_empty());
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_distinguish"))
        .args(["analyze", "K7"])
        .env("DISTINGUISH_MAX_AUT", "10^2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
