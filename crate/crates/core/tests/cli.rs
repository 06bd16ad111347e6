use std::process::Command;

use cptgroups::cli::main_with_args;
use cptgroups::group_core::FiniteGroup;

fn run(args: &[&str]) -> (i32, String, String) {
    main_with_args(std::iter::once("cptgroups").chain(args.iter().copied()))
}

#[test]
fn iso_reports_shared_table() {
    let (code, out, _) = run(&["iso", "G_psi_hat", "D4xZ2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("not isomorphic; character tables match"));
    let (_, out, _) = run(&["iso", "Q", "Q"]);
    assert!(out.starts_with("isomorphic; character tables match"));
}

#[test]
fn classes_use_cpt_labels() {
    let (code, out, _) = run(&["classes", "G_psi_eq"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("G_psi_eq: 10 classes"));
    assert!(out.contains("[T] = {T}"));
    assert!(out.contains("[-T] = {-T}"));
    let (_, out, _) = run(&["classes", "G_psi_hat"]);
    assert!(out.contains("2[Θ̂]"));
}

#[test]
fn chartable_formats() {
    let (code, latex, _) = run(&["chartable", "G_psi_hat", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(latex.starts_with("\\begin{tabular}"));
    let (_, csv, _) = run(&["chartable", "Q", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 6);
    let (_, text, _) = run(&["chartable", "G_psi_eq", "--method", "constructive"]);
    assert!(text.contains("2i") && text.contains("−2i"));
    let (_, json, _) = run(&["chartable", "G_QED", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 80);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["build", "Nope"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["irreps", "Q", "--format", "latex"]).0, 1);
    assert_eq!(run(&["chartable", "D4", "--method", "constructive"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, out, _) = run(&["verify-paper", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["mismatch"], 0);
    assert_eq!(v["summary"]["paper-defect-confirmed"], 5);
}

#[test]
fn output_is_deterministic() {
    for args in [&["export", "G_psi_eq"][..], &["verify-paper"], &["irreps", "G_psi_hat", "--format", "csv"]] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn json_round_trips() {
    for id in ["Q", "G_psi_hat", "G_psi_eq", "Z2^3"] {
        let (_, out, _) = run(&["build", id, "--format", "json"]);
        let g = FiniteGroup::from_json_str(&out).unwrap();
        let (_, again, _) = run(&["build", id, "--format", "json"]);
        assert_eq!(out, again);
        assert_eq!(serde_json::to_value(g.to_json()).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());
    }
    let (_, out, _) = run(&["export", "G_A"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let g = FiniteGroup::from_json(serde_json::from_value(v["group"].clone()).unwrap()).unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(v["irreps"].as_array().unwrap().len(), 8);
}

#[test]
fn embed_and_output_file() {
    let (_, out, _) = run(&["embed", "Z2^3", "G_psi_hat"]);
    assert_eq!(out, "Z2^3 does not embed in G_psi_hat\n");
    let (_, out, _) = run(&["embed", "Z2", "Q"]);
    assert!(out.starts_with("Z2 embeds in Q"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.csv");
    let (code, out, _) = run(&["chartable", "Q", "-f", "csv", "-o", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("character,"));
    let bad = dir.path().join("missing").join("x.txt");
    assert_eq!(run(&["build", "Q", "-o", bad.to_str().unwrap()]).0, 1);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_cptgroups");
    let ok = Command::new(bin).args(["classes", "Q"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().starts_with("Q: 5 classes"));
    let bad = Command::new(bin).args(["classes", "X"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("unknown group id"));
}
