//! End-to-end behaviour of the `chowquot` binary on the fast commands.

use std::path::Path;
use std::process::{Command, Output};

use chowquot::polyhedra::Fan;
use chowquot_cli::report::{canonical_json, strip_volatile};
use chowquot_cli::ReportDocument;
use serde_json::Value;

fn chowquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chowquot")).args(args).output().expect("binary runs")
}

fn report_at(path: &Path) -> ReportDocument {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn zero_samples_is_invalid() {
    assert_eq!(chowquot(&["group", "verify", "--samples", "0"]).status.code(), Some(2));
}

#[test]
fn unknown_command_prints_usage() {
    let out = chowquot(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(chowquot(&["cones", "ample"]).status.code(), Some(2));
}

#[test]
fn quartic_discrepancy_is_flagged_not_failed() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let o = chowquot(&["quartics", "rank", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("FLAG"));
    let doc = report_at(&out);
    let d = &doc.sections[0].discrepancies;
    assert_eq!(d.len(), 1);
    assert_eq!((d[0].reference.clone(), d[0].computed.clone()), (Value::from(14), Value::from(13)));
}

#[test]
fn golden_comparison_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let r = report.to_str().unwrap();
    assert_eq!(chowquot(&["intersection", "table", "--out", r]).status.code(), Some(0));
    assert_eq!(chowquot(&["intersection", "table", "--golden", r]).status.code(), Some(0));

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    doc["sections"][0]["checks"][0]["pass"] = Value::Bool(false);
    let flipped = dir.path().join("flipped.json");
    std::fs::write(&flipped, canonical_json(&doc)).unwrap();
    let o = chowquot(&["intersection", "table", "--golden", flipped.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&o.stderr).matches("GOLDEN").count(), 1);

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{ not json").unwrap();
    assert_eq!(chowquot(&["intersection", "table", "--golden", broken.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn same_seed_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let texts: Vec<String> = ["a.json", "b.json"]
        .iter()
        .map(|name| {
            let p = dir.path().join(name);
            let o = chowquot(&["group", "verify", "--seed", "7", "--samples", "20", "--out", p.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0));
            let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
            canonical_json(&strip_volatile(&v))
        })
        .collect();
    assert_eq!(texts[0], texts[1]);
    assert!(texts[0].contains("\"seed\": 7"));
}

#[test]
fn fan_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let fan_path = dir.path().join("fan.txt");
    let out = dir.path().join("fan.json");
    let o = chowquot(&["fan", "quotient", "--export", fan_path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let fan = Fan::from_text(&std::fs::read_to_string(&fan_path).unwrap()).unwrap();
    assert_eq!(fan.rays().len(), 7);
    assert_eq!(fan.maximal_cones().len(), 10);
    assert!(fan.is_complete() && fan.is_smooth());
    let doc = report_at(&out);
    assert_eq!(doc.sections.iter().map(|s| s.criterion).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
}

#[test]
fn label_table_csv_export() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let o = chowquot(&["intersection", "table", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 20 * 20 * 20);
    assert!(text.lines().any(|l| l == "C01,C01,C01,1"));
    assert!(text.lines().any(|l| l == "D12,D12,D12,2"));
    // stdout carries the JSON report with the 12³ tensor
    let doc: ReportDocument = serde_json::from_slice(&o.stdout).unwrap();
    let tensor = &doc.sections.iter().find(|s| s.criterion == 10).unwrap().data["tensor"];
    assert_eq!(tensor.as_array().unwrap().len(), 12);
}

#[test]
fn nef_report_carries_the_histogram() {
    let o = chowquot(&["cones", "nef"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_slice(&o.stdout).unwrap();
    let h = doc.sections[0].checks.iter().find(|c| c.name == "cube histogram").unwrap();
    assert!(h.pass);
    let pairs: Vec<(i64, usize)> = serde_json::from_value(h.computed.clone()).unwrap();
    assert_eq!(pairs.iter().map(|p| p.1).sum::<usize>(), 189);
    assert_eq!(doc.sections[0].data["rays"].as_array().unwrap().len(), 189);
}
