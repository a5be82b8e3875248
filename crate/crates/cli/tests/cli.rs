use std::process::{Command, Output};

use serde_json::Value;

fn sally(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sally")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_single_row() {
    let o = sally(&["invariants", "--e", "7", "--m", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("\"e\",\"m\",\"n\",\"generators\",\"F_def\""));
    let row = lines.next().unwrap();
    assert!(row.starts_with("\"7\",\"2\",\"-\",\"7;8;10;11;12;13\",\"9\",\"9\""), "{row}");
    assert!(row.ends_with("\"true\""));
}

#[test]
fn betti_json_round_trips() {
    let o = sally(&["betti", "--e", "7", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "betti");
    assert_eq!(doc["params"]["e"], 7);
    let row = &doc["rows"][0];
    assert_eq!(row["totals"], serde_json::json!([1, 14, 35, 35, 14, 1]));
    assert_eq!(row["family"], "S1");
    assert_eq!(row["ok"], true);
    let graded_sum: u64 = row["graded"].as_array().unwrap().iter().map(|t| t[2].as_u64().unwrap()).sum();
    assert_eq!(graded_sum, 100);
}

#[test]
fn betti_table_has_graded_block() {
    let o = sally(&["betti", "--e", "6", "--m", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("S_6<1,2> graded Betti numbers"));
    assert!(text.lines().next().unwrap().starts_with("e  m  n  generators"));
}

#[test]
fn verify_gens_families() {
    for family in ["23", "34"] {
        let o = sally(&["verify-gens", "--e", "8", "--family", family, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "family {family}");
        let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let row = &doc["rows"][0];
        assert_eq!(row["generates"], true);
        assert_eq!(row["minimal"], true);
        assert_eq!(row["claimed"], row["mu"]);
    }
}

#[test]
fn scan_matches_golden_text() {
    let o = sally(&["scan", "--e", "7", "--conjecture", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden/conjecture2_e7.txt"));
    assert_eq!(stdout(&o), golden.unwrap());
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("conjecture 2 e=7: holds="));
}

#[test]
fn scan_writes_directory() {
    let dir = tempfile::tempdir().unwrap();
    let target = format!("{}/reports/", dir.path().display());
    let o = sally(&["scan", "--e-range", "6..7", "--conjecture", "all", "--format", "csv", "--out", &target]);
    assert_eq!(o.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path().join("reports")).unwrap().collect();
    assert_eq!(files.len(), 10);
    let one = std::fs::read_to_string(dir.path().join("reports/conjecture1_e6.csv")).unwrap();
    assert!(one.starts_with("\"conjecture\",\"e\",\"params\",\"j\",\"relation\",\"lhs\",\"rhs\",\"verdict\"\n"));
    assert_eq!(stdout(&o).lines().count(), 10);
}

#[test]
fn out_file_receives_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inv.json");
    let o = sally(&["invariants", "--e", "6", "--all-mn", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["invariants", "--e", "5", "--m", "1", "--n", "2"][..],
        &["scan", "--e", "6", "--conjecture", "6"],
        &["invariants", "--m", "1"],
        &["invariants", "--e", "6", "--e-range", "6..7", "--m", "1"],
        &["betti", "--e", "6", "--m", "6"],
        &["invariants", "--e-range", "8..6", "--all-m"],
        &["verify-gens", "--e", "6", "--family", "45"],
        &["invariants", "--e", "6", "--m", "1", "--lambda-max", "10"],
    ] {
        let o = sally(args);
        assert_eq!(o.status.code(), Some(2), "sally {}", args.join(" "));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn mismatch_exits_1() {
    // A cut-off below the last syzygy degree (57) trips the tail check.
    let o = sally(&["betti", "--e", "6", "--m", "1", "--lambda-max", "40"]);
    assert_eq!(o.status.code(), Some(1));
}
