//! End-to-end tests of the `hopfmu` binary: documented table values, output
//! formats, determinism, and the exit-code contract (0 = pass, 1 = property
//! failure, 2 = usage error).

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfmu"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn run_json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {stderr}");
    serde_json::from_str(&stdout).expect("valid json")
}

#[test]
fn uq_table_at_order_five_lists_the_known_column() {
    let doc = run_json(&["table", "uq", "--n", "5", "--format", "json"]);
    assert_eq!(doc["algebra"], "uq");
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["exponent"], 1);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let labels: Vec<&str> = rows.iter().map(|r| r["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["V_0", "V_1", "V_2", "V_3", "V(q^-1)"]);
    let mu: Vec<&str> = rows.iter().map(|r| r["mu_pretty"].as_str().unwrap()).collect();
    assert_eq!(mu, ["1", "-q - q^4", "-q - q^4", "1", "0"]);
    let qdim: Vec<&str> = rows
        .iter()
        .map(|r| r["quantum_dim_pretty"].as_str().unwrap())
        .collect();
    assert_eq!(qdim, ["1", "q + q^4", "-q - q^4", "-1", "0"]);
    let lambda: Vec<&str> = rows
        .iter()
        .map(|r| r["lambda_pretty"].as_str().unwrap())
        .collect();
    assert_eq!(lambda, ["1", "-1", "1", "-1", "1"]);
    assert!(rows.iter().all(|r| r["self_dual"] == true));
    let dims: Vec<u64> = rows.iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 3, 4, 5]);
}

#[test]
fn double_table_at_order_five_has_four_nonzero_traces() {
    let doc = run_json(&["table", "double", "--n", "5", "--format", "json"]);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 25);
    let self_dual: Vec<&str> = rows
        .iter()
        .filter(|r| r["self_dual"] == true)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(self_dual, ["V(1,5)", "V(2,2)", "V(3,4)", "V(4,1)", "V(5,3)"]);
    // The n-dimensional self-dual module V(5,3) sums all five roots of
    // unity, so only four of the five self-dual traces are nonzero.
    let nonzero: Vec<&str> = rows
        .iter()
        .filter(|r| r["mu_pretty"] != "0")
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(nonzero, ["V(1,5)", "V(2,2)", "V(3,4)", "V(4,1)"]);
    // Odd order: nothing is beyond the tabulated theory.
    assert!(rows.iter().all(|r| r["note"] == ""));
}

#[test]
fn double_table_at_order_four_is_beyond_the_tables() {
    let doc = run_json(&["table", "double", "--n", "4", "--format", "json"]);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let self_dual: Vec<&str> = rows
        .iter()
        .filter(|r| r["self_dual"] == true)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(self_dual, ["V(1,2)", "V(1,4)", "V(3,1)", "V(3,3)"]);
    assert!(rows.iter().all(|r| r["note"] == "beyond paper"));
    let (_, pretty, _) = run(&["table", "double", "--n", "4"]);
    assert!(pretty.contains("(beyond paper)"));
}

#[test]
fn csv_and_json_tables_encode_the_same_data() {
    for selector in [["table", "uq", "--n", "5"], ["table", "double", "--n", "4"]] {
        let doc = run_json(&[&selector[..], &["--format", "json"]].concat());
        let (code, csv_text, _) = run(&[&selector[..], &["--format", "csv"]].concat());
        assert_eq!(code, 0);
        let mut lines = csv_text.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        let rows = doc["rows"].as_array().unwrap();
        let records: Vec<&str> = lines.collect();
        assert_eq!(records.len(), rows.len());
        // Spot-check every row: label and self_dual as plain text, mu as an
        // embedded JSON document equal to the JSON table's.
        let label_at = header.iter().position(|h| *h == "label").unwrap();
        let mu_at = header.iter().position(|h| *h == "mu").unwrap();
        let sd_at = header.iter().position(|h| *h == "self_dual").unwrap();
        let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
        for (record, row) in reader.records().zip(rows) {
            let record = record.unwrap();
            assert_eq!(&record[label_at], row["label"].as_str().unwrap());
            assert_eq!(
                record[sd_at].parse::<bool>().unwrap(),
                row["self_dual"].as_bool().unwrap()
            );
            let mu: Value = serde_json::from_str(&record[mu_at]).unwrap();
            assert_eq!(&mu, &row["mu"]);
        }
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["table", "double", "--n", "5", "--format", "json"],
        vec!["table", "double", "--n", "5", "--format", "csv"],
        vec!["table", "uq", "--n", "7"],
        vec!["inspect", "uq", "--n", "5", "--i", "1"],
        vec!["verify", "--n", "3", "--suite", "all"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second, "{args:?} must be reproducible");
    }
}

#[test]
fn mu_prints_single_values() {
    let (code, out, _) = run(&["mu", "uq", "--n", "5", "--i", "2"]);
    assert_eq!((code, out.trim()), (0, "-q - q^4"));
    let (code, out, _) = run(&["mu", "uq", "--n", "5", "--i", "0"]);
    assert_eq!((code, out.trim()), (0, "1"));
    let (code, out, _) = run(&["mu", "double", "--n", "5", "--l", "3", "--r", "2"]);
    assert_eq!((code, out.trim()), (0, "0"));
    let (code, out, _) = run(&["mu", "double", "--n", "5", "--l", "2", "--r", "2"]);
    assert_eq!((code, out.trim()), (0, "-q^2 - q^3"));
    // The n-dimensional self-dual module carries the zero invariant.
    let (code, out, _) = run(&["mu", "double", "--n", "5", "--l", "5", "--r", "3"]);
    assert_eq!((code, out.trim()), (0, "0"));

    let doc = run_json(&["mu", "uq", "--n", "5", "--i", "1", "--format", "json"]);
    assert_eq!(doc["label"], "V_1");
    assert_eq!(doc["self_dual"], true);
    assert_eq!(doc["mu_pretty"], "-q - q^4");
    assert_eq!(doc["mu"]["coeffs"][0], "1");
}

#[test]
fn inspect_shows_q_and_oracle_for_self_dual_modules() {
    let doc = run_json(&["inspect", "uq", "--n", "5", "--i", "1", "--format", "json"]);
    assert_eq!(doc["self_dual"], true);
    assert_eq!(doc["mu_pretty"], "-q - q^4");
    assert_eq!(doc["mu"], doc["oracle_mu"]);
    let q = &doc["Q"];
    assert_eq!(q["rows"], 2);
    // Antidiagonal: zero entries exactly on the diagonal.
    let zero = |v: &Value| v["coeffs"].as_array().unwrap().iter().all(|c| c == "0");
    assert!(zero(&q["entries"][0][0]) && zero(&q["entries"][1][1]));
    assert!(!zero(&q["entries"][0][1]) && !zero(&q["entries"][1][0]));
    for key in ["E", "F", "K", "K^-1"] {
        assert!(doc["matrices"].get(key).is_some(), "matrix {key} listed");
    }
    let (code, pretty, _) = run(&["inspect", "uq", "--n", "5", "--i", "0"]);
    assert_eq!(code, 0);
    assert!(pretty.contains("mu: 1"));
    assert!(pretty.contains("Q =\n  [1]"));
    assert!(pretty.contains("U =\n  [1]"));
}

#[test]
fn inspect_reports_non_self_dual_modules_as_answers() {
    let (code, stdout, _) = run(&[
        "inspect", "double", "--n", "5", "--l", "3", "--r", "2", "--format", "json",
    ]);
    assert_eq!(code, 0, "not self-dual is an answer, not a failure");
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["self_dual"], false);
    assert_eq!(doc["mu_pretty"], "0");
    assert_eq!(doc["dual_label"], "V(3,1)");
    assert!(doc.get("Q").is_none());
    assert!(doc.get("U").is_none());
    assert!(doc.get("oracle_mu").is_none());
    let (code, pretty, _) = run(&["inspect", "double", "--n", "5", "--l", "3", "--r", "2"]);
    assert_eq!(code, 0);
    assert!(pretty.contains("not defined (module is not self-dual)"));
}

#[test]
fn verify_passes_at_supported_orders() {
    let (code, out, _) = run(&["verify", "--n", "5", "--suite", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("24 passed, 0 failed, 0 skipped"));
    assert!(!out.contains("FAIL"));

    let (code, out, _) = run(&["verify", "--n", "4", "--suite", "double-labels"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));

    // Even order: the uq suite is skipped, not failed.
    let (code, out, _) = run(&["verify", "--n", "6", "--suite", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("skip  uq"));
    assert!(out.contains("skip  double/mu-closed-form"));
    assert!(out.contains("0 failed"));
}

#[test]
fn usage_errors_exit_with_code_two() {
    for args in [
        vec!["verify", "--n", "6", "--suite", "uq"],
        vec!["table", "uq", "--n", "4"],
        vec!["table", "uq", "--n", "2"],
        vec!["table", "uq", "--n", "15"],
        vec!["table", "uq", "--n", "5", "--exp", "5"],
        vec!["mu", "uq", "--n", "5", "--i", "9"],
        vec!["mu", "uq", "--n", "5", "--i", "2", "--format", "csv"],
        vec!["inspect", "double", "--n", "5", "--l", "6", "--r", "1"],
    ] {
        let (code, _, stderr) = run(&args);
        assert_eq!(code, 2, "{args:?} must be a usage error: {stderr}");
        assert!(stderr.starts_with("error:"), "{args:?}: {stderr}");
    }
}

#[test]
fn exponent_changes_the_root_consistently() {
    let doc = run_json(&["table", "uq", "--n", "5", "--exp", "2", "--format", "json"]);
    assert_eq!(doc["exponent"], 2);
    let rows = doc["rows"].as_array().unwrap();
    // mu(V_1) = -q - q^-1 at q = zeta^2 is -zeta^2 - zeta^3.
    assert_eq!(rows[1]["mu_pretty"], "-q^2 - q^3");
    // Scalar values do not depend on the chosen primitive root.
    assert_eq!(rows[0]["mu_pretty"], "1");
    assert_eq!(rows[3]["mu_pretty"], "1");
}
