#![allow(clippy::excessive_precision)] // frozen 17-digit reference decimals

//! Command-line contract: exit codes, formats, round-trips, determinism.

use kzeta::suites::{run_suite, Suite};
use std::process::{Command, Output};

fn kzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn every_suite_passes_at_default_tolerance() {
    for suite in [
        "selectors", "series", "mellin", "bridge", "fpi", "em", "audit", "all",
    ] {
        let out = kzeta(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "suite {suite} failed:\n{}", stdout(&out));
    }
}

#[test]
fn failures_propagate_to_exit_code() {
    // The bridge battery cannot certify 1e-14: its own error estimates sit
    // around 1e-12, so the strictest tolerances must fail the run.
    let out = kzeta(&["verify", "--suite", "bridge", "--tol", "1e-14"]);
    assert_eq!(out.status.code(), Some(1));
    // and the failing entry is the self-reported error bound
    let text = stdout(&out);
    assert!(text.contains("error_estimate_within_tolerance"));
    assert!(text.contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(kzeta(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        kzeta(&["verify", "--tol", "1e-3"]).status.code(),
        Some(2),
        "tolerance above 1e-6 is out of contract"
    );
    assert_eq!(kzeta(&["verify", "--tol", "1e-15"]).status.code(), Some(2));
    assert_eq!(kzeta(&["table", "--which", "xi-sweep", "--s", "0.5"]).status.code(), Some(2));
    assert_eq!(
        kzeta(&["fpi", "--kernel", "csch", "--exponent", "-2"]).status.code(),
        Some(2),
        "parity-mismatched finite part is a usage error"
    );
    assert_eq!(kzeta(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn json_round_trips_bit_for_bit() {
    let out = kzeta(&["verify", "--suite", "series", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);

    // Every real field token must survive parse -> reformat unchanged
    // (17 significant digits pin the f64 exactly).
    let mut checked = 0usize;
    for field in ["expected", "computed", "abs_error", "rel_error", "tolerance"] {
        let marker = format!("\"{field}\": ");
        for (pos, _) in text.match_indices(&marker) {
            let rest = &text[pos + marker.len()..];
            let token: &str = rest
                .split([',', ' ', '\n', '}'])
                .next()
                .unwrap();
            let value: f64 = token.parse().unwrap_or_else(|_| panic!("bad token {token}"));
            assert_eq!(format!("{value:.16e}"), token, "token not reproduced");
            checked += 1;
        }
    }
    assert!(checked > 100, "expected many real tokens, saw {checked}");

    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let tol = doc["tolerance"].as_f64().unwrap();
    assert_eq!(doc["wall_time_ms"].as_u64().unwrap(), 0);
    let entries = doc["entries"].as_array().unwrap();
    let report = run_suite(Suite::Series, 1e-10);
    assert_eq!(entries.len(), report.entries.len());
    for e in entries {
        let expected = e["expected"].as_f64().unwrap();
        let computed = e["computed"].as_f64().unwrap();
        let abs_error = e["abs_error"].as_f64().unwrap();
        let rel_error = e["rel_error"].as_f64().unwrap();
        // error fields were derived from the very numbers in the document
        assert_eq!(abs_error, (computed - expected).abs(), "{}", e["name"]);
        if expected != 0.0 {
            assert_eq!(rel_error, abs_error / expected.abs(), "{}", e["name"]);
        } else {
            assert_eq!(rel_error, abs_error);
        }
        // pass agrees with the report tolerance (entries checked against a
        // tighter internal tolerance still satisfy the implication)
        if e["pass"].as_bool().unwrap() {
            assert!(abs_error <= tol || rel_error <= tol, "{}", e["name"]);
        }
    }
}

#[test]
fn csv_has_schema_columns() {
    let out = kzeta(&["verify", "--suite", "em", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(
        lines.next().unwrap(),
        "name,expected,computed,abs_error,rel_error,pass,provenance,note"
    );
    let report = run_suite(Suite::Em, 1e-10);
    assert_eq!(lines.count(), report.entries.len());
}

#[test]
fn audit_mismatches_do_not_fail_the_run() {
    let out = kzeta(&["verify", "--suite", "audit", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = doc["entries"].as_array().unwrap();
    let mismatches = entries
        .iter()
        .filter(|e| !e["pass"].as_bool().unwrap())
        .count();
    assert!(mismatches >= 4, "expected the audited inconsistencies to be flagged");
    assert!(entries
        .iter()
        .any(|e| e["name"] == "zeta3_fpi" && e["pass"] == false));
}

#[test]
fn checkpoint_table_reproduces_frozen_decimals() {
    let out = kzeta(&["table", "--which", "xi-checkpoints", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    // row (3, 4): both the series and closed-form columns carry the
    // checkpoint value
    let row = rows
        .iter()
        .find(|r| r["J"] == 4)
        .expect("J = 4 row present");
    let series = row["series"].as_f64().unwrap();
    let closed = row["closed_form"].as_f64().unwrap();
    assert!((series - 1.045_485_761_359_007_8).abs() <= 1e-12);
    assert!((closed - 1.045_485_761_359_007_8).abs() <= 1e-15);
    let row = rows
        .iter()
        .find(|r| r["J"] == 8)
        .expect("J = 8 row present");
    assert!((row["series"].as_f64().unwrap() - 1.050_200_567_258_320_0).abs() <= 1e-12);
    // the (s, J) = (2, 1) row is Catalan's constant
    let row = rows
        .iter()
        .find(|r| r["J"] == 1 && r["s"].as_f64().unwrap() == 2.0)
        .expect("(2, 1) row present");
    assert!((row["series"].as_f64().unwrap() - 0.915_965_594_177_219_0).abs() <= 1e-12);
}

#[test]
fn sweep_far_block_approaches_limit() {
    let out = kzeta(&["table", "--which", "xi-sweep", "--s", "3", "--J", "64", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let v = doc["rows"][0]["series"].as_f64().unwrap();
    let limit = 0.875 * 1.202_056_903_159_594_3;
    assert!((v - limit).abs() < 6e-4, "{v} vs {limit}");
}

#[test]
fn fpi_subcommand_reports_the_decomposition() {
    let out = kzeta(&[
        "fpi", "--kernel", "csch", "--exponent", "-3", "--split", "1.0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let value = doc["value"].as_f64().unwrap();
    assert!((value - 0.091_345_371_175_180).abs() < 1e-9);
    let reconstructed = doc["regular_part"].as_f64().unwrap()
        + doc["compensation"].as_f64().unwrap()
        + doc["tail"].as_f64().unwrap();
    assert!((value - reconstructed).abs() < 1e-13);
    assert_eq!(doc["subtracted_terms"].as_array().unwrap().len(), 2);
}

#[test]
fn xi_subcommand_handles_both_variants() {
    let out = kzeta(&["xi", "--s", "2", "--J", "1,2,4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 3);

    let out = kzeta(&["xi", "--s", "2", "--J", "2,4", "--variant", "alternating", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    // tends to Catalan from below
    let v = rows[1]["value"].as_f64().unwrap();
    assert!(v < 0.915_965_594_177_219 && v > 0.89);

    // odd block size is rejected for the alternating variant
    let out = kzeta(&["xi", "--s", "2", "--J", "3", "--variant", "alternating"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_report_is_deterministic_too() {
    let a = kzeta(&["verify", "--suite", "fpi", "--format", "text"]);
    let b = kzeta(&["verify", "--suite", "fpi", "--format", "text"]);
    assert_eq!(a.stdout, b.stdout);
}
