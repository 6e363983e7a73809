use std::path::PathBuf;
use std::process::{Command, Output};

fn tamesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamesign"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let out = tamesign(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out), golden(name), "{args:?}");
}

#[test]
fn golden_outputs() {
    check_golden(
        &["enumerate", "--q", "2", "--n", "2", "--format", "csv"],
        "enumerate_q2_n2.csv",
    );
    check_golden(
        &["enumerate", "--q", "3", "--n", "2", "--format", "json"],
        "enumerate_q3_n2.json",
    );
    check_golden(
        &[
            "verify-flip",
            "--q",
            "2",
            "--n",
            "4",
            "--recipe",
            "both",
            "--format",
            "csv",
        ],
        "verify_flip_q2_n4_both.csv",
    );
    check_golden(
        &["verify-flip", "--q", "2", "--n", "4", "--recipe", "both"],
        "verify_flip_q2_n4_both.txt",
    );
    check_golden(
        &[
            "sign", "--side", "division", "--q", "2", "--n", "2", "--f", "2", "--a", "1", "--w",
            "+1",
        ],
        "sign_division_q2.txt",
    );
    check_golden(
        &[
            "sign", "--side", "weil", "--q", "2", "--f", "2", "--a", "1", "--w", "-1", "--format",
            "json",
        ],
        "sign_weil_q2.json",
    );
    check_golden(
        &["product-check", "-1", "-1", "--format", "csv"],
        "product_check.csv",
    );
}

#[test]
fn enumerate_csv_has_two_rows() {
    let out = tamesign(&["enumerate", "--q", "2", "--n", "2", "--format", "csv"]);
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][7], "+1");
    assert_eq!(&rows[1][7], "-1");
}

#[test]
fn json_carries_schema_and_generator() {
    let out = tamesign(&["enumerate", "--q", "3", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "enumerate");
    assert!(v["generator"]["residue_generator"].is_string());
    assert!(v["rows"].is_array());
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["enumerate", "--q", "6", "--n", "2"][..],
        &["enumerate", "--q", "8..10", "--n", "0"],
        &["verify-flip", "--q", "2", "--n", "1"],
        &[
            "sign", "--side", "division", "--q", "2", "--n", "3", "--f", "2", "--a", "1", "--w",
            "+1",
        ],
        &[
            "sign", "--side", "division", "--q", "2", "--f", "2", "--a", "1", "--w", "+1",
        ],
        &[
            "sign", "--side", "weil", "--q", "2", "--f", "2", "--a", "3", "--w", "+1",
        ],
        &[
            "sign", "--side", "weil", "--q", "2", "--f", "2", "--a", "1", "--w", "2",
        ],
        &["product-check", "0"],
        &["verify-flip", "--q", "2", "--n", "2", "--jobs", "0"],
        &["nonsense"],
    ] {
        let out = tamesign(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = tamesign(&["enumerate", "--q", "6", "--n", "2"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a prime power"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(tamesign(&["--help"]).status.code(), Some(0));
    assert_eq!(tamesign(&["--version"]).status.code(), Some(0));
}

#[test]
fn ranges_skip_non_prime_powers() {
    let out = tamesign(&["enumerate", "--q", "6..7", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["parameters"]["q"], serde_json::json!([7]));
}

#[test]
fn odd_index_has_no_rows() {
    let out = tamesign(&["enumerate", "--q", "3", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn verify_flip_exit_codes() {
    let out = tamesign(&["verify-flip", "--q", "2", "--n", "4", "--recipe", "PR"]);
    assert_eq!(out.status.code(), Some(0));
    let out = tamesign(&["verify-flip", "--q", "2", "--n", "4", "--recipe", "SZ"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2 inconsistent"));
}

#[test]
fn verify_flip_range_summary() {
    let out = tamesign(&[
        "verify-flip",
        "--q",
        "2..5",
        "--n",
        "2..6",
        "--recipe",
        "PR",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let s = &v["summary"]["recipes"][0];
    assert_eq!(s["recipe"], "PR");
    assert_eq!(s["inconsistent"], 0);
    assert_eq!(s["rows"], v["rows"].as_array().unwrap().len());
    assert_eq!(v["summary"]["cases"], 20);
}

#[test]
fn not_regular_is_reported() {
    let out = tamesign(&[
        "sign", "--side", "division", "--q", "2", "--n", "4", "--f", "2", "--a", "0", "--w", "+1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not regular"));
}

#[test]
fn weil_sign_example() {
    let out = tamesign(&[
        "sign", "--side", "weil", "--q", "2", "--f", "2", "--a", "1", "--w", "-1", "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["closed_form"], -1);
    assert_eq!(v["rows"][0]["oracle"], -1);
}

#[test]
fn product_check_verdicts() {
    for (args, ok) in [
        (&["product-check", "-1", "-1"][..], true),
        (&["product-check", "+1"], true),
        (&["product-check"], true),
        (&["product-check", "-1", "+1"], false),
    ] {
        let out = tamesign(args);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert_eq!(text.ends_with("OK\n"), ok, "{args:?}: {text}");
    }
}
