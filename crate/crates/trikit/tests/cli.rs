//! End-to-end tests for the `trikit` binary: every documented example is
//! pinned byte-for-byte, plus exit codes and error surfaces.

use std::path::PathBuf;
use std::process::Command;

fn trikit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_trikit"))
        .args(args)
        .output()
        .expect("failed to spawn trikit");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout not utf-8"),
        String::from_utf8(out.stderr).expect("stderr not utf-8"),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = trikit(args);
    assert_eq!(code, 0, "args {args:?} exited {code}, stderr: {stderr}");
    stdout
}

fn usage_error(args: &[&str]) -> String {
    let (code, _, stderr) = trikit(args);
    assert_eq!(code, 1, "args {args:?} exited {code}, stderr: {stderr}");
    stderr
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("trikit-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn test_classify_integral() {
    assert_eq!(
        ok(&["classify", "3,2,1"]),
        "{\"integral\":true,\"integral_line\":{\"k\":4,\"n\":4},\
         \"line\":{\"r\":\"9/2\",\"s\":\"9/2\"},\"partition\":\"3,2,1\",\
         \"schema\":\"trikit/1\",\"size\":6,\"t_mid\":\"1/2\",\
         \"t_minus\":\"2/5\",\"t_plus\":\"3/5\",\"triangular\":true}\n"
    );
}

#[test]
fn test_classify_non_triangular() {
    // 2,2 fails the slope test with t^- = t^+ = 1/2.
    assert_eq!(
        ok(&["classify", "2,2"]),
        "{\"integral\":false,\"integral_line\":null,\"line\":null,\
         \"partition\":\"2,2\",\"schema\":\"trikit/1\",\"size\":4,\
         \"t_mid\":null,\"t_minus\":\"1/2\",\"t_plus\":\"1/2\",\
         \"triangular\":false}\n"
    );
}

#[test]
fn test_classify_empty() {
    assert_eq!(
        ok(&["classify", "-"]),
        "{\"integral\":true,\"integral_line\":{\"k\":1,\"n\":1},\
         \"line\":{\"r\":\"1\",\"s\":\"1\"},\"partition\":\"-\",\
         \"schema\":\"trikit/1\",\"size\":0,\"t_mid\":\"1/2\",\
         \"t_minus\":\"0\",\"t_plus\":\"1\",\"triangular\":true}\n"
    );
}

#[test]
fn test_classify_csv() {
    assert_eq!(
        ok(&["classify", "2,2", "--format", "csv"]),
        "integral,false\nintegral_line,null\nline,null\npartition,\"2,2\"\n\
         schema,trikit/1\nsize,4\nt_mid,null\nt_minus,1/2\nt_plus,1/2\n\
         triangular,false\n"
    );
}

#[test]
fn test_list_size_5() {
    assert_eq!(
        ok(&["list", "--size", "5"]),
        "[\"1,1,1,1,1\",\"2,1,1,1\",\"2,2,1\",\"3,2\",\"4,1\",\"5\"]\n"
    );
    assert_eq!(
        ok(&["list", "--size", "5", "--non-integral"]),
        "[\"2,1,1,1\",\"2,2,1\",\"3,2\",\"4,1\"]\n"
    );
}

#[test]
fn test_dyck_count() {
    assert_eq!(ok(&["dyck", "count", "3,2,1"]), "14\n");
    assert_eq!(ok(&["dyck", "count", "4,3,1"]), "23\n");
    assert_eq!(ok(&["dyck", "count", "4,3,2"]), "28\n");
}

#[test]
fn test_dyck_qpoly() {
    assert_eq!(
        ok(&["dyck", "qpoly", "2,1"]),
        "{\"coefficients\":[1,2,1,1],\"degree\":3,\"partition\":\"2,1\",\
         \"schema\":\"trikit/1\",\"string\":\"q^3 + q^2 + 2q + 1\"}\n"
    );
    // Coefficients are ascending in q; at q = 1 this is the path count 14.
    assert_eq!(
        ok(&["dyck", "qpoly", "3,2,1"]),
        "{\"coefficients\":[1,3,3,3,2,1,1],\"degree\":6,\"partition\":\"3,2,1\",\
         \"schema\":\"trikit/1\",\
         \"string\":\"q^6 + q^5 + 2q^4 + 3q^3 + 3q^2 + 3q + 1\"}\n"
    );
}

#[test]
fn test_dyck_qtpoly() {
    assert_eq!(
        ok(&["dyck", "qtpoly", "2,1"]),
        "{\"partition\":\"2,1\",\"schema\":\"trikit/1\",\
         \"string\":\"q^3 + q^2t + qt^2 + qt + t^3\",\"symmetric\":true,\
         \"terms\":{\"q t\":1,\"q t^2\":1,\"q^2 t\":1,\"q^3\":1,\"t^3\":1}}\n"
    );
}

#[test]
fn test_dyck_qtpoly_full_top_antidiagonal() {
    // Every monomial q^i t^j with i + j = 6 appears at the top of A_{321}.
    let stdout = ok(&["dyck", "qtpoly", "3,2,1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["symmetric"], true);
    let terms = v["terms"].as_object().expect("terms map");
    assert_eq!(terms.len(), 14);
    for key in [
        "q^6", "q^5 t", "q^4 t^2", "q^3 t^3", "q^2 t^4", "q t^5", "t^6",
    ] {
        assert_eq!(terms[key], 1, "missing top term {key}");
    }
}

#[test]
fn test_dyck_schur() {
    assert_eq!(
        ok(&["dyck", "schur", "4,2"]),
        "{\"2,2\":1,\"4,1\":1,\"6\":1}\n"
    );
}

#[test]
fn test_dyck_bizley() {
    assert_eq!(ok(&["dyck", "bizley", "--m", "9", "--n", "3"]), "22\n");
    assert_eq!(ok(&["dyck", "bizley", "--m", "6", "--n", "4"]), "23\n");
    assert_eq!(ok(&["dyck", "bizley", "--m", "2", "--n", "2"]), "2\n");
    assert_eq!(ok(&["dyck", "bizley", "--m", "3", "--n", "3"]), "5\n");
}

#[test]
fn test_dyck_delta() {
    assert_eq!(
        ok(&["dyck", "delta", "2", "1"]),
        "{\"k\":1,\"n\":2,\"schema\":\"trikit/1\",\"string\":\"q + t\",\
         \"symmetric\":true,\"terms\":{\"q\":1,\"t\":1}}\n"
    );
}

#[test]
fn test_park_count() {
    // tau_{4,4} at height 4 recovers the classical parking-function count.
    assert_eq!(ok(&["park", "count", "3,2,1", "--height", "4"]), "125\n");
    assert_eq!(ok(&["park", "count", "1", "--height", "2"]), "3\n");
}

#[test]
fn test_park_enumerator() {
    assert_eq!(
        ok(&["park", "enumerator", "1", "--height", "2"]),
        "{\"1,1\":\"1\",\"2\":\"q\"}\n"
    );
}

#[test]
fn test_park_bizley_variant() {
    // The two series normalizations disagree at the smallest non-coprime grid.
    assert_eq!(
        ok(&["park", "bizley", "--m", "2", "--n", "2"]),
        "{\"agree\":false,\"count\":3,\"m\":2,\"n\":2,\
         \"schema\":\"trikit/1\",\"variant\":\"2\"}\n"
    );
}

#[test]
fn test_poset_join_meet() {
    assert_eq!(ok(&["poset", "join", "2,2,1", "3,2"]), "\"3,2,1\"\n");
    assert_eq!(ok(&["poset", "meet", "2,2,1", "3,2"]), "\"2,1\"\n");
}

#[test]
fn test_poset_dominance() {
    assert_eq!(
        ok(&["poset", "dominance", "--size", "6"]),
        "[\"1,1,1,1,1,1\",\"2,1,1,1,1\",\"2,2,1,1\",\"3,2,1\",\"4,2\",\
         \"5,1\",\"6\"]\n"
    );
}

#[test]
fn test_poset_hasse_json() {
    let stdout = ok(&["poset", "hasse", "--max-size", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["schema"], "trikit/1");
    assert_eq!(v["max_size"], 2);
    let nodes = v["nodes"].as_array().expect("nodes array");
    let parts: Vec<&str> = nodes
        .iter()
        .map(|n| n["partition"].as_str().unwrap())
        .collect();
    assert_eq!(parts, ["-", "1", "1,1", "2"]);
    assert_eq!(v["edges"], serde_json::json!([[0, 1], [1, 2], [1, 3]]));
    // Exact coordinates ride along with the float embedding.
    assert_eq!(nodes[2]["x"], "3/2");
    assert_eq!(nodes[2]["y"], "1/2");
    // Conjugate partitions embed mirror-symmetrically.
    let px2 = nodes[2]["px"].as_f64().unwrap();
    let px3 = nodes[3]["px"].as_f64().unwrap();
    assert_eq!(px2, -px3);
    assert_eq!(nodes[2]["py"], nodes[3]["py"]);
}

#[test]
fn test_poset_hasse_dot() {
    let stdout = ok(&["poset", "hasse", "--max-size", "2", "--format", "dot"]);
    assert!(stdout.starts_with("digraph hasse {\n"));
    assert!(stdout.ends_with("}\n"));
    assert!(stdout.contains("  rankdir=BT;\n"));
    assert!(stdout.contains("n0 [label=\"-\", pos=\"0.0000,0.0000!\""));
    assert!(stdout.contains("exact_x=\"3/2\""));
    assert!(stdout.contains("  n0 -> n1;\n"));
    assert!(stdout.contains("  n1 -> n2;\n"));
    assert!(stdout.contains("  n1 -> n3;\n"));
}

#[test]
fn test_out_flag() {
    let path = temp_path("count.txt");
    let (code, stdout, _) = trikit(&["dyck", "count", "3,2,1", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "14\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn test_byte_stability() {
    for args in [
        &["classify", "3,2,1"][..],
        &["dyck", "qtpoly", "3,2"][..],
        &["poset", "hasse", "--max-size", "4"][..],
    ] {
        assert_eq!(ok(args), ok(args), "unstable output for {args:?}");
    }
}

#[test]
fn test_usage_and_domain_errors() {
    let err = usage_error(&["classify", "1,2"]);
    assert_eq!(
        err,
        "error: invalid partition \"1,2\": parts must be weakly decreasing\n"
    );
    let err = usage_error(&["park", "enumerator", "2,1", "--height", "2"]);
    assert!(err.contains("height must exceed the number of parts"));
    let err = usage_error(&["classify", "2,1", "--format", "dot"]);
    assert!(err.contains("dot output is only available for poset hasse"));
    usage_error(&["list"]);
    usage_error(&["frobnicate"]);
    usage_error(&["dyck", "count", "a,b"]);
}

#[test]
fn test_help_and_version_exit_zero() {
    ok(&["--help"]);
    ok(&["--version"]);
    ok(&["dyck", "--help"]);
}

#[test]
fn test_verify_geometry_human() {
    let stdout = ok(&["verify", "geometry"]);
    assert!(stdout.contains("criterion 1 (census-counts): PASS"));
    assert!(stdout.contains("criterion 2 (table-1): PASS"));
    assert!(stdout.contains("criterion 3 (non-integral): PASS"));
    assert!(stdout.ends_with("verify geometry: PASS (exit 0)\n"));
}

#[test]
fn test_verify_report_json() {
    let report = temp_path("report.json");
    let stdout = ok(&[
        "verify",
        "geometry",
        "--format",
        "json",
        "--report",
        report.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["schema"], "trikit/1");
    assert_eq!(v["suite"], "geometry");
    assert_eq!(v["exit_code"], 0);
    let criteria = v["criteria"].as_array().expect("criteria array");
    assert_eq!(criteria.len(), 3);
    assert!(criteria.iter().all(|c| c["passed"] == true));
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(file["suite"], "geometry");
    assert_eq!(file["exit_code"], 0);
    std::fs::remove_file(&report).ok();
}

#[test]
fn test_verify_dyck_with_max_size() {
    let stdout = ok(&["verify", "dyck", "--max-size", "14"]);
    assert!(stdout.ends_with("verify dyck: PASS (exit 0)\n"));
}

#[test]
fn test_verify_schur_report_pins_discrepancies() {
    let report = temp_path("schur-report.json");
    ok(&[
        "verify",
        "schur",
        "--max-size",
        "12",
        "--report",
        report.to_str().unwrap(),
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["exit_code"], 0);
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 2);
    // Criterion 12 carries exactly the four pinned reference discrepancies.
    let hook = criteria
        .iter()
        .find(|c| c["number"] == 12)
        .expect("criterion 12 present");
    let findings = hook["findings"].as_array().unwrap();
    assert_eq!(findings.len(), 4);
    assert!(findings
        .iter()
        .all(|f| f["classification"] == "paper-discrepancy"));
    std::fs::remove_file(&report).ok();
}

#[test]
fn test_verify_unknown_suite() {
    usage_error(&["verify", "nonsense"]);
}
