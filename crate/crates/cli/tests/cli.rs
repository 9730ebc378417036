//! End-to-end checks of the binary: exit codes, output shapes, JSON
//! validity, and determinism under a fixed seed.

use std::process::{Command, Output};

fn dnacode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnacode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn tables_contains_the_codon_rows() {
    let out = dnacode(&["tables"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2+3w\t(2,3)\tGT"));
    assert!(text.contains("TG\t1011"));
    assert!(text.contains("units of R (8)"));
    assert!(text.contains("<2w> (2 elements): 0, 2w"));
}

#[test]
fn build_reports_the_engine_cardinality() {
    let out = dnacode(&[
        "build", "--family", "cyclic", "--n", "7", "--g", "x-1", "--a", "1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cardinality: 134217728"));

    let out = dnacode(&[
        "build", "--family", "gamma", "--n", "7", "--f1", "x-1", "--f2", "x-1",
    ]);
    assert!(out.status.success());
    // 256^6
    assert!(stdout(&out).contains("cardinality: 281474976710656"));
}

#[test]
fn ring_flag_lifts_cyclic_codes_to_s() {
    let out = dnacode(&[
        "build", "--family", "cyclic", "--ring", "s", "--n", "3", "--g", "x^2+x+1", "--a",
        "x^2+x+1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("code over S"));
    assert!(text.contains("cardinality: 256"));
    // contradictory ring selections are usage errors
    let out = dnacode(&["build", "--family", "gamma", "--ring", "r", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dnacode(&[
        "build", "--family", "skew", "--ring", "s", "--n", "2", "--f", "x-1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_divisibility_chain_exits_2() {
    let out = dnacode(&[
        "build", "--family", "cyclic", "--n", "7", "--g", "x-1", "--a", "x^2+x+1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divisibility chain"));
}

#[test]
fn even_length_exits_2() {
    let out = dnacode(&[
        "build", "--family", "cyclic", "--n", "4", "--g", "1", "--a", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_green_ids_exit_0() {
    for id in ["tables", "lemmas", "gray-linearity", "discrepancies"] {
        let out = dnacode(&["verify", id]);
        assert_eq!(out.status.code(), Some(0), "id {id}");
    }
}

#[test]
fn verify_example34_reports_the_refuted_findings_and_exits_1() {
    let out = dnacode(&["verify", "example34", "--samples", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("cardinality_256_pow_6 = true"));
    assert!(text.contains("contains_all_ones_quotient = false"));
    assert!(text.contains("dna_reverse_complement_closed = false"));
}

#[test]
fn verify_cor33_hypothesis_violation_exits_3() {
    let out = dnacode(&[
        "verify",
        "cor33",
        "--n",
        "7",
        "--f1",
        "x-1",
        "--f2",
        "x-1",
        "--samples",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn export_book_cap_exceeded_exits_4() {
    let out = dnacode(&[
        "export-book",
        "--family",
        "cyclic",
        "--n",
        "7",
        "--g",
        "1",
        "--a",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn export_book_zero_code() {
    let out = dnacode(&[
        "export-book",
        "--family",
        "cyclic",
        "--n",
        "1",
        "--g",
        "x-1",
        "--a",
        "x-1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "AA");
}

#[test]
fn export_book_gc_filter() {
    let out = dnacode(&[
        "export-book",
        "--family",
        "cyclic",
        "--n",
        "1",
        "--g",
        "1",
        "--a",
        "1",
        "--gc",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let words: Vec<&str> = text.trim().lines().collect();
    assert!(!words.is_empty());
    for w in words {
        assert_eq!(w.chars().filter(|&c| c == 'G' || c == 'C').count(), 2);
    }
}

#[test]
fn search_divisors_lists_the_n7_shape() {
    let out = dnacode(&["search-divisors", "--n", "7", "--max-deg", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "3+x");
    let out = dnacode(&["search-divisors", "--n", "4", "--max-deg", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_map_prints_the_literal_gamma_counterexample() {
    let out = dnacode(&["audit-map", "gamma-literal"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("additive: false"));
    assert!(text.contains("counterexample (additive)"));
    let out = dnacode(&["audit-map", "gamma"]);
    assert!(stdout(&out).contains("additive: true"));
}

#[test]
fn json_reports_are_valid_and_deterministic() {
    let run = || {
        stdout(&dnacode(&[
            "verify",
            "thm11-16",
            "--seed",
            "7",
            "--samples",
            "10",
            "--format",
            "json",
        ]))
    };
    let first = run();
    let parsed: serde_json::Value = serde_json::from_str(&first).expect("valid JSON");
    assert_eq!(parsed["command"], "verify");
    assert_eq!(parsed["seed"], 7);
    assert!(parsed["findings"].as_array().is_some_and(|f| !f.is_empty()));
    assert_eq!(first, run());
}

#[test]
fn output_file_written() {
    let dir = std::env::temp_dir().join("dnacode-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("book.txt");
    let out = dnacode(&[
        "export-book",
        "--family",
        "cyclic",
        "--n",
        "1",
        "--g",
        "x-1",
        "--a",
        "x-1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "AA");
}
