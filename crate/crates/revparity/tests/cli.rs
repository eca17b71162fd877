//! End-to-end tests of the `revparity` binary: exit-code contract,
//! subcommand output, and pipeline soundness (convert output always
//! verifies).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_revparity"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn analyze_reports_the_minimum_extra_bits() {
    let output = run(&["analyze", fixture("half_adder.pla").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("minimum extra bits: 2"), "{text}");
    assert!(text.contains("planned garbage: 2"));
    assert!(text.contains("planned ancilla: 2"));

    let output = run(&["analyze", fixture("full_adder.pla").to_str().unwrap()]);
    assert!(stdout_of(&output).contains("minimum extra bits: 3"));
}

#[test]
fn analyze_rejects_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.pla");
    std::fs::write(&path, ".i 2\n.o 1\n0 1\n.e\n").unwrap();
    let output = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&output.stderr).is_empty());
}

#[test]
fn convert_emits_the_reference_half_adder_rows() {
    let output = run(&["convert", fixture("half_adder.pla").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    for row in ["0000 0000", "0100 1000", "1000 1011", "1100 0101"] {
        assert!(text.contains(row), "missing {row} in {text}");
    }
}

#[test]
fn convert_output_always_verifies() {
    let dir = tempfile::tempdir().unwrap();
    for (input, complete) in [
        (fixture("half_adder.pla").display().to_string(), false),
        (fixture("full_adder.pla").display().to_string(), true),
        (fixture("cnot.pla").display().to_string(), false),
        ("rd:5".to_string(), false),
        ("rd:5".to_string(), true),
    ] {
        let out_path = dir.path().join("converted.pla");
        let mut args = vec!["convert", &input, "-o", out_path.to_str().unwrap()];
        if complete {
            args.push("--complete");
        }
        let output = run(&args);
        assert_eq!(output.status.code(), Some(0), "convert {input}");
        let verify = run(&["verify", out_path.to_str().unwrap()]);
        assert_eq!(
            verify.status.code(),
            Some(0),
            "verify after convert {input}"
        );
    }
}

#[test]
fn convert_of_parity_preserving_input_is_a_no_op() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.txt");
    let output = run(&[
        "convert",
        fixture("fredkin.pla").to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("# ancilla 0"));
    assert!(text.contains("# garbage 0"));
    let report = std::fs::read_to_string(report_path).unwrap();
    assert!(report.contains("garbage: 0"));
    assert!(report.contains("parity_preserving: true"));
}

#[test]
fn convert_reports_table_counts_for_generators() {
    let output = run(&[
        "convert",
        "rd:8",
        "-o",
        "/dev/null",
        "--report",
        "-",
        "--csv",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(
        text.lines().any(|l| l.starts_with("rd84,8,4,8,4,")),
        "{text}"
    );
}

#[test]
fn format_flags_are_mutually_exclusive() {
    let output = run(&["convert", "rd:3", "--csv", "--text"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_flags_the_defective_rows() {
    let output = run(&[
        "verify",
        fixture("full_adder_bad_parity.pla").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("parity violation at row 10100"), "{text}");
}

#[test]
fn verify_rejects_non_square_inputs() {
    let output = run(&["verify", fixture("full_adder.pla").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn count_prints_exact_values() {
    let output = run(&["count", "3"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output).trim(), "576");

    let output = run(&["count", "3", "--oracle"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).contains("enumeration agrees: 576"));

    let output = run(&["count", "4"]);
    assert_eq!(stdout_of(&output).trim(), "1625702400");

    assert_eq!(run(&["count", "0"]).status.code(), Some(2));
    assert_eq!(run(&["count", "5", "--oracle"]).status.code(), Some(2));
}

#[test]
fn bench_emits_csv_over_generators_and_directories() {
    let output = run(&["bench", "rd:5", "rd:7", "rd:8", "rd:10", "rd:20"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,inputs,outputs,garbage,ancilla,runtime_ms,reversible,parity_preserving,bound"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows[0].starts_with("rd53,5,3,5,3,"));
    assert!(rows[1].starts_with("rd73,7,3,7,3,"));
    assert!(rows[2].starts_with("rd84,8,4,8,4,"));
    assert!(rows[3].starts_with("rd10_4,10,4,9,3,"));
    assert!(rows[4].starts_with("rd20_5,20,5,19,4,"));

    // An empty directory yields just the header.
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["bench", dir.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output).lines().count(), 1);

    // Failures land on stderr, not in the CSV, and are not fatal.
    let output = run(&["bench", "missing.pla", "rd:5"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output).lines().count(), 2);
    assert!(String::from_utf8_lossy(&output.stderr).contains("missing.pla"));
}

#[test]
fn rdgen_writes_a_plain_pla() {
    let output = run(&["rdgen", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let expected =
        ".i 3\n.o 2\n000 00\n001 01\n010 01\n011 10\n100 01\n101 10\n110 10\n111 11\n.e\n";
    assert_eq!(stdout_of(&output), expected);

    assert_eq!(run(&["rdgen", "25"]).status.code(), Some(2));
}

#[test]
fn strict_mode_propagates_to_parsing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("onset.pla");
    std::fs::write(&path, ".i 2\n.o 1\n11 1\n.e\n").unwrap();
    assert_eq!(
        run(&["analyze", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["analyze", path.to_str().unwrap(), "--strict"])
            .status
            .code(),
        Some(2)
    );
}
