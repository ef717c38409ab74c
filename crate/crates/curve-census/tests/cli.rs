//! End-to-end tests of the installed binary.

use curve_census::cli::{OutputRecord, TableRow};
use curve_census::{Census, SingSpec};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curve-census"))
        .args(args)
        .env("CURVE_CENSUS_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn count_prints_the_symbolic_polynomial() {
    let out = run(&["count", "--sing", "A2", "--n", "0", "--symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "12*d^2 - 36*d + 24");
}

#[test]
fn count_evaluates_at_a_degree() {
    let out = run(&["count", "--sing", "D4", "--n", "1", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "6");

    let out = run(&["count", "--sing", "E6", "--n", "0", "--d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "147");
}

#[test]
fn count_with_both_flags_prints_both_lines() {
    let out = run(&["count", "--sing", "A1", "--n", "0", "--d", "3", "--symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = stdout_of(&out);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines, vec!["3*d^2 - 6*d + 3", "12"]);
}

#[test]
fn count_rejects_unsupported_tags() {
    for tag in ["A8", "D3", "E8", "F4", "household"] {
        let out = run(&["count", "--sing", tag]);
        assert_eq!(out.status.code(), Some(2), "tag {tag} must be rejected");
        assert!(stderr_of(&out).contains("error:"));
    }
}

#[test]
fn count_warns_below_the_validity_bound() {
    let out = run(&["count", "--sing", "A4", "--n", "0", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "-60");
    let stderr = stderr_of(&out);
    assert!(stderr.contains("warning:"), "missing warning: {stderr}");
    assert!(stderr.contains("d >= 5"), "warning must name the bound: {stderr}");

    let out = run(&["count", "--sing", "A4", "--n", "0", "--d", "5"]);
    assert!(stderr_of(&out).is_empty(), "no warning at the bound");
}

#[test]
fn count_json_record_round_trips() {
    let out = run(&["count", "--sing", "A4", "--n", "1", "--d", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).expect("valid json");
    assert_eq!(record.singularity, "A4");
    assert_eq!(record.n, 1);
    assert_eq!(record.m, None);
    assert_eq!(record.d, Some(2));
    let census = Census::new();
    let poly = census.n_final(SingSpec::parse("A4").unwrap(), 1).unwrap();
    assert_eq!(record.polynomial, poly.to_string());
    assert_eq!(record.evaluation, Some(poly.eval(2).to_string()));
    assert!(record.warning.is_some(), "d = 2 sits below the bound");

    let out = run(&["count", "--sing", "A4", "--n", "1", "--d", "7", "--json"]);
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).expect("valid json");
    assert_eq!(record.warning, None, "no warning at d = 7");
}

#[test]
fn hidden_marked_count_command_works() {
    let out = run(&["count-p", "--sing", "A2", "--n", "0", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "10*d^2 - 48*d + 48");

    let out = run(&["count-p", "--sing", "A7", "--n", "0", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2), "A7 supports only m = 0");

    let out = run(&["count-p", "--sing", "A1", "--n", "0", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2), "A1 has no marked counts");
}

#[test]
fn table_csv_round_trips() {
    let out = run(&["table", "--d-min", "2", "--d-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = stdout_of(&out);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("singularity,n,2,3,4,5"));

    let census = Census::new();
    let mut rows = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 6, "bad row: {line}");
        let spec = SingSpec::parse(cells[0]).unwrap();
        let n: u32 = cells[1].parse().unwrap();
        let poly = census.n_final(spec, n).unwrap();
        for (offset, cell) in cells[2..].iter().enumerate() {
            let d = 2 + offset as i64;
            let expect = poly.eval(d);
            assert_eq!(
                cell.parse::<i64>().unwrap(),
                i64::try_from(expect.to_integer()).unwrap(),
                "cell ({}, n={n}, d={d})",
                cells[0]
            );
        }
        rows += 1;
    }
    assert_eq!(rows, SingSpec::all().len() * 3, "one row per (type, n)");
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "--d-min", "2", "--d-max", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<TableRow> = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(rows.len(), SingSpec::all().len() * 3);
    let census = Census::new();
    for row in &rows {
        let spec = SingSpec::parse(&row.singularity).unwrap();
        let poly = census.n_final(spec, row.n).unwrap();
        assert_eq!(row.polynomial, poly.to_string());
        assert_eq!(row.values.len(), 3);
        for (d_text, value) in &row.values {
            let d: i64 = d_text.parse().unwrap();
            assert_eq!(value, &poly.eval(d).to_string(), "row {} n={}", row.singularity, row.n);
        }
    }
}

#[test]
fn table_rejects_bad_ranges() {
    for args in [
        ["table", "--d-min", "0", "--d-max", "5"],
        ["table", "--d-min", "6", "--d-max", "5"],
        ["table", "--d-min", "2", "--d-max", "51"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?} must be rejected");
    }
    // The cap is configurable.
    let out = run(&["table", "--d-min", "2", "--d-max", "51", "--cap", "60"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn derive_prints_the_closed_forms() {
    let cases = [
        (["derive", "A", "3"], "f30"),
        (["derive", "A", "4"], "f40 - 3*f21^2/f02"),
        (["derive", "D", "7"], "f50 - 5*f31^2/(3*f12)"),
    ];
    for (args, want) in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout_of(&out).trim(), want);
    }
}

#[test]
fn derive_rejects_indices_below_the_range() {
    for args in [["derive", "A", "2"], ["derive", "D", "5"], ["derive", "B", "4"]] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?} must be rejected");
    }
}

fn classify_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("curve-census-test-{name}.json"));
    std::fs::write(&path, contents).expect("write germ file");
    path
}

#[test]
fn classify_recognizes_the_model_germs() {
    let cases = [
        ("a4", r#"[{"i":0,"j":2,"c":"1"}, {"i":5,"j":0,"c":"1"}]"#, "A4"),
        ("d6", r#"[{"i":1,"j":2,"c":"1"}, {"i":5,"j":0,"c":"1"}]"#, "D6"),
        ("e6", r#"[{"i":0,"j":3,"c":"1"}, {"i":4,"j":0,"c":"1"}]"#, "E6"),
    ];
    for (name, contents, want) in cases {
        let path = classify_file(name, contents);
        let out = run(&["classify", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "classify {name}");
        let stdout = stdout_of(&out);
        let tag = stdout.split_whitespace().next().unwrap_or("");
        assert_eq!(tag, want, "full output: {stdout}");
        std::fs::remove_file(&path).ok();
    }
}

#[test]
fn classify_reports_points_off_the_curve() {
    let path = classify_file(
        "off-curve",
        r#"{"terms": [{"i":0,"j":0,"c":"1"}, {"i":0,"j":2,"c":"1"}, {"i":3,"j":0,"c":"1"}], "point": ["0", "0"]}"#,
    );
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    std::fs::remove_file(&path).ok();
}

#[test]
fn classify_rejects_malformed_files() {
    let path = classify_file("malformed", "not json at all");
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();

    let out = run(&["classify", "/nonexistent/germ.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_the_dual_route() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = stdout_of(&out);
    assert!(stdout.contains("dual[D5"), "dual-route checks must be reported");
    assert!(stdout.contains("all"), "summary line expected");
    assert!(stdout.contains("passed"), "summary line expected");
    assert!(!stdout.contains("\x1b["), "no ANSI codes when color is off");
}
