use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dunkl-fp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

/// Value of `key = <number>` in an evolve summary line.
fn summary_value(line: &str, key: &str) -> f64 {
    let rest = &line[line.find(key).unwrap_or_else(|| panic!("{key} missing in {line}")) + key.len()..];
    rest.trim_start_matches([' ', '=']).split(',').next().unwrap().trim().parse().unwrap()
}

#[test]
fn tables_match_golden_files() {
    for (args, name) in [
        (vec!["table", "1"], "table1.csv"),
        (vec!["table", "2"], "table2_even.csv"),
        (vec!["table", "2", "--parity", "odd"], "table2_odd.csv"),
    ] {
        let o = run(&args);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), golden(name), "{args:?}");
    }
}

#[test]
fn figures_match_golden_files_and_are_deterministic() {
    for fig in ["1a", "1b", "2a", "2b"] {
        let first = stdout(&run(&["figure", fig]));
        let second = stdout(&run(&["figure", fig]));
        assert_eq!(first, second);
        assert_eq!(first, golden(&format!("figure_{fig}.csv")), "figure {fig}");
        let header = first.lines().find(|l| !l.starts_with('#')).unwrap();
        assert_eq!(header, "x,curve1,curve2,curve3");
        assert_eq!(first.lines().filter(|l| !l.starts_with('#')).count(), 1001);
    }
}

#[test]
fn table_writes_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1.csv");
    let o = run(&["table", "1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(path).unwrap(), golden("table1.csv"));
}

#[test]
fn table1_second_row() {
    let text = golden("table1.csv");
    assert_eq!(text.lines().nth(2).unwrap(), "11/2,7/2,x^{-1} J_7(2x),x^{-1} J_4(2x)");
}

#[test]
fn full_line_figure_is_mirrored_by_parity() {
    let o = run(&["figure", "1b", "--full-line", "--points", "50"]);
    assert!(o.status.success());
    let rows: Vec<Vec<f64>> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('x'))
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 100);
    for (neg, pos) in rows[..50].iter().zip(rows[50..].iter().rev()) {
        assert_eq!(neg[0], -pos[0]);
        for c in 1..4 {
            assert_eq!(neg[c], -pos[c]);
        }
    }
}

#[test]
fn unwritable_output_exits_2() {
    let o = run(&["table", "1", "--out", "/nonexistent-dir/table.csv"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["figure", "2a", "--out", "/nonexistent-dir/fig.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [vec!["table", "3"], vec!["figure", "3c"], vec!["verify", "everything"], vec!["frobnicate"]] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_algebra_passes() {
    let o = run(&["verify", "algebra"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() >= 5);
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_numeric_passes() {
    let o = run(&["verify", "numeric"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("spectrum matches"));
    assert!(out.contains("decay"));
}

#[test]
fn injected_sign_fault_fails_and_is_named() {
    let o = run(&["verify", "all", "--inject-fault", "tp-square-sign"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let failed: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 1, "{out}");
    assert!(failed[0].contains("TP square closed form"));
    assert!(stderr(&o).contains("TP square closed form"));
}

#[test]
fn evolve_even_mode_matches_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("traj.csv");
    let o = bin().arg("evolve").arg(config("oscillator_even_n1.conf")).arg("--out").arg(&csv).output().unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    let line = stdout(&o);
    let (measured, analytic) = (summary_value(&line, "lambda_measured"), summary_value(&line, "lambda_analytic"));
    assert!((measured - analytic).abs() < 1e-2 * analytic, "{line}");
    let traj = std::fs::read_to_string(csv).unwrap();
    assert!(traj.starts_with("t,x,value\n"));
}

#[test]
fn evolve_stationary_mode_does_not_decay() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("traj.csv");
    let o = bin().arg("evolve").arg(config("oscillator_stationary.conf")).arg("--out").arg(&csv).output().unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(summary_value(&stdout(&o), "lambda_measured").abs() < 1e-6);
}

#[test]
fn evolve_without_out_streams_csv_and_reports_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(
        &path,
        "problem = oscillator\nparity = odd\na = 4.3\nmu = 0.6\ngamma = -0.48\nn = 1\ngrid = 400\ndt = 0.005\nsteps = 20\n",
    )
    .unwrap();
    let o = bin().arg("evolve").arg(&path).output().unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("t,x,value\n"));
    assert_eq!(stdout(&o).lines().count(), 1 + 21 * 400);
    assert!(stderr(&o).contains("lambda_measured"));
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let base = std::fs::read_to_string(config("oscillator_even_n1.conf")).unwrap();
    let cases = [
        ("missing_dt", base.lines().filter(|l| !l.starts_with("dt")).collect::<Vec<_>>().join("\n"), "'dt'"),
        ("unknown", format!("{base}\nviscosity = 3\n"), "unknown key 'viscosity'"),
        ("malformed", format!("{base}\njust words\n"), "expected 'key = value'"),
        ("bad_gamma", base.replace("gamma = 0.433333333333333333", "gamma = 2"), "gamma"),
    ];
    for (name, text, needle) in cases {
        let path = dir.path().join(format!("{name}.conf"));
        std::fs::write(&path, text).unwrap();
        let o = bin().arg("evolve").arg(&path).output().unwrap();
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).contains(needle), "{name}: {}", stderr(&o));
    }
    let o = bin().arg("evolve").arg(dir.path().join("absent.conf")).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_lists_ladder() {
    let o = bin().arg("spectrum").arg(config("oscillator_odd.conf")).args(["-k", "3", "--grid", "3000"]).output().unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,lambda,lambda_analytic,relative_error"));
    for (n, line) in lines.enumerate() {
        let cols: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(cols[0] as usize, n);
        assert!((cols[1] - cols[2]).abs() < 5e-3 * cols[2].max(1.0), "{line}");
    }
}
