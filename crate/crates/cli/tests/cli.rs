use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plucker"))
}

fn bundled() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../suites/acceptance")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn variety(name: &str) -> String {
    bundled()
        .join("varieties")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn bundled_suite_passes_and_is_reproducible() {
    let suite = bundled().join("suite.json");
    let suite = suite.to_str().unwrap();
    let first = run(&[
        "verify", "--suite", suite, "--format", "json", "--jobs", "4",
    ]);
    let second = run(&[
        "verify", "--suite", suite, "--format", "json", "--jobs", "1",
    ]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(first.stdout, second.stdout);
    let reports: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let reports = reports.as_array().unwrap();
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    assert!(reports.iter().all(|r| r.get("wall_ms").is_none()));
    // the quartic is held back unless asked for
    assert!(!reports
        .iter()
        .any(|r| r["name"] == "dual degree: smooth quartic"));
    let nodal = reports
        .iter()
        .find(|r| r["name"] == "pairing: nodal cubic, line")
        .unwrap();
    assert_eq!(nodal["values"]["lhs"], "5/3");
    assert_eq!(nodal["values"]["rhs"], "5/3");
}

#[test]
fn slow_cases_and_timings_on_request() {
    let suite = bundled().join("suite.json");
    let o = bin()
        .args([
            "verify",
            "--suite",
            suite.to_str().unwrap(),
            "--include-slow",
            "--timings",
            "--format",
            "csv",
        ])
        .env("PLUCKER_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().ends_with(",wall_ms"));
    assert!(text.contains("dual degree: smooth quartic,corollary1,pass,deg_dual=12;dual_degree=12"));
}

#[test]
fn report_order_follows_the_suite() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<String> = (1..=10)
        .rev()
        .map(|n| format!(r#"{{"name": "n{n}", "kind": "chow", "inputs": [{n}]}}"#))
        .collect();
    let suite = write(
        dir.path(),
        "s.json",
        &format!(r#"{{"cases": [{}]}}"#, cases.join(",")),
    );
    let o = run(&[
        "verify", "--suite", &suite, "--jobs", "8", "--format", "csv",
    ]);
    let names: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    let want: Vec<String> = (1..=10).rev().map(|n| format!("n{n}")).collect();
    assert_eq!(names, want);
}

#[test]
fn empty_suite_gives_empty_json() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(dir.path(), "empty.json", r#"{"cases": []}"#);
    let o = run(&["verify", "--suite", &suite, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn mixed_results_exit_one_with_all_rows() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(
        dir.path(),
        "mixed.json",
        r#"{"cases": [
            {"name": "good", "kind": "chow", "inputs": [3], "expected": {"pp": -4}},
            {"name": "bad", "kind": "chow", "inputs": [3], "expected": {"pp": 4}}
        ]}"#,
    );
    let out = dir.path().join("report.csv");
    let o = run(&[
        "verify",
        "--suite",
        &suite,
        "--format",
        "csv",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(out).unwrap();
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.contains("bad,chow,fail,pp=-4;closed_form=-4,pp=4,\"pp: got -4, expected 4\""));
}

#[test]
fn malformed_polynomial_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "broken.json",
        r#"{"ambient_dim": 2, "kind": "hypersurface", "polynomial": "x0*x2 -* x1^2"}"#,
    );
    let suite = write(
        dir.path(),
        "suite.json",
        r#"{"cases": [
            {"name": "broken", "kind": "corollary1", "inputs": ["broken.json"]},
            {"name": "fine", "kind": "quadric-chi", "inputs": [2]}
        ]}"#,
    );
    let o = run(&["verify", "--suite", &suite, "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports[0]["status"], "invalid-input");
    assert_eq!(reports[1]["status"], "pass");

    let o = run(&["dual", dir.path().join("broken.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let missing = run(&[
        "verify",
        "--suite",
        dir.path().join("nope.json").to_str().unwrap(),
    ]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn single_commands() {
    let o = run(&["dual", &variety("conic")]);
    assert_eq!(stdout(&o), "y1^2 - 4*y0*y2\ndegree 2\n");
    let o = run(&["dual", &variety("line"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["dimension"].as_u64(), v["degree"].as_i64()),
        (Some(0), Some(1))
    );

    let o = run(&["census", &variety("cuspidal_cubic"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cusp_points"], serde_json::json!(["[1:0:0]"]));
    // unibranch, so chi = 2 and the cusp adds one
    assert_eq!(
        (v["chi"].as_i64(), v["chi_bar"].as_i64()),
        (Some(2), Some(3))
    );

    assert_eq!(stdout(&run(&["chi", &variety("quadric_surface")])), "4\n");
    assert_eq!(stdout(&run(&["chi", "--quadric", "5"])), "6\n");
    assert_eq!(
        stdout(&run(&["profile", &variety("nodal_cubic")])),
        "2 3 0\n"
    );
    assert_eq!(stdout(&run(&["chow", "-n", "3", "--pp"])), "-4\n");

    let o = run(&[
        "chow",
        "-n",
        "4",
        "--ext-identity",
        "--a",
        "2/3",
        "--p1",
        "-1",
        "--p2",
        "7/2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["expanded"], v["closed"]);
}

#[test]
fn computation_errors_exit_one() {
    let o = run(&["census", &variety("smooth_cubic")]);
    assert_eq!(o.status.code(), Some(0));
    // the cusps of the dual sextic are not rational, so they cannot be located
    let dir = tempfile::tempdir().unwrap();
    let sextic = write(
        dir.path(),
        "sextic.json",
        r#"{"ambient_dim": 2, "kind": "hypersurface", "polynomial": "x0^6 - 2*x0^3*x1^3 + x1^6 - 2*x0^3*x2^3 - 2*x1^3*x2^3 + x2^6"}"#,
    );
    let o = run(&["census", &sextic]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("irrational"));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(&["chow", "-n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
