use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn setopt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setopt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixtures() -> (TempDir, PathBuf) {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("fx");
    let o = setopt(&["fixtures", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    (dir, out)
}

fn file(dir: &Path, stem: &str) -> String {
    dir.join(format!("{stem}.json")).to_str().unwrap().to_string()
}

fn assert_one_line_error(o: &Output, code: i32, kind: &str) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("error: kind={kind} message=")), "{err}");
}

#[test]
fn solve_example_ii() {
    let (_d, fx) = fixtures();
    let o = setopt(&["solve", &file(&fx, "example_ii")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["argmin"], serde_json::json!([0.0, 1.0]));
    assert_eq!(v["m_f_q"], serde_json::json!(0.0));
}

#[test]
fn colevel_e14() {
    let (_d, fx) = fixtures();
    let o = setopt(&["colevel", &file(&fx, "e14"), "--lambda", "-3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[[1.0, 0.0]]");
    let o = setopt(&["colevel", &file(&fx, "e14"), "--lambda", "-5"]);
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn colevel_at_set() {
    let (_d, fx) = fixtures();
    let o = setopt(&["colevel", &file(&fx, "lsc_interval"), "--set", "1"]);
    let by_set = stdout(&o);
    let by_level = stdout(&setopt(&["colevel", &file(&fx, "lsc_interval"), "--lambda", "1"]));
    assert_eq!(by_set, by_level);
}

#[test]
fn oracle_random_within_tolerance() {
    let o = setopt(&["oracle", "random", "--seed", "7", "--count", "1000"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["max_deviation"].as_f64().unwrap() <= 1e-9);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["passed"], true);
}

#[test]
fn oracle_on_file() {
    let (_d, fx) = fixtures();
    let o = setopt(&["oracle", &file(&fx, "cone_example")]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn unreachable_oracle_tolerance_is_internal_failure() {
    let o = setopt(&["oracle", "random", "--seed", "1", "--count", "100", "--tol", "1e-300"]);
    assert_one_line_error(&o, 2, "internal");
    // the summary is still printed
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn output_is_deterministic() {
    let (_d, fx) = fixtures();
    for args in [
        vec!["solve".to_string(), file(&fx, "e14")],
        vec!["check".to_string(), file(&fx, "remark_ii")],
        vec!["asymptotic".to_string(), file(&fx, "asymptotic_1d")],
        vec!["oracle".to_string(), "random".into(), "--seed".into(), "3".into(), "--count".into(), "200".into()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = setopt(&args);
        let b = setopt(&args);
        assert!(a.status.success(), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let (_d, fx) = fixtures();
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_setopt"))
            .args(["solve", &file(&fx, "example_ii")])
            .env("SETOPT_THREADS", threads)
            .output()
            .unwrap()
    };
    assert_eq!(run("1").stdout, run("4").stdout);
    assert_one_line_error(&run("zero"), 1, "usage");
}

#[test]
fn fixtures_round_trip() {
    let (_d, fx) = fixtures();
    for (stem, doc) in setopt::fixtures::all() {
        let text = std::fs::read_to_string(fx.join(format!("{stem}.json"))).unwrap();
        let parsed = setopt::ProblemDocument::from_json(&text).unwrap();
        assert_eq!(parsed, doc, "{stem}");
        let problem = setopt::build_problem(&parsed).unwrap();
        assert_eq!(problem.to_document(), doc, "{stem}");
    }
}

#[test]
fn shipped_fixtures_are_current() {
    let (_d, fx) = fixtures();
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for (stem, _) in setopt::fixtures::all() {
        let fresh = std::fs::read_to_string(fx.join(format!("{stem}.json"))).unwrap();
        let old = std::fs::read_to_string(shipped.join(format!("{stem}.json"))).unwrap();
        assert_eq!(fresh, old, "{stem}.json is stale; rerun `setopt fixtures`");
    }
}

#[test]
fn scalarize_writes_csv() {
    let (d, fx) = fixtures();
    let csv_path = d.path().join("field.csv");
    let o = setopt(&["scalarize", &file(&fx, "example_ii"), "--csv", csv_path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x1,psi"));
    assert_eq!(lines.count(), 301);
    assert!(text.contains("\n0.25,0.5\n"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["values"].as_array().unwrap().len(), 301);
}

#[test]
fn asymptotic_flags_and_trace() {
    let (d, fx) = fixtures();
    let trace = d.path().join("trace.csv");
    let o = setopt(&[
        "asymptotic",
        &file(&fx, "asymptotic_1d"),
        "--directions",
        "1;-1",
        "--t-max",
        "1e4",
        "--steps",
        "20",
        "--lambdas",
        "0,-0.5,-0.9",
        "--trace-csv",
        trace.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["condition_12"]["holds"], false);
    assert_eq!(v["condition_12"]["witness"], serde_json::json!([-1.0]));
    assert_eq!(v["estimates"].as_array().unwrap().len(), 2);
    assert_eq!(v["horizon"]["directions"], serde_json::json!([[-1.0]]));
    let rows = std::fs::read_to_string(&trace).unwrap().lines().count();
    assert_eq!(rows, 1 + 2 * 20);
}

#[test]
fn check_flags() {
    let (_d, fx) = fixtures();
    let o = setopt(&["check", &file(&fx, "interval_srgi"), "--srgi", "--transfer"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"]["srgi"]["verdict"], "holds");
    assert_eq!(v["checks"]["transfer_closed"]["verdict"], "holds");
    assert!(v["checks"].get("sgicc").is_none());

    let o = setopt(&["check", &file(&fx, "e14"), "--all"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorems"]["coercive"], true);
    assert_eq!(v["sgicc"]["verdict"], "holds");

    let o = setopt(&["check", &file(&fx, "remark_ii"), "--srgi", "--restrict", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"]["srgi"]["verdict"], "fails");
}

#[test]
fn usage_and_validation_errors_exit_1() {
    assert_one_line_error(&setopt(&["frobnicate"]), 1, "usage");
    assert_one_line_error(&setopt(&[]), 1, "usage");
    assert_one_line_error(&setopt(&["solve", "/nonexistent/problem.json"]), 1, "io");

    let (d, fx) = fixtures();
    assert_one_line_error(&setopt(&["colevel", &file(&fx, "e14")]), 1, "usage");
    assert_one_line_error(&setopt(&["colevel", &file(&fx, "e14"), "--lambda", "abc"]), 1, "usage");
    assert_one_line_error(&setopt(&["asymptotic", &file(&fx, "e14"), "--directions", "0,0"]), 1, "zero_direction");

    let bad = d.path().join("bad.json");
    std::fs::write(&bad, "{\"schema_version\": \"1\"").unwrap();
    assert_one_line_error(&setopt(&["solve", bad.to_str().unwrap()]), 1, "schema");

    let text = std::fs::read_to_string(file(&fx, "constant")).unwrap();
    std::fs::write(&bad, text.replace("\"q\": [\n      1.0,", "\"q\": [\n      -1.0,")).unwrap();
    assert_one_line_error(&setopt(&["solve", bad.to_str().unwrap()]), 1, "order_unit_not_interior");
}

#[test]
fn help_exits_zero() {
    let o = setopt(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("colevel"));
}
