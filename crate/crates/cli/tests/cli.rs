use std::process::{Command, Output};

use genbern::text::parse_bipoly;
use genbern::Rational;

fn genbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genbern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_theorem_instance() {
    let out = genbern(&["verify-theorem", "--n", "1", "--l", "1", "--r", "1", "--s", "1", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("residual: 0\n"));
}

#[test]
fn verify_theorem_certifies_lambda() {
    let out = genbern(&["verify-theorem", "--n", "1", "--l", "2", "--r", "1", "--s", "2", "--certify-lambda"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("points: 0, 1, 2, 3, 4, 5, 6\n"));
}

#[test]
fn verify_theorem_needs_lambda_choice() {
    let out = genbern(&["verify-theorem", "--n", "1", "--l", "1", "--r", "1", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_k3() {
    let out = genbern(&["eval", "--case", "k3", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("status: verified"));
    assert!(text.contains("residual: 0\n"));
}

#[test]
fn eval_reports_adjudication() {
    let out = genbern(&["eval", "--case", "t24", "--n", "2", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("status: adjudicated"));
    assert!(text.contains("reading `r = 0`: holds"));
}

#[test]
fn classical_table() {
    let out = genbern(&["table", "--kind", "classical", "--max", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,value\n0,1\n1,-1/2\n");
}

#[test]
fn generalized_table_json() {
    let out = genbern(&["table", "--kind", "generalized", "--max", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[1]["value"], "(-1/2)*a");
    assert_eq!(v[2]["value"], "(-1/12)*a + (1/4)*a^2");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["eval", "--case", "t4", "--n", "1", "--l", "1", "--r", "1", "--m", "2", "--x", "1/0"][..],
        &["eval", "--case", "nope", "--n", "1"],
        &["eval", "--case", "t3", "--n", "1"],
        &["table", "--kind", "other", "--max", "3"],
        &["suite", "--cases", "t3", "--jobs", "0"],
        &["suite", "--config", "/nonexistent/config.json"],
    ] {
        let out = genbern(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn suite_from_flags() {
    let out = genbern(&["suite", "--cases", "t3", "--max-n", "2", "--max-l", "2", "--max-r", "1", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 18);
    assert_eq!(v["summary"]["verified"], 18);
    assert!(String::from_utf8(out.stderr).unwrap().contains("18 instances"));
}

#[test]
fn suite_from_config_file() {
    let dir = std::env::temp_dir().join(format!("genbern-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.json");
    std::fs::write(
        &path,
        r#"{"max_n": 2, "max_l": 1, "max_r": 1, "max_s": 1, "max_m": 2,
            "lambda_points": ["0", "-3/2"], "alpha_points": ["symbolic", "1/2"],
            "cases": ["theorem_le1", "nielsen_f10", "k3"], "parallelism": 2}"#,
    )
    .unwrap();
    let out = genbern(&["suite", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["counterexample"], 0);
    assert_eq!(v["config"]["lambda_points"], serde_json::json!(["0", "-3/2"]));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_file_of_instances() {
    let dir = std::env::temp_dir().join(format!("genbern-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cases.json");
    std::fs::write(
        &path,
        r#"[{"id": "e1", "params": {"n": 2, "l": 3}},
            {"id": "s20", "params": {"n": 1, "r": 1, "t": "1/3", "alpha": "symbolic"}}]"#,
    )
    .unwrap();
    let out = genbern(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["status"], "verified");
    assert_eq!(v[1]["status"], "verified");
    std::fs::remove_dir_all(dir).ok();
}

/// The stated reading of cor3a leaves a residual for r > 1; with α symbolic
/// it must specialize to the residual of the numeric run.
#[test]
fn symbolic_alpha_specializes_to_numeric_run() {
    let base = ["eval", "--case", "cor3a", "--n", "1", "--l", "2", "--r", "2", "--x", "1/2", "--y", "-1/3", "--json"];
    let run = |alpha: &str| {
        let mut args = base.to_vec();
        args.extend(["--alpha", alpha]);
        let out = genbern(&args);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["status"], "adjudicated");
        parse_bipoly(v["residual"].as_str().unwrap()).unwrap()
    };
    let symbolic = run("symbolic");
    assert!(symbolic.alpha_degree().unwrap_or(0) > 0);
    for a in ["3/4", "-2"] {
        let q: Rational = a.parse().unwrap();
        let numeric = run(a);
        assert_eq!(numeric.eval_alpha(&q), symbolic.eval_alpha(&q));
    }
}
