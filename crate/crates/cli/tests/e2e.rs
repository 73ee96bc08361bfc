use std::process::{Command, Output};
use std::time::{Duration, Instant};

use lumbral_cli::TriangleDoc;
use lumbral_core::algebra::rat;
use lumbral_core::kernels::Lambda;
use lumbral_core::triangles::degenerate_stirling2;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lumbral")).args(args).env("NO_COLOR", "1").output().expect("spawn lumbral")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn triangle_s2_csv() {
    let text = stdout(&["triangle", "s2", "--n-max", "4", "--format", "csv"]);
    assert_eq!(text.lines().last(), Some("0,1,7,6,1"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn triangle_s2deg_half() {
    let text = stdout(&["triangle", "s2deg", "--lambda", "1/2", "--n-max", "2", "--format", "csv"]);
    assert_eq!(text.lines().nth(2), Some("0,1/2,1"));
}

#[test]
fn triangle_s1_single_row() {
    assert_eq!(stdout(&["triangle", "s1", "--n-max", "0", "--format", "csv"]), "1\n");
}

#[test]
fn triangle_json_round_trip() {
    for args in [
        &["triangle", "s2deg", "--lambda", "-3/7", "--n-max", "7", "--format", "json"][..],
        &["triangle", "whitney-deg", "--m", "3", "--lambda", "2/5", "--n-max", "6", "--format", "json"],
        &["triangle", "whitney-r1", "--m", "2", "--r", "2", "--n-max", "6", "--format", "json"],
    ] {
        let doc: TriangleDoc = serde_json::from_str(&stdout(args)).unwrap();
        let t = doc.to_triangle().unwrap();
        let again = TriangleDoc::new(&doc.kind, doc.m, doc.r, None, &t);
        assert_eq!(again.rows, doc.rows);
    }
    let doc: TriangleDoc =
        serde_json::from_str(&stdout(&["triangle", "s2deg", "--lambda", "-3/7", "--n-max", "7", "--format", "json"]))
            .unwrap();
    assert_eq!(doc.lambda.as_deref(), Some("-3/7"));
    assert_eq!(doc.to_triangle().unwrap(), degenerate_stirling2(7, &Lambda::new(rat(-3, 7)).unwrap()));
}

#[test]
fn triangle_formats_render() {
    for format in ["tex", "table"] {
        let text = stdout(&["triangle", "s1deg", "--lambda", "1/3", "--n-max", "4", "--format", format]);
        assert!(!text.is_empty());
    }
    let tex = stdout(&["triangle", "s2deg", "--lambda", "1/2", "--n-max", "2", "--format", "tex"]);
    assert!(tex.contains("\\frac{1}{2}"));
}

#[test]
fn poly_examples() {
    let csv = stdout(&["poly", "bell-full", "--n", "2", "--lambda", "1/2", "--format", "csv"]);
    assert_eq!(csv, "degree,coefficient\n0,0\n1,0\n2,1\n");
    assert_eq!(stdout(&["poly", "dowling-full", "--n", "1", "--m", "3", "--lambda", "1/5"]), "x + 1\n");
    assert_eq!(stdout(&["poly", "bell-full", "--n", "0", "--lambda", "1/2"]), "1\n");
    assert_eq!(stdout(&["poly", "bell-full", "--n", "0", "--lambda", "0.5"]), "1\n");
}

#[test]
fn poly_json_is_exact_strings() {
    let text = stdout(&["poly", "dowling-deg", "--n", "2", "--m", "2", "--lambda", "1/3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["2/3", "11/3", "1"]));
}

#[test]
fn poly_every_family_runs() {
    for (family, extra) in [
        ("bell", &[][..]),
        ("bell-partial", &["--lambda", "1/3"][..]),
        ("bell-full", &["--lambda", "1/3"]),
        ("dowling", &["--m", "2"]),
        ("dowling-deg", &["--m", "2", "--lambda", "1/3"]),
        ("dowling-full", &["--m", "2", "--lambda", "1/3"]),
        ("bernoulli-deg", &["--lambda", "1/3"]),
        ("bernoulli2-deg", &["--lambda", "1/3"]),
        ("polybell", &["--k", "2", "--lambda", "1/3"]),
        ("polybell", &["--k", "-1", "--lambda", "1/3"]),
    ] {
        let mut args = vec!["poly", family, "--n", "4", "--format", "tex"];
        args.extend_from_slice(extra);
        assert!(!stdout(&args).trim().is_empty(), "{family}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["triangle", "foo"]), 2);
    assert_eq!(code(&["poly", "nope", "--n", "2"]), 2);
    assert_eq!(code(&["poly", "dowling", "--n", "2"]), 2);
    assert_eq!(code(&["poly", "polybell", "--n", "2", "--lambda", "1/2"]), 2);
    assert_eq!(code(&["poly", "bell-full", "--n", "2", "--lambda", "1/0"]), 2);
    assert_eq!(code(&["poly", "bell-full", "--n", "2", "--lambda", "0.3333..."]), 2);
    assert_eq!(code(&["triangle", "whitney-deg", "--m", "0", "--lambda", "1/2"]), 2);
    assert_eq!(code(&["triangle", "s2", "--n-max", "65"]), 2);
    assert_eq!(code(&["verify", "thm99"]), 2);
    assert_eq!(code(&["verify", "lemma1", "--inject-fault", "s2deg:3"]), 2);
    assert_eq!(code(&["dobinski", "--n", "2", "--x", "1", "--lambda", "1"]), 2);
    assert_eq!(code(&["dobinski", "--n", "2", "--x", "1", "--lambda", "-1/2"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn verify_lemma1_passes() {
    let text = stdout(&["verify", "lemma1", "--n-max", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["identity"], "lemma1");
    assert_eq!(v[0]["certified_polynomial_in_lambda"], true);
}

#[test]
fn verify_all_passes_quickly() {
    let start = Instant::now();
    let text = stdout(&["verify", "all", "--n-max", "8", "--format", "csv"]);
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r.split(',').nth(1) == Some("true")), "{text}");
}

#[test]
fn verify_dobinski_reports_error() {
    let text = stdout(&["verify", "thm2", "--lambda", "1/10", "--n-max", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v[0]["max_relative_error"].as_f64().unwrap() < 1e-8);
}

#[test]
fn verification_failure_exits_1_with_witness() {
    let out = run(&["verify", "lemma1", "--n-max", "5", "--inject-fault", "s2deg:4:2:1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["witness"]["point"]["n"], 4);

    let out = run(&["verify", "thm2", "--lambda", "1/10", "--n-max", "3", "--terms", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn dobinski_traces() {
    let csv = stdout(&["dobinski", "--n", "3", "--x", "1", "--lambda", "1/10", "--terms", "200", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&csv).unwrap();
    assert!(v["relative_error"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["checkpoints"].as_array().unwrap().len(), 10);
    assert_eq!(v["checkpoints"][9]["terms"], 200);

    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "dobinski", "--n", "2", "--x", "2", "--lambda", "1/2", "--terms", "400", "--format", "json",
    ]))
    .unwrap();
    assert!(v["relative_error"].as_f64().unwrap() < 1e-8);

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["dobinski", "--n", "0", "--x", "1/3", "--lambda", "1/10", "--format", "json"]))
            .unwrap();
    assert_eq!(v["reference"], 1.0);
    assert!(v["relative_error"].as_f64().unwrap() < 1e-12);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "all", "--n-max", "4", "--format", "json"][..],
        &["triangle", "whitney-r2", "--m", "3", "--r", "2", "--n-max", "9"],
        &["dobinski", "--n", "4", "--x", "3/10", "--lambda", "1/7"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("lumbral-e2e-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["triangle", "s2", "--n-max", "3", "--format", "csv", "--out", p]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().last(), Some("0,1,3,1"));
    std::fs::remove_file(&path).unwrap();
}
