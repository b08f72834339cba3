use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;
use trigonal::curves::TrigonalForm;
use trigonal::normal_forms::TransformLog;

const ONE_POINT: &str =
    r#"{"k":1,"s":"1","r":["0","0","0"],"p":["0","0","0","0","0"],"q":["0","1","0","0","0","1","0"]}"#;
const TWO_POINT: &str =
    r#"{"k":1,"s":"2","r":["1","0","3"],"p":["0","1","0","0","0"],"q":["1","0","0","0","0","5","0"]}"#;
const SINGULAR: &str =
    r#"{"k":1,"s":"1","r":["0","0","0"],"p":["0","0","0","0","0"],"q":["0","0","1","0","0","0","0"]}"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trigonal"))
}

fn file(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    assert_eq!(out.lines().count(), 1, "expected one line of output: {out}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn classify_one_point() {
    let f = file(ONE_POINT);
    let (code, v) = run_json(&["classify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["regular"], true);
    assert_eq!(v["stratum"]["kind"], "one-point");
    assert_eq!(v["stratum"]["signature"], serde_json::json!([6]));
    assert_eq!(v["genus"], 4);
    assert_eq!(v["spin"], "even");
    assert_eq!(v["l0"]["distinct_points"], 1);
}

#[test]
fn classify_singular_is_domain_error() {
    let f = file(SINGULAR);
    let (code, v) = run_json(&["classify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["regular"], false);
    assert_eq!(v["error"]["kind"], "not_regular");
}

#[test]
fn malformed_input_exits_one() {
    let f = file(r#"{"k":1,"s":"1","r":["0","0"],"p":[],"q":[]}"#);
    let (code, v) = run_json(&["classify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "parse");
    let g = file("not json");
    assert_eq!(run_json(&["normalize", "--input", g.path().to_str().unwrap()]).0, 1);
    assert_eq!(run_json(&["classify", "--input", "/nonexistent/form.json"]).0, 1);
}

#[test]
fn normalize_round_trip_and_determinism() {
    let f = file(TWO_POINT);
    let path = f.path().to_str().unwrap();
    let (code, out) = run(&["normalize", "--input", path]);
    assert_eq!(code, 0);
    assert_eq!(run(&["normalize", "--input", path]).1, out);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["slice"], "V2");
    let form: TrigonalForm = serde_json::from_value(v["form"].clone()).unwrap();
    let log: TransformLog = serde_json::from_value(v["log"].clone()).unwrap();
    let input: TrigonalForm = serde_json::from_str(TWO_POINT).unwrap();
    assert_eq!(log.replay(&input).unwrap(), form);
    // keys are sorted
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["form", "log", "slice"]);
    assert!(out.find("\"form\"").unwrap() < out.find("\"log\"").unwrap());
}

#[test]
fn act_and_orbit_equal() {
    let f = file(TWO_POINT);
    let path = f.path().to_str().unwrap();
    let (code, out) = run(&["act", "--input", path, "--seed", "42"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["act", "--input", path, "--seed", "42"]).1, out);
    let moved = file(&out);
    let (code, v) = run_json(&[
        "orbit-equal",
        "--first",
        path,
        "--second",
        moved.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);

    let g = file(r#"{"a":"1","a0":"1","b":"1","bcoef":["0","0","0"]}"#);
    let one = file(ONE_POINT);
    let (code, v) = run_json(&[
        "act",
        "--input",
        one.path().to_str().unwrap(),
        "--group",
        g.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    // x -> x + 1 on y^3 + x^5 + x
    assert_eq!(v["q"], serde_json::json!(["2", "6", "10", "10", "5", "1", "0"]));
    let (code, v) = run_json(&["orbit-equal", "--first", one.path().to_str().unwrap(), "--second", path]);
    assert_eq!((code, v["equal"].clone()), (0, Value::Bool(false)));
    assert_eq!(run_json(&["act", "--input", path]).0, 1);
}

#[test]
fn standard_input() {
    let mut child = bin()
        .args(["classify", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(ONE_POINT.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["genus"], 4);
}

#[test]
fn dims_and_presentation() {
    assert_eq!(run_json(&["dims", "--k", "1"]), (0, serde_json::json!([7, 8, 7])));
    let (code, v) = run_json(&["presentation", "--family", "piK", "--n", "5", "--abelianization"]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"], 8);
    assert_eq!(v["abelianization"]["free_rank"], 1);
    assert_eq!(v["abelianization"]["torsion"], serde_json::json!([]));
    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("normalize"));
}
