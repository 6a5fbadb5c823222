use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn supertrop() -> Command {
    Command::cargo_bin("supertrop").unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = supertrop().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"))
}

fn assert_valid(name: &str, doc: &str) {
    let schema: Value = serde_json::from_str(&fs::read_to_string(schema_path(name)).unwrap()).unwrap();
    let instance: Value = serde_json::from_str(doc).unwrap_or_else(|e| panic!("not JSON ({e}): {doc}"));
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{doc}");
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn eval_prints_the_dominant_value() {
    let (code, out, _) = run(&["eval", "x^2+3g*x+5", "--at", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "8\n");
    assert_eq!(run(&["eval", "x^2+3g*x+5", "--at", "1"]).1, "5\n");
    assert_eq!(run(&["eval", "x+y", "--at", "2,2"]).1, "2g\n");
    assert_eq!(run(&["eval", "x^-1+1", "--at", "-3"]).1, "3\n");
}

#[test]
fn empty_expression_is_a_usage_error() {
    assert_eq!(run(&["eval", "", "--at", "1"]).0, 2);
    assert_eq!(run(&["eval", "   ", "--at", "1"]).0, 2);
    assert_eq!(run(&["eval", ""]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["check", "nonsense"]).0, 2);
}

#[test]
fn domain_errors_exit_one_with_an_error_object() {
    for args in [
        &["eval", "x+", "--at", "1"][..],
        &["factor", "x+y"],
        &["eval", "x+y", "--at", "1"],
        &["hull", "x*y+1"],
        &["simplify", "--full", "x+y"],
        &["factor", "@/nonexistent/file"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert_valid("error", err.trim());
    }
    let (_, _, err) = run(&["factor", "x+y"]);
    let v: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["error"]["kind"], "wrong_arity");
}

#[test]
fn factor_prints_the_minimal_ghost_list() {
    let (code, out, _) = run(&["factor", "x^4+4g*x^3+6g*x^2+5g*x+3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(x^2 + 4g*x + 2)(x + -1)(x + 2)\n");
    let (_, out, _) = run(&["--json", "factor", "x^4+4g*x^3+6g*x^2+5g*x+3"]);
    assert_valid("factor", &out);
    let v: Value = serde_json::from_str(&out).unwrap();
    let kinds: Vec<&str> = v["factors"].as_array().unwrap().iter().map(|f| f["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["quad", "linear", "linear"]);
    assert_eq!(v["factors"][0]["lo"], "-2");
    assert_eq!(v["factors"][0]["hi"], "4");
    assert_eq!(run(&["factor", "--tangible", "x^2+7x+10"]).1, "(x + 3)(x + 7)\n");
}

#[test]
fn expressions_can_be_read_from_files() {
    let path = temp_file("expr.txt", "x^2 + 3g*x + 5\n");
    let arg = format!("@{}", path.display());
    assert_eq!(run(&["eval", &arg, "--at", "4"]).1, "8\n");
}

#[test]
fn simplify_and_hull() {
    assert_eq!(run(&["simplify", "--essential", "x^3+2x^2+3g*x+4"]).1, "x^3 + 2*x^2 + 4\n");
    assert_eq!(run(&["simplify", "--full", "x^2+2x+4"]).1, "x^2 + 2g*x + 4\n");
    assert_eq!(run(&["simplify", "--essential", "--full", "x"]).0, 2);
    assert_eq!(run(&["simplify", "x"]).0, 2);
    let (_, out, _) = run(&["--json", "simplify", "--full", "x^2+2x+4"]);
    assert_valid("simplify", &out);
    let (code, out, _) = run(&["hull", "x^3+2x^2+3g*x+4"]);
    assert_eq!(code, 0);
    assert_valid("hull", &out);
    let v: Value = serde_json::from_str(&out).unwrap();
    let roots: Vec<&str> = v["edges"].as_array().unwrap().iter().map(|e| e["root"].as_str().unwrap()).collect();
    assert_eq!(roots, ["1", "2"]);
}

#[test]
fn roots_and_components() {
    let (_, out, _) = run(&["roots", "x^2+2g*x+1"]);
    assert_eq!(out, "roots: [-1, 2]\ncorner -1 multiplicity 1\ncorner 2 multiplicity 1\n");
    let (_, out, _) = run(&["--json", "roots", "x^2+2g*x+1"]);
    assert_valid("roots", &out);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["roots"]["intervals"][0],
        serde_json::json!({"lo": "-1", "hi": "2", "lo_closed": true, "hi_closed": true})
    );
    let (_, out, _) = run(&["--json", "components", "x^2+2g*x+1"]);
    assert_valid("components", &out);
    let v: Value = serde_json::from_str(&out).unwrap();
    let tangible: Vec<bool> =
        v["components"].as_array().unwrap().iter().map(|c| c["tangible"].as_bool().unwrap()).collect();
    assert_eq!(tangible, [true, false, true]);
}

#[test]
fn divides_finds_and_checks_witnesses() {
    let (_, out, _) = run(&["divides", "x^2+7x+10", "x+3", "--witness"]);
    assert_eq!(out, "true\npower 1\nquotient x + 7\n");
    assert_eq!(run(&["divides", "x^2+7x+10", "x+3", "--quotient", "x+7"]).1, "true\n");
    assert_eq!(run(&["divides", "x^2+7x+10", "x+3", "--quotient", "x+1"]).1, "false\n");
    assert_eq!(run(&["divides", "x^2+4", "x+1"]).1, "false\n");
    let (_, out, _) = run(&["--json", "divides", "x^2+7x+10", "x+3"]);
    assert_valid("divides", &out);
    let (_, out, _) = run(&["--json", "divides", "x^2+4", "x+1"]);
    assert_valid("divides", &out);
}

#[test]
fn radical_reports_membership_and_components() {
    let f = "x^2+2x+3";
    let pairs = temp_file("pairs.txt", "# witness\nx+2 ; x+1\n");
    let path = pairs.to_str().unwrap();
    let (code, out, _) = run(&["radical", f, "--m", "1", "--pairs", path]);
    assert_eq!(code, 0);
    assert_eq!(out, "membership: true\npreceq: true\n");
    let (_, out, _) = run(&["--json", "radical", f, "--pairs", path]);
    assert_valid("radical", &out);
    let bad = temp_file("bad_pairs.txt", "x+2\n");
    assert_eq!(run(&["radical", f, "--pairs", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn curve2d_writes_svg_and_json() {
    let svg = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cubic.svg");
    let _ = fs::remove_file(&svg);
    let f = "x1^2*x2 + x1*x2^2 + 1*x1*x2 + 0";
    let (code, out, _) = run(&["curve2d", f, "--svg", svg.to_str().unwrap(), "--window", "-6,-6,8,8"]);
    assert_eq!(code, 0);
    assert!(out.contains("duality: true\nbalanced: true"));
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/cubic.svg");
    assert_eq!(fs::read_to_string(&svg).unwrap(), fs::read_to_string(golden).unwrap());
    for g in [f, "x1^2+x2^2+2g*x1*x2+0", "x1+x2+3"] {
        let (_, out, _) = run(&["--json", "curve2d", g]);
        assert_valid("curve2d", &out);
    }
    assert_eq!(run(&["curve2d", f, "--svg", svg.to_str().unwrap(), "--window", "1,2"]).0, 2);
    assert_eq!(run(&["curve2d", "x+1"]).0, 1);
}

#[test]
fn vandermonde_and_envelope() {
    let (code, out, _) = run(&["--json", "vandermonde", "--functions", "x;y;1"]);
    assert_eq!(code, 0);
    assert_valid("vandermonde", &out);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["verdict"], "exact");
    let (_, out, _) = run(&["--json", "vandermonde", "--functions", "x+1;y+2;x*y"]);
    assert_valid("vandermonde", &out);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["verdict"], "sampled");
    let (_, out, _) = run(&["envelope", "--poly", "x+y+1"]);
    assert_eq!(out, "binomials: x2 + 1 ; x1 + 1 ; x1 + x2\ncofactors: x1*x2 + 1*x1 + 1*x2\nholds: true\n");
    let (_, out, _) = run(&["--json", "envelope", "--poly", "x+y+1"]);
    assert_valid("envelope", &out);
}

#[test]
fn check_suites_pass() {
    for args in [
        &["check", "axioms"][..],
        &["check", "vandermonde", "--m", "4"],
        &["check", "factorization", "--cases", "1000"],
        &["check", "frobenius"],
        &["check", "nullstellensatz"],
        &["check", "geometry"],
    ] {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(out.starts_with("PASS "), "{out}");
    }
    let (_, out, _) = run(&["--json", "check", "geometry", "--cases", "5", "--seed", "9"]);
    assert_valid("check", &out);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["cases"].as_u64(), v["seed"].as_u64()), (Some(5), Some(9)));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "factor", "x^6+1g*x^5+3x^3+2g*x+1"][..],
        &["--json", "curve2d", "x1^2+x2^2+2g*x1*x2+0"],
        &["check", "frobenius", "--cases", "30", "--seed", "5"],
        &["--json", "vandermonde", "--functions", "x+1;y;2x*y"],
    ] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}
