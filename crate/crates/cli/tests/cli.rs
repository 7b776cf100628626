use std::process::Command;

use nlie_cli::app::{run, Output, EXIT_BUDGET, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn nlie(args: &[&str]) -> Output {
    run(std::iter::once("nlie").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = nlie(&a);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout));
    (out.code, v)
}

fn schema() -> jsonschema::JSONSchema {
    let s: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    jsonschema::JSONSchema::compile(&s).unwrap()
}

#[test]
fn documented_examples() {
    let out = nlie(&["verify", "--algebra", "sl2", "--identity", "leibniz", "--trials", "50"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("leibniz   pass"));
    let out = nlie(&["saturate", "--algebra", "elliptic", "--alpha", "1", "--lambda", "1", "--seed", "x"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("whole-ring"));
}

#[test]
fn exit_codes() {
    let neg = ["saturate", "--casimir", "(x+y+z)^2", "--seed", "x+y+z-1"];
    assert_eq!(nlie(&neg).code, EXIT_FAILURE);
    let mut expected = neg.to_vec();
    expected.push("--expect-proper");
    assert_eq!(nlie(&expected).code, EXIT_OK);
    assert_eq!(nlie(&["saturate", "--algebra", "elliptic", "--seed", "x", "--budget", "5"]).code, EXIT_BUDGET);
    assert_eq!(nlie(&["bracket", "--algebra", "sl2", "x''", "e"]).code, EXIT_USAGE);
    assert_eq!(nlie(&["bracket", "--algebra", "sl2", "q", "e"]).code, EXIT_USAGE);
    assert_eq!(nlie(&["bracket", "--algebra", "sl2", "e"]).code, EXIT_USAGE);
    assert_eq!(nlie(&["algebra", "show", "sl2", "--alpha", "2"]).code, EXIT_USAGE);
    assert_eq!(nlie(&["root", "x^2 + y", "--k", "2"]).code, EXIT_USAGE);
    assert_eq!(nlie(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(nlie(&["--help"]).code, EXIT_OK);
    assert_eq!(nlie(&["paper-suite", "--items", "9"]).code, EXIT_USAGE);
}

#[test]
fn reports_validate_against_schema() {
    let s = schema();
    let cases: &[&[&str]] = &[
        &["algebra", "list"],
        &["algebra", "show", "malcev-abg", "--alpha", "2", "--beta", "3", "--gamma", "5"],
        &["bracket", "--casimir", "x1^2+x2^2+x3^2+x4^2", "x1", "x2", "x3"],
        &["verify", "--algebra", "quadric", "--dim", "4", "--trials", "5"],
        &["verify", "--casimir", "x^3 + y z", "--identity", "strong", "--trials", "5"],
        &["quotient", "reduce", "--algebra", "sl2", "--lambda", "2", "1/2 h^2 + 2 e f", "h"],
        &["quotient", "bracket", "--algebra", "malcev-splittable", "x", "y"],
        &["quotient", "grade", "--algebra", "elliptic", "x + x^2"],
        &["quotient", "lift", "--algebra", "sl2", "e + h^3"],
        &["quotient", "lift", "--algebra", "sl2", "e + h"],
        &["root", "(x + 2y)^4", "--k", "2"],
        &["closed", "x^2 + y^2"],
        &["minroot", "9 x^2 y^4"],
        &["center", "--algebra", "sl2", "h"],
        &["center", "--algebra", "quadric", "--degree", "2", "--quotient"],
        &["saturate", "--algebra", "sl2", "--seed", "h", "--lambda", "-1"],
        &["saturate", "--algebra", "elliptic", "--seed", "x", "--budget", "5"],
        &["casimir-suite"],
        &["paper-suite", "--items", "1,3"],
        &["bracket", "--algebra", "nope", "x", "y"],
    ];
    for args in cases {
        let (code, v) = json(args);
        if let Err(errs) = s.validate(&v) {
            let msgs: Vec<String> = errs.map(|e| format!("{e} at {}", e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}\n{v:#}");
        }
        assert_eq!(v["exit_code"], Value::from(code), "{args:?}");
    }
}

#[test]
fn text_and_json_agree() {
    for (args, verdict) in [
        (vec!["saturate", "--algebra", "quadric", "--seed", "x"], "whole-ring"),
        (vec!["saturate", "--casimir", "(x+y+z)^2", "--seed", "x+y+z-1"], "proper-stable"),
    ] {
        let text = nlie(&args);
        let (code, v) = json(&args);
        assert_eq!(text.code, code);
        assert_eq!(v["result"]["verdict"], verdict);
        assert!(text.stdout.lines().any(|l| l.starts_with("verdict") && l.ends_with(verdict)));
    }
}

#[test]
fn suite_is_deterministic() {
    let strip = |mut v: Value| {
        for item in v["result"]["items"].as_array_mut().unwrap() {
            item.as_object_mut().unwrap().remove("seconds");
        }
        v
    };
    let args = ["paper-suite", "--seed", "7", "--items", "2,5,6,7"];
    let (c1, a) = json(&args);
    let (c2, b) = json(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(strip(a), strip(b));
}

#[test]
fn custom_bracket_needs_matching_variables() {
    assert_eq!(nlie(&["bracket", "--casimir", "z", "x", "y"]).code, EXIT_USAGE);
    let out = nlie(&["bracket", "--casimir", "z", "--vars", "x,y,z", "x", "y"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "{x, y} = 1");
    assert_eq!(nlie(&["bracket", "--casimir", "x^2+y^2+z^2", "--arity", "3", "x", "y", "z"]).code, EXIT_USAGE);
}

#[test]
fn binary_writes_report_and_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_nlie"))
        .args(["quotient", "reduce", "--algebra", "malcev-splittable", "--lambda", "2", "y y' + z z' + x x' + 1/4 h^2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("->  -2\n"));
    let out = Command::new(env!("CARGO_BIN_EXE_nlie")).args(["bracket", "--algebra", "sl2", "e+", "f"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8(out.stderr).unwrap().contains("syntax error at byte 2"));
}

#[test]
fn negative_values_after_flags() {
    let out = nlie(&["saturate", "--algebra", "elliptic", "--alpha", "-2", "--lambda", "-1/3", "--seed", "-x + y"]);
    assert_eq!(out.code, EXIT_OK, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("lambda      -1/3"));
    let out = nlie(&["bracket", "--casimir", "-x^2 - y^2 - z^2", "--", "-x", "y"]);
    assert_eq!(out.stdout.trim(), "{-x, y} = 2*z");
}
