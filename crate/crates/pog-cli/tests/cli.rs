use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

const BASIC: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/basic.json");

fn pog(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pog"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn basic(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["-f", BASIC];
    all.extend_from_slice(args);
    let out = pog(&all, None);
    let code = out.status.code().unwrap();
    let body = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, body)
}

/// Every key of `expected` is present in `actual` with the same value.
fn contains(actual: &Value, expected: &Value) -> bool {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => e.iter().all(|(k, v)| a.get(k).is_some_and(|x| contains(x, v))),
        _ => actual == expected,
    }
}

#[test]
fn minimal_workspace_validates() {
    let doc = r#"{"groups":{"Z":{"kind":"fgab","rank":1,"torsion":[]}},"cones":{"N":{"group":"Z","generators":[[1]]}},"objects":{"X":{"group":"Z","cone":"N"}}}"#;
    let out = pog(&["validate"], Some(doc));
    assert_eq!(out.status.code(), Some(0));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(contains(&body, &json!({"valid": true})));
    assert_eq!(body["counts"]["objects"], 1);

    let out = pog(&["classify", "X"], Some(doc));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["classification"]["partially_ordered"], true);
}

#[test]
fn torsion_report() {
    let (code, body) = basic(&["torsion", "X"]);
    assert_eq!(code, 0);
    let expected = json!({"torsion_part":{"order":2},"torsion_free":{"group":"Z/2","cone_size":1},"short_exact":true});
    assert!(contains(&body, &expected), "{body}");
    assert_eq!(body["torsion_part"], json!({"order": 2}));
}

#[test]
fn monotone_light_report() {
    let (code, body) = basic(&["factor", "mod2", "--system", "ml"]);
    assert_eq!(code, 0);
    assert!(contains(&body, &json!({"e_prime":"identity","m_star":"f","covering":true})), "{body}");

    let (code, body) = basic(&["factor", "proj", "--system", "ml"]);
    assert_eq!(code, 0);
    assert_eq!(body["e_prime"], "f");
    assert_eq!(body["m_star"], "identity");
}

#[test]
fn inputs_and_bounds_are_echoed() {
    let (_, body) = basic(&["--window", "5", "cover", "Nat"]);
    assert_eq!(body["input"]["window"], 5);
    assert_eq!(body["input"]["hom_bound"], 10);
    assert_eq!(body["scan"]["window"], 5);
    let (_, body) = basic(&["--hom-bound", "3", "enumerate", "morphisms", "Nat", "Nat"]);
    assert_eq!(body["bound"], 3);
    assert_eq!(body["count"], 4);
}

#[test]
fn property_failures_exit_two() {
    let (code, body) = basic(&["class", "mod2", "--of", "M"]);
    assert_eq!(code, 2);
    assert_eq!(body["holds"], false);
    let (code, body) = basic(&["schreier", "mod2"]);
    assert_eq!(code, 2);
    assert_eq!(body["exhaustive"], false);
    let (code, _) = basic(&["covering", "proj"]);
    assert_eq!(code, 2);
    let (code, body) = basic(&["schreier", "X"]);
    assert_eq!(code, 0);
    assert_eq!(body["exhaustive"], true);
}

#[test]
fn non_associative_table_is_rejected() {
    let doc = r#"{"groups":{"L":{"kind":"finite","elements":["e","a","b"],"table":[[0,1,2],[1,0,1],[2,1,0]]}}}"#;
    let out = pog(&["validate"], Some(doc));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("group \"L\"") && err.contains("associativity fails for (a, a, b)"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn dropped_cone_generator_is_rejected() {
    let doc = r#"{"groups":{"Z":{"kind":"fgab","rank":1}},"cones":{"N":{"group":"Z","generators":[[1]]}},
        "objects":{"X":{"group":"Z","cone":"N"}},"morphisms":{"neg":{"from":"X","to":"X","matrix":[[-1]]}}}"#;
    let out = pog(&["validate"], Some(doc));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("morphism \"neg\"") && err.contains("cone not preserved at generator (1)"), "{err}");
}

#[test]
fn malformed_input_exits_one() {
    let out = pog(&["validate"], Some("{\"groups\": [1,\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
    assert_eq!(pog(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(basic(&["torsion", "Nope"]).0, 1);
    assert_eq!(basic(&["orthogonal", "mod2", "mod2", "mod2", "mod2"]).0, 1);
}

#[test]
fn reports_are_deterministic() {
    let run = || pog(&["-f", BASIC, "factor", "mod2", "--system", "em"], None).stdout;
    let first = run();
    assert!(!first.is_empty());
    assert_eq!(first, run());
}

#[test]
fn limits_and_oracle() {
    let (code, body) = basic(&["limit", "coequalizer", "zero", "double"]);
    assert_eq!(code, 0);
    assert_eq!(body["object"]["order"], 2);
    let (code, body) = basic(&["oracle", "kernel", "q"]);
    assert_eq!(code, 0);
    assert_eq!(body["kernel"]["holds"], true);
    let (code, body) = basic(&["oracle", "pretorsion", "X"]);
    assert_eq!(code, 0);
    assert_eq!(body["z_prekernel"]["holds"], true);
    let (code, body) = basic(&["sequence-check", "double", "mod2"]);
    assert_eq!(code, 0);
    assert_eq!(body["checks"]["cone_map_surjective"], true);
}

#[test]
fn corpus_mode() {
    let out = pog(&["--corpus", "torsion"], None);
    assert_eq!(out.status.code(), Some(0));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["results"].as_object().unwrap().len(), 39);
    assert_eq!(body["results"]["(Z/4, {0,2})"]["torsion_part"]["order"], 2);

    let out = pog(&["--corpus", "schreier"], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn law_search() {
    let out = pog(&["search", "every-morphism-is-covering", "--max-order", "4"], None);
    assert_eq!(out.status.code(), Some(2));
    let body: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(body["laws"]["every-morphism-is-covering"]["witness"].is_string());
    let out = pog(&["search", "mono-iff-trivial-kernel", "--max-order", "6"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(pog(&["search", "no-such-law"], None).status.code(), Some(1));
}
