use std::process::{Command, Output};

use serde_json::Value;

fn chordcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordcc")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn identity_passes() {
    let out = chordcc(&["identity"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let claims: Vec<_> = v.as_array().unwrap().iter().map(|r| (r["claim"].clone(), r["status"].clone())).collect();
    assert_eq!(claims, [("ChordLines".into(), "pass".into()), ("Tccformula".into(), "pass".into())]);
}

#[test]
fn cubic_table_and_invariants() {
    let out = chordcc(&["cubic", "--a", "-3", "--b", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cubic"]["U1V2W0"], "8");
    assert_eq!(v["cubic"]["U0V2W1"], "6");
    assert_eq!(v["cubic"]["U2V0W1"], "2");
    assert_eq!(v["cubic"]["U0V0W3"], "-1");
    assert_eq!(v["cubic"].as_object().unwrap().len(), 4);
    assert_eq!(v["invariants"]["e"], "-64");
    assert_eq!(v["invariants"]["c1"], "24");
    assert_eq!(v["invariants"]["c2"], "-16");
    assert_eq!(v["invariants"]["muInv"], "-3/4");
}

#[test]
fn cubic_over_fp_is_normalized() {
    let v = json(&chordcc(&["cubic", "--a", "-3", "--b", "2", "--prime", "7"]));
    assert_eq!(v["display"], "1·U^2·W + 4·U·V^2 + 3·V^2·W + 3·W^3");
    assert_eq!(v["field"], 7);
}

#[test]
fn double_root_is_rejected() {
    let out = chordcc(&["suite", "--a", "2", "--b", "1", "--prime", "101"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert!(v["error"].as_str().unwrap().contains("double root"));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_inputs_exit_2() {
    for args in [
        &["suite", "--a", "1", "--b", "1", "--prime", "91"][..],
        &["suite", "--a", "1/0", "--b", "1", "--prime", "7"],
        &["cubic", "--a", "x", "--b", "1"],
        &["cubic", "--a", "1", "--b", "0"],
        &["map", "--a", "0", "--b", "4", "--x", "2", "--y", "5"],
        &["degree", "--a", "-3", "--b", "2", "--prime", "7", "--order", "4"],
        &["suite", "--random", "3", "--prime", "101"],
        &["frobnicate"],
    ] {
        let out = chordcc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(json(&out)["error"].is_string(), "{args:?}");
    }
}

#[test]
fn map_one_point() {
    let v = json(&chordcc(&["map", "--a", "0", "--b", "4", "--x", "2", "--y", "4"]));
    assert_eq!(v["chord"], "[1:0:-2]");
    assert_eq!(v["partner"], "[2:-4:1]");
    let v = json(&chordcc(&["map", "--a", "0", "--b", "4"]));
    assert_eq!(v["chord"], "[1:0:0]");
}

#[test]
fn suite_output_is_reproducible() {
    let args = ["suite", "--a", "-3", "--b", "2", "--prime", "101"];
    let one = chordcc(&args);
    let two = chordcc(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let v = json(&one);
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] != "fail"));
}

#[test]
fn random_suite_reproduces_from_seed() {
    let args = ["suite", "--random", "3", "--seed", "11", "--prime", "13"];
    let one = chordcc(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, chordcc(&args).stdout);
    assert_eq!(json(&one).as_array().unwrap().len(), 3);
    assert_ne!(one.stdout, chordcc(&["suite", "--random", "3", "--seed", "12", "--prime", "13"]).stdout);
}

#[test]
fn quotient_defaults_to_three_primes() {
    let v = json(&chordcc(&["quotient", "--a", "3", "--b", "1"]));
    let counts = v[0]["stats"]["counts"].as_array().unwrap();
    let primes: Vec<_> = counts.iter().map(|c| c["prime"].as_u64().unwrap()).collect();
    assert_eq!(primes, [101, 211, 409]);
}

#[test]
fn flexes_and_degree() {
    let out = chordcc(&["flexes", "--a", "-3", "--b", "2", "--prime", "101"]);
    assert_eq!(out.status.code(), Some(0));
    let out = chordcc(&["degree", "--a", "-3", "--b", "2", "--prime", "101", "--order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)[0]["stats"]["interpolation"]["degree"], 6);
}

#[test]
fn text_format() {
    let out = chordcc(&["identity", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("ChordLines"));
    assert!(text.contains("pass"));
}

#[test]
fn help_exits_0() {
    assert_eq!(chordcc(&["--help"]).status.code(), Some(0));
}
