use std::process::{Command, Output};

use krullstar::dsl::{parse_ideal, parse_ring};
use krullstar::json::ideal_from_json;
use serde_json::Value;

fn krullstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krullstar")).args(args).env_remove("KRULLSTAR_DEGREE_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json_of(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = krullstar(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn u_closure_of_a_zero_component_ideal_is_itself() {
    let o = krullstar(&["closure", "--ring", "Z (+) Q", "--ideal", "<[(1,0)]>"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("<[1, 0]>"), "{}", stdout(&o));
    let v = json_of(&["closure", "--ring", "Z (+) Q", "--ideal", "<[1, 0]>"]);
    assert_eq!(v["closed"], true);
    let v = json_of(&["closure", "--ring", "Z (+) Q", "--ideal", "<[1, 0]>", "--op", "v"]);
    assert_eq!(v["closed"], false);
    assert_eq!(v["closure"]["text"], "Z x Q");
}

#[test]
fn closure_json_round_trips() {
    let r = parse_ring("Quad -5 (+) Zmod 3^2").unwrap();
    let v = json_of(&["closure", "--ring", "Quad -5 (+) Zmod 3^2", "--ideal", "<[2, 3], [1+w, 0]>", "--op", "t"]);
    let input = ideal_from_json(&v["input"]).unwrap();
    assert_eq!(input, parse_ideal(&r, "<[2, 3], [1+w, 0]>").unwrap());
    let c = ideal_from_json(&v["closure"]).unwrap();
    assert!(c.contains_ideal(&input).unwrap());
}

#[test]
fn factoring_six_two_gives_three_verified_factors() {
    let v = json_of(&["factor", "--ring", "Z (+) Zmod 2^2", "--elem", "[6,2]"]);
    assert_eq!(v["verified"], true);
    let fs = v["factors"].as_array().unwrap();
    assert_eq!(fs.len(), 3);
    let exps: u64 = fs.iter().map(|f| f["exp"].as_u64().unwrap()).sum();
    assert_eq!(exps, 3);
    let o = krullstar(&["factor", "--ring", "Z (+) Zmod 2^2", "--elem", "[6,2]"]);
    assert!(stdout(&o).contains("verified: true"));
}

#[test]
fn zero_factors_into_minimal_primes() {
    let v = json_of(&["factor-zero", "--ring", "Z (+) Zmod 2^2"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn quadratic_order_of_discriminant_minus_twenty() {
    let v = json_of(&["classify", "--ring", "Quad -5"]);
    let text = v.to_string();
    assert!(text.contains("\"ufr\":false"), "{text}");
    assert!(text.contains("\"general_zpi\":true"), "{text}");
    let o = krullstar(&["classify", "--ring", "Quad -5"]);
    let out = stdout(&o);
    assert!(out.contains("class group: Z/2"), "{out}");
    assert!(out.contains("ufr: false") && out.contains("general_zpi: true"), "{out}");
}

#[test]
fn class_groups_and_bounds() {
    let v = json_of(&["class-group", "--d", "-23"]);
    assert_eq!(v["group"].to_string().contains('3'), true, "{v}");
    let o = krullstar(&["class-group", "--d", "-251"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("BoundExceeded"));
    assert!(krullstar(&["class-group", "--d", "-251", "--bound", "300"]).status.success());
}

#[test]
fn domain_errors_exit_one_with_their_name() {
    let o = krullstar(&["local", "--ring", "Z", "--prime", "<6>"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotAPrime"));
    let o = krullstar(&["--json", "local", "--ring", "Z", "--prime", "<6>"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotAPrime");
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let o = krullstar(&["closure", "--ring", "Z (+", "--ideal", "<1>"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("--ring") && err.contains('^'), "{err}");
    assert_eq!(krullstar(&["closure", "--ring", "Z", "--ideal", "<1", "--op", "u"]).status.code(), Some(2));
    assert_eq!(krullstar(&["closure", "--ring", "Z", "--ideal", "<1>", "--op", "x"]).status.code(), Some(2));
    assert_eq!(krullstar(&["test", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(krullstar(&["frobnicate"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_krullstar"))
        .args(["factor", "--ring", "Z", "--elem", "12"])
        .env("KRULLSTAR_DEGREE_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn text_and_json_verdicts_agree() {
    let cases: [&[&str]; 4] = [
        &["invertible", "--ring", "Quad -5", "--ideal", "<2, 1+w>", "--op", "d"],
        &["invertible", "--ring", "Z (+) Q", "--ideal", "<[2, 0]>", "--op", "u"],
        &["invertible", "--ring", "Z (+) Q", "--ideal", "<[2, 0]>", "--op", "v"],
        &["invertible", "--ring", "Zmod 2^2", "--ideal", "<2>", "--op", "u"],
    ];
    for args in cases {
        let v = json_of(args);
        let text = stdout(&krullstar(args));
        let verdict = v["invertible"].as_bool().unwrap();
        assert!(text.contains(&format!("-invertible: {verdict}")), "{args:?}: {text} vs {v}");
    }
    let v = json_of(&["rgv-check", "--ring", "Z", "--ideal", "<2, 3>"]);
    let text = stdout(&krullstar(&["rgv-check", "--ring", "Z", "--ideal", "<2, 3>"]));
    assert!(text.contains(&format!("rGV: {}", v["member"].as_bool().unwrap())), "{text} vs {v}");
}

#[test]
fn u_divisors_of_twelve() {
    let v = json_of(&["u-divisors", "--ring", "Z", "--ideal", "<12>"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["divisors"].as_array().unwrap().len(), 6);
}

#[test]
fn nagata_commands() {
    let v = json_of(&["nagata-content", "--ring", "Z", "--poly", "poly: [4], [6]"]);
    assert_eq!(v["content"]["text"], "(2)");
    let v = json_of(&["in-nu", "--ring", "Z (+) Zmod 2^2", "--poly", "poly: [2, 2], [0, 2]"]);
    assert_eq!(v["in_nu"], false);
    let v = json_of(&["dm-n", "--ring", "Z", "--f", "poly: [2], [3]", "--g", "poly: [4], [6]"]);
    assert_eq!(v["n"], 0);
}

#[test]
fn suite_runs_and_lists() {
    let o = krullstar(&["test", "--list"]);
    assert!(stdout(&o).contains("star-axioms"));
    let v = json_of(&["test", "--suite", "ring-axioms", "--cases", "10", "--seed", "3"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["passed"], 10);
}
