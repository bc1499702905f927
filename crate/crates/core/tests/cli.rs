mod common;

use std::process::Command;

use clap::Parser;
use common::nf;
use periodic_braids::cli::{run, Cli, Report};
use periodic_braids::Error;
use serde_json::Value;

fn call(args: &[&str]) -> Result<Report, Error> {
    let mut full = vec!["pbraid"];
    full.extend_from_slice(args);
    run(&Cli::try_parse_from(full).expect("valid arguments"))
}

fn text(args: &[&str]) -> String {
    call(args).unwrap().text
}

#[test]
fn normal_form_command() {
    assert_eq!(text(&["nf", "-n", "6", "d^3 [4,2][4,3][2,1]"]), "d^3 [4,3,2,1]");
    assert_eq!(text(&["nf", "-n", "6", "d^3", "[4,2][4,3][2,1]"]), "d^3 [4,3,2,1]");
    assert_eq!(text(&["nf", "-n", "10", "[12,11,10,9]"]), "[10,9,2,1]");
    let v: Value = serde_json::from_str(&text(&["--json", "nf", "-n", "6", "d^3 [4,3][5,2,1] d^3 [4,3][5,2,1]"])).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["n"], 6);
    assert_eq!(v["inf"], 6);
    assert_eq!(v["factors"], serde_json::json!([[[6, 1], [5, 4, 3, 2]], [[5, 2, 1]]]));
}

#[test]
fn solve_command() {
    let out = text(&["solve", "-n", "13", "d^3 [13,10][12,11][6,4]"]);
    assert_eq!(out, "epsilon-type k=3 gamma=d^-3 [7,4,1][6,5][3,2] verified=true");
    assert_eq!(text(&["solve", "-n", "6", "d"]), "delta-type k=1 gamma=e verified=true");
    assert!(text(&["solve", "-n", "6", "s(1)^-1 d s(1)"]).starts_with("delta-type k=1 "));
    assert_eq!(text(&["solve", "-n", "3", "a(2,1)"]), "non-periodic");
    assert!(text(&["--no-verify", "solve", "-n", "6", "d"]).ends_with("verified=skipped"));

    let v: Value = serde_json::from_str(&text(&["--json", "solve", "-n", "13", "d^3 [13,10][12,11][6,4]"])).unwrap();
    assert_eq!(v["kind"], "epsilon-type");
    assert_eq!(v["k"], 3);
    assert_eq!(v["verified"], true);
    assert_eq!(v["conjugator"]["inf"], -3);
    let g = v["conjugator"]["text"].as_str().unwrap();
    assert_eq!(nf(13, g).to_string(), g);
}

#[test]
fn power_and_oracle_commands() {
    let out = text(&["power-conj", "-n", "13", "-r", "12", "d [2,1]"]);
    assert!(out.starts_with("power=d^13 "), "{out}");
    assert!(out.ends_with("rounds=4 verified=true"), "{out}");
    let out = text(&["power-conj", "-n", "9", "-r", "5", "[9,5] d [2,1] [9,5]^-1"]);
    assert!(out.ends_with("rounds=3 verified=true"), "{out}");

    let out = text(&["sss-brute", "-n", "6", "-k", "2"]);
    assert_eq!(out.lines().last(), Some("size=18"));
    let out = text(&["uss-bound", "-n", "6", "-u", "2", "-k", "3"]);
    assert_eq!(out.lines().count(), 6);
    assert_eq!(out.lines().last(), Some("count=5 catalan=5 distinct=true"));
    let v: Value = serde_json::from_str(&text(&["--json", "sss-brute", "-n", "5", "-k", "2"])).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["size"], 10);
}

#[test]
fn props_command() {
    let r = call(&["--seed", "3", "props", "-n", "7", "--cases", "100"]).unwrap();
    assert!(r.ok);
    assert!(r.text.lines().all(|l| l.starts_with("PASS")), "{}", r.text);
    assert!(r.text.contains("closure of epsilon^3"));
    let v: Value = serde_json::from_str(&call(&["--json", "props", "-n", "5", "--cases", "50"]).unwrap().text).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn errors() {
    assert!(matches!(call(&["nf", "-n", "6", "[2,1"]), Err(Error::Syntax { .. })));
    assert!(matches!(call(&["nf", "-n", "6", "[13,1]"]), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(call(&["sss-brute", "-n", "12", "-k", "2"]), Err(Error::TooLarge { .. })));
    assert!(matches!(call(&["uss-bound", "-n", "6", "-u", "1", "-k", "3"]), Err(Error::BadParameters(_))));
    assert!(matches!(call(&["power-conj", "-n", "6", "-r", "2", "[4,2] [3,1]"]), Err(Error::NotPeriodic)));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pbraid");
    let ok = Command::new(bin).args(["solve", "-n", "6", "d"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "delta-type k=1 gamma=e verified=true");
    let bad = Command::new(bin).args(["nf", "-n", "6", "[9,9]"]).output().unwrap();
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
