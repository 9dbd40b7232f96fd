use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-convolve"))
        .args(args)
        .env_remove("SIGMA_CONVOLVE_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn wab_both_csv() {
    let o = run(&["wab", "--a", "1", "--b", "7", "--n-max", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,w_formula,w_brute,match"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 60);
    assert_eq!(rows[7], "8,1,1,1");
    assert!(rows.iter().all(|r| r.ends_with(",1")));
}

#[test]
fn wab_reduces_by_gcd() {
    let o = run(&["wab", "--a", "3", "--b", "21", "--n-max", "30", "--mode", "formula", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 30);
    // W(3,21)(24) = W(1,7)(8) = 1
    assert_eq!(rows[23]["n"], 24);
    assert_eq!(rows[23]["w_formula"], 1);
}

#[test]
fn wab_without_closed_form() {
    let o = run(&["wab", "--a", "2", "--b", "3", "--n-max", "5", "--mode", "formula"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["wab", "--a", "2", "--b", "3", "--n-max", "5", "--mode", "brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5,1"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["wab", "--a", "0", "--b", "7", "--n-max", "5"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["eta", "--level", "28", "--spec", "3:4"]).status.code(), Some(1));
    assert_eq!(run(&["eta", "--level", "28", "--spec", "1:x"]).status.code(), Some(1));
    assert_eq!(run(&["delta", "--form", "4,9", "--terms", "3"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn r7_all_agree() {
    let o = run(&["r7", "--n-max", "40", "--mode", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,closed,via_w,enumerate,match\n"));
    assert!(text.contains("\n7,72,72,72,1\n"));
}

#[test]
fn delta_forms() {
    let o = run(&["delta", "--form", "4,7", "--terms", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["coefficient"], 1);
    assert_eq!(v[1]["coefficient"], -1);
    let o = run(&["delta", "--form", "4,14,2", "--terms", "1"]);
    assert_eq!(stdout(&o), "n,coefficient\n1,1\n");
}

#[test]
fn eta_report() {
    // build the spec text from the library so it cannot drift
    let spec = sigma_convolve::eta::c_spec(1);
    let text: Vec<String> = spec.exponents().iter().map(|(d, r)| format!("{d}:{r}")).collect();
    let o = run(&["eta", "--level", "28", "--spec", &text.join(","), "--terms", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weight_k"], 4);
    assert_eq!(v["is_cusp"], true);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 5);

    let o = run(&["eta", "--level", "28", "--spec", "1:3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("is_modular=false"));
}

#[test]
fn decompose_json() {
    let o = run(&["decompose", "--a", "1", "--b", "28"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["x"]["1"], "118/125");
    assert_eq!(v["x"]["28"], "92512/125");
    assert_eq!(v["y"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_suite() {
    let o = run(&["verify", "--order", "40", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let ids = v["identities"].as_array().unwrap();
    assert!(ids.iter().all(|r| r["passed"] == true));
    let shift = ids.iter().find(|r| r["level"] == 56).unwrap();
    assert_eq!(shift["sturm_bound"], 32);

    let o = Command::new(env!("CARGO_BIN_EXE_sigma-convolve"))
        .arg("verify")
        .env("SIGMA_CONVOLVE_ORDER", "20")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order=32"));
}

#[test]
fn output_is_deterministic() {
    let args = ["r7", "--n-max", "50", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["wab", "--a", "2", "--b", "7", "--n-max", "80"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
