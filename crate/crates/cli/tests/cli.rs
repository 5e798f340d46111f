//! End-to-end runs of the command line, in-process and through the binary.

use std::process::Command;

use crosscap::sequences::v_seq;
use crosscap_cli::{run, EXIT_COMPUTE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("crosscap").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn v_sequence_as_json() {
    let out = ok(&["seq", "v", "--n", "3", "--format", "json"]);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["command"], "seq v");
    assert_eq!(json["params"]["n"], 3);
    assert_eq!(json["precision"], Value::Null);
    assert_eq!(json["values"], serde_json::json!(["-1√3", "1/4", "5/48√3", "25/96"]));
    let expected: Vec<String> = v_seq(3).values().iter().map(|x| x.to_string()).collect();
    let got: Vec<String> = serde_json::from_value(json["values"].clone()).unwrap();
    assert_eq!(got, expected);
    assert_eq!(json["qf3"][2], serde_json::json!({"a": "0", "b": "5/48"}));
}

#[test]
fn quadrangulations_on_one_line() {
    assert_eq!(ok(&["quad", "--n", "7"]), "5 38 331 3098 30330 306276 3163737\n");
    assert_eq!(ok(&["quad", "--n", "3", "--oeis"]), "5\n38\n331\n");
}

#[test]
fn sprime_estimate_reports_thirty_digits() {
    let out = ok(&["stokes", "--which", "sprime", "--n", "250", "--order", "30", "--prec", "200"]);
    assert!(out.contains("2.44948974278317809819728407471"), "{out}");
    assert!(out.contains("matched 30 digits of sqrt(6)"), "{out}");
    assert!(out.starts_with("# stokes") && out.contains("precision=200"));
}

#[test]
fn symbolic_constants_stay_exact() {
    let out = ok(&["seq", "p", "--n", "2"]);
    assert!(out.contains("-2√6/Γ(-1/4)"));
    assert!(out.contains("√6/(3Γ(1/4))"));
    // quarter-integer Γ is never evaluated, even when floats are requested
    let out = ok(&["seq", "p", "--n", "1", "--float", "40", "--digits", "10"]);
    assert!(out.contains("-2√6/Γ(-1/4)") && out.contains("0.5"));
    let out = ok(&["seq", "t", "--n", "2"]);
    assert!(out.contains("7/(4320√π)"));
}

#[test]
fn csv_quotes_exact_values() {
    let out = ok(&["seq", "u", "--n", "2", "--format", "csv"]);
    assert_eq!(out, "n,value\n0,\"1\"\n1,\"-1/48\"\n2,\"-49/4608\"\n");
    let out = ok(&["seq", "u", "--n", "2", "--format", "csv", "--float", "30", "--digits", "5"]);
    assert_eq!(out, "# precision=30\nn,value\n0,1.0000\n1,-0.020833\n2,-0.010634\n");
}

#[test]
fn floats_carry_their_precision() {
    let out = ok(&["richardson", "--target", "s", "--n", "60", "--order", "5", "--prec", "50", "--format", "json"]);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["precision"], 50);
    assert!(json["values"]["value"].as_str().unwrap().starts_with("2.449"));
    let table = ok(&["asym", "v", "--n", "100", "--trunc", "5", "--prec", "40"]);
    assert!(table.lines().next().unwrap().ends_with("precision=40"));
}

#[test]
fn intersection_number() {
    let out = ok(&["intersect", "--g", "2", "--format", "json"]);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["values"]["value"], "7/240");
}

#[test]
fn plot_data_rows() {
    let out = ok(&["plotdata", "firstcorr", "--n", "20", "--prec", "60", "--format", "csv", "--digits", "8"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "# precision=60");
    assert_eq!(lines[1], "n,r0,r1,r5");
    assert_eq!(lines.len(), 22);
    assert!(lines[21].starts_with("20,"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["seq", "v", "--n", "three"],
        &["seq", "w", "--n", "3"],
        &["stokes", "--which", "sprime", "--prec", "20"],
        &["seq", "u", "--n", "3", "--float", "12"],
        &["asym", "v", "--n", "10", "--trunc", "10"],
        &["intersect", "--g", "1"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn unwritable_output_is_a_computation_error() {
    let (code, _, err) = call(&["quad", "--n", "2", "--output", "/nonexistent-dir/x.txt"]);
    assert_eq!(code, EXIT_COMPUTE);
    assert!(err.contains("cannot write"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("crosscap-cli-test-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["vpm", "--order", "2", "--format", "json", "--output", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(json["values"][1]["minus"], "-1/12√3");
}

#[test]
fn binary_is_deterministic_and_reads_the_environment() {
    let bin = env!("CARGO_BIN_EXE_crosscap");
    let once = || {
        Command::new(bin)
            .args(["richardson", "--target", "r", "--n", "40", "--order", "4"])
            .env("CROSSCAP_PRECISION", "45")
            .output()
            .unwrap()
    };
    let a = once();
    let b = once();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("precision=45"));

    let bad = Command::new(bin).args(["quad", "--n", "2"]).env("CROSSCAP_PRECISION", "29").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
