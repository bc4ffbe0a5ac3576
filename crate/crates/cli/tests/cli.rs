//! End-to-end checks of the command line surface: output shapes, exit
//! codes, and determinism of the JSON form.

use std::process::Command;

fn cms(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cms"))
        .args(args)
        .env_remove("CMS_CACHE_DIR")
        .env_remove("CMS_THREADS")
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn family_jack_monomial_expansion() {
    let (stdout, _, code) = cms(&["family", "jack", "--partition", "[2]", "--basis", "m"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("m[2]"), "missing leading term: {stdout}");
    assert!(stdout.contains("m[1,1]"), "missing lower term: {stdout}");
    // the weight-zero label yields the constant one
    let (stdout, _, code) = cms(&["family", "hermite", "--partition", "[0]"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "(1)*j[]");
}

#[test]
fn verify_small_suite_exit_codes() {
    let (_, _, code) = cms(&["verify", "commutators", "--max-weight", "2"]);
    assert_eq!(code, Some(0));
    let (_, stderr, code) = cms(&["verify", "no-such-suite"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown verification suite"));
    // bad usage is a usage error
    let (_, _, code) = cms(&["family"]);
    assert_eq!(code, Some(2));
}

#[test]
fn conjecture_never_gates() {
    let (stdout, _, code) = cms(&["verify", "conjecture", "--max-weight", "1"]);
    assert_eq!(code, Some(0), "informational suite must not gate: {stdout}");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["family", "hermite", "--partition", "[2]", "--format", "json"];
    let (a, _, code_a) = cms(&args);
    let (b, _, code_b) = cms(&args);
    assert_eq!(code_a, Some(0));
    assert_eq!(code_b, Some(0));
    let strip = |s: &str| -> String {
        s.lines()
            .filter(|l| !l.contains("elapsed_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b), "JSON output differs between runs");
    // schema sanity
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    for key in ["command", "params", "results", "verdicts", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
}

#[test]
fn operator_literals_apply() {
    let (stdout, _, code) = cms(&["apply", "--op", "E[1]", "--to", "p[2,1]"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "(3)*p[2,1]");
    let (stdout, _, code) = cms(&["apply", "--op", "PD[1]*mul(p[1])", "--to", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "(1)*p[]");
    let (stdout, _, code) = cms(&["apply", "--op", "D[0] + (-2)*E[1]", "--to", "p[1]"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "(-2)*p[1]");
}

#[test]
fn convert_round_trip() {
    let (stdout, _, code) = cms(&["convert", "--input", "e[2]", "--to", "p"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("p[1,1]"));
    assert!(stdout.contains("p[2]"));
}

#[test]
fn pieri_command_reports_closed_form() {
    let (stdout, _, code) = cms(&[
        "pieri",
        "--family",
        "hermite",
        "--r",
        "1",
        "--partition",
        "[1]",
    ]);
    assert_eq!(code, Some(0), "pieri failed: {stdout}");
    assert!(stdout.contains("closed form comparison: pass"));
}

#[test]
fn super_family_restriction() {
    let (stdout, _, code) = cms(&[
        "super",
        "--n",
        "1",
        "--m",
        "0",
        "family",
        "jack",
        "--partition",
        "[2]",
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("x^[2]"), "unexpected restriction: {stdout}");
}

#[test]
fn hyper_residual_zero() {
    let (stdout, _, code) = cms(&["hyper", "check", "--which", "0F0", "--degree", "3"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("residual zero"), "unexpected: {stdout}");
}
