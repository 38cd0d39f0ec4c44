use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn error_kind(v: &Value) -> &str {
    v["error"]["kind"].as_str().unwrap()
}

const GL23: [&str; 5] = ["autgroup", "--p", "3", "--f", "1,0,1,0,1,0,1"];

#[test]
fn gl23_curve_report() {
    let (code, v) = json(&GL23);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 48);
    assert_eq!(v["type"], "GL2(3)");
    assert_eq!(v["reduced"]["order"], 24);
    assert_eq!(v["reduced"]["type"], "S4");
    assert_eq!(v["liftable"], "yes");
    assert_eq!(v["oort"], "OORT");
    assert_eq!(v["branch_locus"]["field"], "F_3^2");
    for c in v["consistency"].as_array().unwrap() {
        assert_eq!(c["passed"], true, "{c}");
    }
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &GL23,
        &["verify-paper", "--p", "5"],
        &["families", "--case", "A4", "--p", "3"],
        &[
            "reduce",
            "--p",
            "5",
            "--case",
            "A5",
            "--word",
            "RL",
            "--variant",
            "classical",
        ],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn curve_payload_matches_flags() {
    let (_, a) = json(&GL23);
    let (_, b) = json(&[
        "autgroup",
        "--curve",
        r#"{"p": 3, "m": 1, "f": [1, 0, 1, 0, 1, 0, "1"]}"#,
    ]);
    assert_eq!(a["order"], b["order"]);
    assert_eq!(a["type"], b["type"]);
    assert_eq!(a["branch_locus"], b["branch_locus"]);
}

#[test]
fn text_mode_and_out_file() {
    let mut args = GL23.to_vec();
    args.push("--text");
    let out = run(&args);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("|G| = 48 (GL2(3))"));
    assert!(text.contains("elapsed: "));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut args = GL23.to_vec();
    args.extend(["--out", path.to_str().unwrap()]);
    let out = run(&args);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 48);
}

#[test]
fn liftability_verdicts() {
    let (_, v) = json(&["liftable", "--group", "D(14)", "--p", "7"]);
    assert_eq!(v["liftable"], "yes");
    assert_eq!(v["oort"], "OORT");
    let (_, v) = json(&["liftable", "--group", "SL2(3)", "--p", "3", "--g", "2"]);
    assert_eq!(v["liftable"], "yes");
    let (_, v) = json(&["liftable", "--group", "W3", "--p", "3"]);
    assert_eq!(v["liftable"], "no");
    assert_eq!(v["order"], 48);
    let (_, v) = json(&["liftable", "--p", "7", "--g", "2", "--order", "12"]);
    assert_eq!(v["liftable"], "yes");
}

#[test]
fn oort_statuses() {
    for (g, p, want) in [
        ("Q8", "2", "NOT_OORT"),
        ("(Z/3)^2", "3", "NOT_OORT"),
        ("Z(12)", "3", "OORT"),
        ("D(5)", "5", "OORT"),
        ("D(9)", "3", "CONJECTURAL_Dpn"),
        ("A4", "2", "OORT"),
    ] {
        let (code, v) = json(&["oort", "--group", g, "--p", p]);
        assert_eq!(code, 0);
        assert_eq!(v["oort"], want, "{g} at {p}");
    }
}

#[test]
fn families_and_reduction() {
    let (_, v) = json(&["families", "--case", "u", "--lambda=-5,-5"]);
    assert_eq!(
        (v["u1"].as_str(), v["u2"].as_str()),
        (Some("-250"), Some("50"))
    );

    let (_, v) = json(&["reduce", "--p", "3", "--f", "1,0,-5,0,-5,0,1"]);
    assert_eq!(v["good_reduction"], true);
    assert_eq!(v["fbar"]["display"], "x^6+x^4+x^2+1");

    let (_, v) = json(&[
        "families", "--case", "Z2p", "--g", "2", "--p", "3", "--lambda", "1",
    ]);
    assert_eq!(v["equation"]["display"], "x^6+x^3+1");
    assert_eq!(v["genus_mismatch"], false);
}

#[test]
fn verify_paper_statuses() {
    let (code, v) = json(&["verify-paper", "--p", "3"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        assert_eq!(r["status"], "pass", "{r}");
    }
    let (_, v) = json(&["verify-paper", "--p", "5"]);
    let fails = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .count();
    assert!(fails >= 4);
}

#[test]
fn input_errors_exit_with_two() {
    let (code, v) = json(&["autgroup", "--p", "2", "--f", "1,0,1,0,1,1"]);
    assert_eq!((code, error_kind(&v)), (2, "characteristic_two"));
    let (code, v) = json(&["autgroup", "--p", "3", "--f", "1,0,1"]);
    assert_eq!((code, error_kind(&v)), (2, "genus_too_small"));
    let (code, v) = json(&["autgroup", "--p", "3", "--f", "0,0,1,0,0,0,1"]);
    assert_eq!((code, error_kind(&v)), (2, "not_squarefree"));
    let (code, v) = json(&["autgroup", "--p", "9", "--f", "1,0,1,0,1,0,1"]);
    assert_eq!((code, error_kind(&v)), (2, "not_prime"));
    let (code, _) = json(&["oort", "--group", "Q9", "--p", "3"]);
    assert_eq!(code, 2);
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn resource_bounds_exit_with_three() {
    let (code, v) = json(&["autgroup", "--p", "7", "--f", "0,-1,0,0,0,0,0,1"]);
    assert_eq!((code, error_kind(&v)), (3, "group_too_large"));
    let (code, v) = json(&[
        "--max-ext",
        "1",
        "autgroup",
        "--p",
        "3",
        "--f",
        "1,0,1,0,1,0,1",
    ]);
    assert_eq!((code, error_kind(&v)), (3, "splitting_bound"));
}

#[test]
fn help_and_version_succeed() {
    assert!(run(&["--help"]).status.success());
    assert!(run(&["--version"]).status.success());
    assert!(run(&["autgroup", "--help"]).status.success());
}
