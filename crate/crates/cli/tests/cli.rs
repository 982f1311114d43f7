use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn qdouble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdouble"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(cmd: &str, spec: &str, extra: &[&str]) -> (i32, Value) {
    let path = data(spec);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = qdouble(&args);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().expect("exit code"), doc)
}

fn failed_ids(doc: &Value) -> Vec<String> {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] != "pass")
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect()
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, cmd: &str, spec: &str) {
    let path = data(spec);
    let out = qdouble(&[cmd, path.to_str().unwrap(), "--threads", "1"]);
    let file = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(file.parent().unwrap()).unwrap();
        std::fs::write(&file, &out.stdout).unwrap();
    }
    let expected = std::fs::read(&file).unwrap_or_else(|e| panic!("{}: {e}", file.display()));
    assert!(
        out.stdout == expected,
        "{name} differs from its golden file"
    );
}

#[test]
fn check_cocycle_exit_codes() {
    let (code, doc) = run("check-cocycle", "z2_q1.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(doc["passed"], true);

    let (code, doc) = run("check-cocycle", "z2_corrupted_table.json", &[]);
    assert_eq!(code, 2);
    let bad = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "cocycle.three_cocycle")
        .unwrap();
    assert_eq!(bad["status"], "fail");
    assert!(bad["violations"][0]["at"].as_str().unwrap().contains(','));

    let out = qdouble(&[
        "check-cocycle",
        data("z3_q1_rational.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no primitive root of unity of order 3"));
}

#[test]
fn corrupted_table_is_refused_before_construction() {
    for cmd in ["verify", "ribbon", "export"] {
        let (code, doc) = run(cmd, "z2_corrupted_table.json", &[]);
        assert_eq!(code, 2, "{cmd}");
        assert!(failed_ids(&doc).contains(&"cocycle.normalized".to_string()));
    }
}

#[test]
fn usage_and_field_errors_exit_one() {
    assert_eq!(qdouble(&["frobnicate"]).status.code(), Some(1));
    let (code, _) = run("verify", "z2_q1.json", &["--field", "reals"]);
    assert_eq!(code, 1);
    let (code, _) = run("verify", "z3_q1.json", &["--field", "fp:5"]);
    assert_eq!(code, 1);
    let (code, _) = run("verify", "z2_q1.json", &["--threads", "0"]);
    assert_eq!(code, 1);
    assert_eq!(qdouble(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_outcomes_across_the_suite() {
    for spec in [
        "z2_q0.json",
        "z2_q1.json",
        "z3_q0.json",
        "klein_q11.json",
        "s3_trivial.json",
    ] {
        let (code, doc) = run("verify", spec, &[]);
        assert_eq!(
            (code, failed_ids(&doc)),
            (0, Vec::<String>::new()),
            "{spec}"
        );
    }
    for spec in ["z3_q1.json", "z3_q2.json"] {
        let (code, doc) = run("verify", spec, &[]);
        assert_eq!(code, 2, "{spec}");
        assert_eq!(
            failed_ids(&doc),
            [
                "modular.h_star",
                "modular.double",
                "modular.u_s_u_formula",
                "modular.u_s_u_unimodular"
            ]
        );
    }
}

#[test]
fn field_flag_overrides_the_spec() {
    let (code, doc) = run("verify", "z2_q1.json", &["--field", "fp:5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["field"], "fp:5");
    let (code, doc) = run(
        "ribbon",
        "z3_q1_rational.json",
        &["--field", "cyclotomic:3"],
    );
    assert_eq!((code, doc["count"].as_u64()), (0, Some(1)));
}

#[test]
fn ribbon_counts() {
    for (spec, n) in [
        ("z2_q0.json", 2),
        ("z2_q1.json", 2),
        ("z3_q1.json", 1),
        ("z3_q2.json", 1),
        ("s3_trivial.json", 2),
        ("klein_q01.json", 4),
    ] {
        let (code, doc) = run("ribbon", spec, &[]);
        assert_eq!(code, 0, "{spec}");
        assert_eq!(doc["count"].as_u64(), Some(n), "{spec}");
        assert_eq!(doc["certificates"].as_array().unwrap().len(), n as usize);
        for cert in doc["certificates"].as_array().unwrap() {
            assert!(cert["checks"]
                .as_object()
                .unwrap()
                .values()
                .all(|v| v == true));
        }
    }
}

#[test]
fn structure_constants_with_candidate_grouplikes() {
    let (code, doc) = run("ribbon", "z2_structure_constants.json", &[]);
    assert_eq!((code, doc["count"].as_u64()), (0, Some(2)));
    let (code, doc) = run("verify", "z2_structure_constants.json", &[]);
    assert_eq!((code, failed_ids(&doc)), (0, Vec::<String>::new()));
}

#[test]
fn out_flag_writes_the_document() {
    let dir = std::env::temp_dir().join(format!("qdouble-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("ribbon.json");
    let out = qdouble(&[
        "ribbon",
        data("z2_q1.json").to_str().unwrap(),
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_slice(&std::fs::read(&file).unwrap()).unwrap();
    assert_eq!(doc["count"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deep_iso_adds_multiplicativity() {
    let (code, doc) = run("verify", "z3_q1.json", &["--deep-iso"]);
    assert_eq!(code, 2);
    let ids: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"iso.multiplicative") && ids.contains(&"dcp.associativity"));
    assert!(!failed_ids(&doc)
        .iter()
        .any(|id| id.starts_with("iso.") || id.starts_with("dcp.")));
}

#[test]
fn keys_are_sorted() {
    let (_, doc) = run("verify", "z2_q1.json", &[]);
    let text = serde_json::to_string(&doc).unwrap();
    let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(text.find("\"anchor\"").unwrap() < text.find("\"id\"").unwrap());
}

#[test]
fn reports_are_deterministic() {
    let path = data("z3_q2.json");
    let a = qdouble(&["verify", path.to_str().unwrap(), "--threads", "1"]);
    let b = qdouble(&["verify", path.to_str().unwrap(), "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let c = qdouble(&["verify", path.to_str().unwrap(), "--threads", "4"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn golden_files() {
    for (name, cmd, spec) in [
        ("z2_q1.verify.json", "verify", "z2_q1.json"),
        ("z2_q1.ribbon.json", "ribbon", "z2_q1.json"),
        ("z2_q1.export.json", "export", "z2_q1.json"),
        ("z3_q1.verify.json", "verify", "z3_q1.json"),
        ("z3_q1.ribbon.json", "ribbon", "z3_q1.json"),
        ("z3_q1.export.json", "export", "z3_q1.json"),
        ("s3_trivial.verify.json", "verify", "s3_trivial.json"),
        ("s3_trivial.ribbon.json", "ribbon", "s3_trivial.json"),
        ("s3_trivial.export.json", "export", "s3_trivial.json"),
    ] {
        golden(name, cmd, spec);
    }
}
