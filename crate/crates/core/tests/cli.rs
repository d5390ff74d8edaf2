//! End-to-end tests of the `realsat` binary: documented examples, exit codes,
//! determinism and JSON schemas.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use realsat::qsl2;
use realsat::zigzag::{ZBasis, ZElement, ZigzagAlgebra};
use serde_json::Value;

fn realsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realsat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = realsat(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    realsat(args).status.code()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("realsat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schemas/{name}", env!("CARGO_MANIFEST_DIR"));
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

fn assert_valid(validator: &jsonschema::Validator, instance: &Value) {
    if let Err(e) = validator.validate(instance) {
        panic!("{instance} fails its schema: {e}");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["char", "simple", "3", "+"]), "k⁺(3) ⊕ k⁻(1) ⊕ k⁺(−1) ⊕ k⁻(−3)\n");
    assert_eq!(stdout(&["char", "standard", "0", "+"]), "k⁺(0)\n");
    assert_eq!(
        stdout(&["char", "standard", "2", "+", "--format", "json"]),
        "{\"plus\":{\"2\":1,\"0\":1,\"-2\":1},\"minus\":{\"0\":1}}\n"
    );
    assert_eq!(stdout(&["jh", "standard", "3", "+"]), "L(3)⁺, L(1)⁺\n");
    assert_eq!(stdout(&["jh", "projective", "3", "+"]), "L(5)⁺, L(3)⁺ ×2, L(1)⁺\n");
    assert_eq!(stdout(&["jh", "simple", "4", "+"]), "L(4)⁺\n");
    assert_eq!(stdout(&["homdim", "2", "2"]), "2\n");
    assert_eq!(stdout(&["homdim", "0", "2"]), "1\n");
    assert_eq!(stdout(&["homdim", "0", "4"]), "0\n");
    assert_eq!(stdout(&["jh", "standard", "2", "minus"]), "L(2)⁻, L(0)⁺, L(0)⁻\n");
}

#[test]
fn verify_suites_exit_zero() {
    for args in [
        &["verify", "zigzag", "--max", "4"][..],
        &["verify", "clebsch-gordan", "--max", "5"],
        &["verify", "steinberg"],
        &["verify", "bgg", "--max", "3"],
        &["verify", "blocks"],
        &["verify", "relations", "--max", "3"],
        &["verify", "frobenius", "--max", "3"],
    ] {
        assert_eq!(code(args), Some(0), "{args:?}");
    }
    let text = stdout(&["verify", "zigzag", "--max", "2"]);
    assert!(text.contains("[PASS] z_1·z_1: 0 = 0"));
    assert!(text.ends_with("42 checks, 0 failed\n"));
}

#[test]
fn verify_all_at_three_is_fast() {
    let start = Instant::now();
    assert_eq!(code(&["verify", "all", "--max", "3"]), Some(0));
    assert!(start.elapsed() < Duration::from_secs(300));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[][..],
        &["char", "widget", "1", "+"],
        &["char", "simple", "-1", "+"],
        &["char", "simple", "1", "*"],
        &["char", "simple"],
        &["verify", "everything"],
        &["verify", "zigzag", "--max", "13"],
        &["verify", "zigzag", "--max", "-1"],
        &["homdim", "1", "2"],
        &["homdim", "0", "26"],
        &["frobnicate"],
    ] {
        assert_eq!(code(args), Some(2), "{args:?}");
    }
    let out = realsat(&["verify", "zigzag", "--max", "13"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--unbounded"));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
}

#[test]
fn failing_table_exits_one() {
    let good = scratch("good.json");
    std::fs::write(&good, ZigzagAlgebra::make(2).to_json().to_string()).unwrap();
    assert_eq!(code(&["check-table", good.to_str().unwrap()]), Some(0));

    let mut broken = ZigzagAlgebra::make(2);
    broken.set_product(ZBasis::Z(1), ZBasis::Z(1), ZElement::basis(ZBasis::E(1)));
    let bad = scratch("bad.json");
    std::fs::write(&bad, broken.to_json().to_string()).unwrap();
    let out = realsat(&["check-table", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let failing: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["pass"] == false)
        .collect();
    assert!(failing.iter().any(|v| v["relation"] == "z_1·z_1 = 0"));

    assert_eq!(code(&["check-table", scratch("missing.json").to_str().unwrap()]), Some(2));
}

#[test]
fn unwritable_output_exits_one() {
    let target = scratch("no-such-dir").join("nested").join("out.txt");
    assert_eq!(code(&["char", "simple", "1", "+", "--output", target.to_str().unwrap()]), Some(1));
}

#[test]
fn output_file_receives_the_report() {
    let path = scratch("steinberg.txt");
    let out = realsat(&["verify", "steinberg", "--max", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["verify", "steinberg", "--max", "3"]));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--max", "3", "--format", "json"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    for threads in ["1", "3"] {
        let out = Command::new(env!("CARGO_BIN_EXE_realsat"))
            .args(args)
            .env("REALSAT_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), first, "REALSAT_THREADS={threads}");
    }
    let bad = Command::new(env!("CARGO_BIN_EXE_realsat"))
        .args(["homdim", "0", "0"])
        .env("REALSAT_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_outputs_match_schemas() {
    let character = schema("character.schema.json");
    let jh = schema("jh.schema.json");
    for kind in ["standard", "costandard", "simple", "projective"] {
        for n in 0..=6 {
            for sign in ["+", "-"] {
                let c: Value = serde_json::from_str(&stdout(&["char", kind, &n.to_string(), sign, "--format", "json"])).unwrap();
                assert_valid(&character, &c);
                let j: Value = serde_json::from_str(&stdout(&["jh", kind, &n.to_string(), sign, "--format", "json"])).unwrap();
                assert_valid(&jh, &j);
            }
        }
    }
    let homdim: Value = serde_json::from_str(&stdout(&["homdim", "2", "4", "--format", "json"])).unwrap();
    assert_valid(&schema("homdim.schema.json"), &homdim);
    assert_eq!(homdim["dim"], 1);

    let line = schema("report-line.schema.json");
    let report = stdout(&["verify", "all", "--max", "2", "--format", "json"]);
    let mut suites = std::collections::BTreeSet::new();
    for l in report.lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_valid(&line, &v);
        suites.insert(v["suite"].as_str().unwrap().to_string());
    }
    assert_eq!(suites.len(), 7);

    let table = schema("zigzag-table.schema.json");
    for n in 0..=3 {
        assert_valid(&table, &ZigzagAlgebra::make(n).to_json());
    }
    let qmod = schema("qmod.schema.json");
    for n in 0..=4 {
        assert_valid(&qmod, &qsl2::weyl(n).unwrap().to_json());
        assert_valid(&qmod, &qsl2::tensor(&qsl2::simple(n).unwrap(), &qsl2::simple(1).unwrap()).to_json());
    }
    // a character with a zero multiplicity is not a valid encoding
    let bad: Value = serde_json::json!({"plus": {"0": 0}, "minus": {}});
    assert!(!character.is_valid(&bad));
}
