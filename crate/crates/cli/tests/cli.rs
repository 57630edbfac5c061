use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn knotsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotsum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn tmp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("knotsum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn bound_on_bundled_table() {
    let table = fixtures_dir().join("knots.csv");
    let o = knotsum(&["bound", "--components", "3_1,3_1", "--table", table.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("S = 6\nc = 6\n"), "{out}");
    assert!(out.contains("verdict: true"));
}

#[test]
fn reconstruct_prints_vector() {
    let o = knotsum(&["reconstruct", "--params", "1,2,2,1,5,1,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "I+:1 II-:2\n");
}

#[test]
fn kinked_diagram_fails_validation() {
    let p = tmp_file("kinked.pd", "# trefoil with a kink\nX(1,5,2,4) X(3,1,4,8) X(5,3,6,2) X(6,7,7,8)\n");
    let o = knotsum(&["validate", "--pd", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("edge region 6 meets crossing region 3 twice"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(knotsum(&["nonsense"]).status.code(), Some(2));
    assert_eq!(knotsum(&["reconstruct", "--params", "1,0,0,0,0,0,0"]).status.code(), Some(1));
    assert_eq!(knotsum(&["bound", "--components", "11a_1"]).status.code(), Some(1));
    assert_eq!(knotsum(&["faces", "--format", "dot", "--knot", "3_1"]).status.code(), Some(1));
    assert_eq!(knotsum(&["validate", "--knot", "3_1"]).status.code(), Some(0));
}

#[test]
fn structured_outputs_are_versioned() {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("parse", vec!["parse", "--knot", "5_2"]),
        ("faces", vec!["faces", "--code", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"]),
        ("validate", vec!["validate", "--knot", "4_1"]),
        ("dstructure", vec!["dstructure", "--gauss", "O1+ U2+ O3+ U1+ O2+ U3+"]),
        ("params", vec!["params", "--sample", "5"]),
        ("reconstruct", vec!["reconstruct", "--params", "1,2,2,1,5,1,0"]),
        ("paste", vec!["paste", "--inputs", "1,1,1,1,1,0"]),
        ("compat-graph", vec!["compat-graph", "--graph", "subclass"]),
        ("normalize", vec!["normalize", "--state", "0:0:3+;0:1:2-"]),
        ("models", vec!["models"]),
        ("budget", vec!["budget", "--knot", "3_1", "--all", "X2"]),
        ("bound", vec!["bound", "--components", "3_1,4_1"]),
    ];
    for (name, mut args) in cases {
        args.extend(["--format", "structured"]);
        let o = knotsum(&args);
        assert!(o.status.success(), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["schema"], format!("knotsum.{name}.v1"));
    }
}

#[test]
fn byte_deterministic() {
    for args in [
        vec!["params", "--sample", "20", "--seed", "7"],
        vec!["compat-graph", "--format", "dot"],
        vec!["normalize", "--state", "0:0:3+,4+;1:2:1-,2-", "--knot", "3_1", "--format", "structured"],
    ] {
        assert_eq!(knotsum(&args).stdout, knotsum(&args).stdout, "{args:?}");
    }
    let a = knotsum(&["params", "--sample", "5", "--seed", "1"]).stdout;
    let b = knotsum(&["params", "--sample", "5", "--seed", "2"]).stdout;
    assert_ne!(a, b);
}

#[test]
fn fixture_directory_override() {
    let dir = tmp_file("knots.csv", "name,crossing_number\n3_1,3\n").parent().unwrap().to_path_buf();
    std::fs::write(dir.join("primes.pd"), "3_1 X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n").unwrap();
    let run = |comps: &str| {
        Command::new(env!("CARGO_BIN_EXE_knotsum"))
            .args(["bound", "--components", comps])
            .env("KNOTSUM_FIXTURES", &dir)
            .output()
            .unwrap()
    };
    assert!(run("3_1,3_1").status.success());
    assert_eq!(run("4_1").status.code(), Some(1));
}

#[test]
fn budget_certificate_lines() {
    let o = knotsum(&["budget", "--knot", "3_1", "--all", "Z2,Z2", "--assign", "1=X2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("crossing 1: X2=3 allowance=0 total=3 cap=11"), "{out}");
    assert!(out.contains("aggregate: 15 <= 48"));
    let o = knotsum(&["budget", "--knot", "3_1", "--all", "Z2,Z2", "--assign", "9=X2"]);
    assert_eq!(o.status.code(), Some(1));
}
