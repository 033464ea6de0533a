use std::process::{Command, Output};

use expcon::export::{self, ExportEnvelope, TableName};
use expcon::exactring::parse_fraction;
use expcon::Context;

fn expcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expcon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kappa_n3_json() {
    let o = expcon(&["tables", "--n", "3", "--matrix", "kappa", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let env = ExportEnvelope::from_json(&stdout(&o)).unwrap();
    assert_eq!(env.row_labels, ["3", "2,1", "1,1,1"]);
    assert_eq!(env.col_labels, ["s1 s2", "s2 s1", "s1 s2 s1", "s2", "s1", "1"]);
    assert_eq!(env.entries[0], ["1", "1", "q - 1", "0", "0", "0"]);
    assert_eq!(env.entries[1], ["0", "0", "q", "1", "1", "0"]);
    assert_eq!(env.entries[2], ["0", "0", "0", "0", "0", "1"]);
}

#[test]
fn mkcd_n2_default_format() {
    let o = expcon(&["tables", "--n", "2", "--matrix", "MkCD"]);
    assert_eq!(o.status.code(), Some(0));
    let env = ExportEnvelope::from_json(&stdout(&o)).unwrap();
    let values = env.values().unwrap();
    assert_eq!(values[0][0], parse_fraction("q/(1 + q)").unwrap());
    assert!(values[0][1].is_zero());
    assert_eq!(values[1][0], parse_fraction("1/(1 + q)").unwrap());
    assert!(values[1][1].is_one());
}

#[test]
fn b_n1() {
    let o = expcon(&["tables", "--n", "1", "--matrix", "b"]);
    let env = ExportEnvelope::from_json(&stdout(&o)).unwrap();
    assert_eq!(env.entries, [["1"]]);
}

#[test]
fn csv_and_latex() {
    let o = expcon(&["tables", "--n", "2", "--matrix", "a", "--format", "csv"]);
    assert_eq!(stdout(&o), ",2,\"1,1\"\n2,-q*t + 1,q + 1\n\"1,1\",0,t + 1\n");
    let o = expcon(&["tables", "--n", "3", "--matrix", "Aw", "--format", "latex"]);
    let tex = stdout(&o);
    assert!(tex.contains(" & s_{1} s_{2} & s_{2} s_{1} & s_{1} s_{2} s_{1} & s_{2} & s_{1} & 1 \\\\ \\hline"), "{tex}");
    assert!(tex.contains("(21) & 0 & 0 & q^{3} & q^{2} & q^{2} & 2q + 1 \\\\"), "{tex}");
}

#[test]
fn round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=4 {
        let ctx = Context::new(n).unwrap();
        for t in TableName::ALL {
            let path = dir.path().join(format!("{t}-{n}.json"));
            let o = expcon(&["tables", "--n", &n.to_string(), "--matrix", t.as_str(), "--out", path.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{t} n={n}");
            assert!(o.stdout.is_empty());
            let text = std::fs::read_to_string(&path).unwrap();
            assert!(text.ends_with('\n'));
            let back = ExportEnvelope::from_json(&text).unwrap();
            let direct = export::table(&ctx, t).unwrap();
            assert_eq!(back.values().unwrap(), direct.values().unwrap(), "{t} n={n}");
            assert_eq!((back.row_labels, back.col_labels), (direct.row_labels, direct.col_labels));
        }
    }
}

#[test]
fn verify_suites() {
    let o = expcon(&["verify", "--n", "3", "--suite", "golden"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 16);
    assert!(!out.contains("FAIL"));
    assert_eq!(expcon(&["verify", "--n", "4", "--suite", "atob"]).status.code(), Some(0));
    assert_eq!(expcon(&["verify", "--n", "2", "--suite", "idempotent"]).status.code(), Some(0));
    assert_eq!(expcon(&["verify", "--n", "4"]).status.code(), Some(0));
}

#[test]
fn oracle_checks() {
    let o = expcon(&["oracle", "--n", "3", "--p", "2", "--check", "lusztig"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS lusztig")).count(), 18);
    assert!(out.ends_with("18 cells, 0 mismatches\n"));

    let o = expcon(&["oracle", "--n", "3", "--p", "2", "--check", "springer"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS springer")).count(), 9);

    let o = expcon(&["oracle", "--n", "2", "--p", "5", "--check", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));

    let o = expcon(&["oracle", "--n", "2", "--p", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 4 + 4);
    assert!(records.iter().all(|r| r["match"] == true));
    assert_eq!(v["class_intersection"].as_array().unwrap().len(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(expcon(&["tables", "--n", "3", "--matrix", "nope"]).status.code(), Some(2));
    assert_eq!(expcon(&["tables", "--matrix", "b"]).status.code(), Some(2));
    assert_eq!(expcon(&["verify", "--n", "4", "--suite", "golden"]).status.code(), Some(2));
    assert_eq!(expcon(&["tables", "--n", "0", "--matrix", "b"]).status.code(), Some(2));
    assert_eq!(expcon(&["oracle", "--n", "2", "--p", "4"]).status.code(), Some(2));
    assert_eq!(expcon(&["oracle", "--n", "3", "--p", "7"]).status.code(), Some(3));
    assert_eq!(expcon(&["oracle", "--n", "3", "--p", "5", "--check", "class-intersection"]).status.code(), Some(3));
    assert_eq!(expcon(&["tables", "--n", "9", "--matrix", "b"]).status.code(), Some(3));
    assert_eq!(expcon(&["tables", "--n", "7", "--matrix", "kappa"]).status.code(), Some(3));
    assert_eq!(expcon(&["verify", "--n", "6", "--suite", "atob"]).status.code(), Some(3));
    assert_eq!(expcon(&["--help"]).status.code(), Some(0));
}
