use std::process::{Command, Output};

use fdpi_cli::format::parse_csv;
use fdpi_core::ScanRow;
use serde_json::{json, Value};

fn fdpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdpi"))
        .args(args)
        .env_remove("FDPI_JOBS")
        .output()
        .expect("failed to launch fdpi")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = fdpi(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    fdpi(args).status.code().unwrap()
}

#[test]
fn ideals_command() {
    assert_eq!(stdout_json(&["ideals", "--biquad", "-a", "50", "-b", "155", "-p", "7"]), json!([0, 2, 5]));
    assert_eq!(stdout_json(&["ideals", "--quad", "-a", "50", "-p", "3"]), json!([]));
    assert_eq!(stdout_json(&["ideals", "--quad", "-a", "-4", "-p", "5"]), json!([1, 4]));
}

#[test]
fn combine_and_decompose_commands() {
    assert_eq!(
        stdout_json(&["combine", "-a", "50", "-b", "155", "-p", "7", "-r", "1", "-s", "6"]),
        json!({"t": 0})
    );
    assert_eq!(
        stdout_json(&["decompose", "-a", "50", "-b", "155", "-p", "7", "-t", "2"]),
        json!({"kind": "unique", "r": 1, "s": 1})
    );
    assert_eq!(
        stdout_json(&["decompose", "-a", "50", "-b", "155", "-p", "7", "-t", "0"]),
        json!({"kind": "zero", "nu": 2, "pairs": [[1, 6], [6, 1]]})
    );
    assert_eq!(
        stdout_json(&["decompose", "-a", "50", "-b", "155", "-p", "3", "-t", "0"]),
        json!({"kind": "zero", "nu": 0, "pairs": []})
    );
}

#[test]
fn divides_command() {
    let base = ["divides", "-a", "-4", "-b", "6", "-n", "5", "-m", "1", "-p", "5"];
    let with = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        stdout_json(&args)
    };
    assert_eq!(with(&["-t", "2"]), json!({"divides": false, "exceptional": true}));
    assert_eq!(with(&["-t", "0"]), json!({"divides": true, "exceptional": false}));
    assert_eq!(
        with(&["-r", "1", "-s", "4"]),
        json!({"t": 0, "divides": true, "exceptional": false})
    );
    assert_eq!(
        with(&["--r", "4", "--s", "4"]),
        json!({"t": 3, "divides": false, "exceptional": true})
    );
}

#[test]
fn exit_codes() {
    // invalid field parameters
    assert_eq!(code(&["ideals", "--biquad", "-a", "2", "-b", "8", "-p", "7"]), 2);
    assert_eq!(code(&["ideals", "--quad", "-a", "0", "-p", "7"]), 2);
    assert_eq!(code(&["scan", "-a", "2", "-b", "3", "--pmax", "2000000000000"]), 2);
    assert_eq!(code(&["divides", "-a", "-4", "-b", "6", "-n", "4", "-m", "2", "-p", "5", "-t", "0"]), 2);
    // bad or missing flags
    assert_eq!(code(&["ideals", "-a", "2", "-p", "7"]), 2);
    assert_eq!(code(&["divides", "-a", "-4", "-b", "6", "-n", "5", "-m", "1", "-p", "5"]), 2);
    assert_eq!(code(&["scan", "-a", "2", "-b", "3", "--pmax", "10", "--format", "xml"]), 2);
    // non-prime norm
    assert_eq!(code(&["ideals", "--quad", "-a", "3", "-p", "9"]), 3);
    assert_eq!(code(&["combine", "-a", "50", "-b", "155", "-p", "-7", "-r", "1", "-s", "6"]), 3);
    assert_eq!(code(&["decompose", "-a", "50", "-b", "155", "-p", "1", "-t", "0"]), 3);
    // domain preconditions
    assert_eq!(code(&["decompose", "-a", "50", "-b", "155", "-p", "7", "-t", "1"]), 4);
    assert_eq!(code(&["combine", "-a", "50", "-b", "155", "-p", "7", "-r", "2", "-s", "6"]), 4);
    assert_eq!(code(&["divides", "-a", "-4", "-b", "6", "-n", "1", "-m", "1", "-p", "5", "-r", "1", "-s", "1"]), 4);
}

fn scan_text(extra: &[&str]) -> String {
    let mut args = vec!["scan"];
    args.extend_from_slice(extra);
    let out = fdpi(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn parse_jsonl(text: &str) -> Vec<ScanRow> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn scan_small_examples() {
    let csv = scan_text(&["-a", "50", "-b", "155", "--pmax", "7", "--format", "csv"]);
    assert_eq!(
        csv,
        "p,qa,qb,bi,divides,exceptional\n2,0,1,1,,\n3,,,0,,\n5,0,0,0,,\n7,1;6,1;6,0;2;5,,\n"
    );

    let rows = parse_jsonl(&scan_text(&["-a", "-4", "-b", "6", "--pmax", "5", "-n", "5", "-m", "1"]));
    let last = rows.last().unwrap();
    assert_eq!(last.p, 5);
    let flags: Vec<_> = last.bi.iter().map(|b| (b.t, b.divides, b.exceptional)).collect();
    assert_eq!(
        flags,
        vec![
            (0, Some(true), Some(false)),
            (2, Some(false), Some(true)),
            (3, Some(false), Some(true)),
        ]
    );

    let single = parse_jsonl(&scan_text(&["-a", "2", "-b", "3", "--pmax", "2"]));
    assert_eq!(single.len(), 1);
    assert_eq!(single[0].p, 2);
}

#[test]
fn scan_formats_carry_identical_data() {
    for extra in [&[][..], &["-n", "-6", "-m", "5"][..]] {
        let mut base = vec!["-a", "-4", "-b", "6", "--pmax", "3000"];
        base.extend_from_slice(extra);
        let with_format = |f: &str| {
            let mut args = base.clone();
            args.extend_from_slice(&["--format", f]);
            scan_text(&args)
        };
        let jsonl = parse_jsonl(&with_format("jsonl"));
        let json: Vec<ScanRow> = serde_json::from_str(&with_format("json")).unwrap();
        let csv = parse_csv(&with_format("csv")).unwrap();
        assert_eq!(jsonl.len(), 430);
        assert_eq!(jsonl, json);
        assert_eq!(jsonl, csv);
    }
}

#[test]
fn scan_is_independent_of_worker_count() {
    let args = ["-a", "50", "-b", "155", "--pmax", "300000", "-n", "7", "-m", "-3"];
    let one = scan_text(&[&args[..], &["--jobs", "1"]].concat());
    let four = scan_text(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);

    let from_env = Command::new(env!("CARGO_BIN_EXE_fdpi"))
        .arg("scan")
        .args(args)
        .env("FDPI_JOBS", "3")
        .output()
        .unwrap();
    assert!(from_env.status.success());
    assert_eq!(String::from_utf8(from_env.stdout).unwrap(), one);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = fdpi(&[
        "scan", "-a", "50", "-b", "155", "--pmax", "7", "--format", "csv",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let rows = parse_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rows.iter().map(|r| r.p).collect::<Vec<_>>(), vec![2, 3, 5, 7]);
}
