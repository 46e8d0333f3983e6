use std::process::{Command, Output};

fn infinity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infinity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = infinity(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["eval", "--seq", "s", "--n", "19"]), "3\n");
    assert_eq!(
        stdout(&["block", "--seq", "s", "--start", "0", "--len", "8", "--format", "csv"]),
        "0,1,-1,2,1,0,-2,3\n"
    );
    assert_eq!(
        stdout(&["render", "--seq", "s", "--start", "0", "--len", "3", "--base", "G4"]),
        "G4 G#4 F#4\n"
    );
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["eval", "--n", "1000000"],
        &["block", "--len", "4", "--format", "json"],
        &["positions", "--note", "-2", "--limit", "5"],
        &["pda", "--note", "0", "--word", "101"],
        &["pairs", "--i", "3", "--j", "2", "--format", "json"],
        &["table", "--format", "csv"],
        &["count", "--note", "0", "--exp", "20", "--brute"],
        &["scan", "--prefix-exp", "10", "--max-x", "8"],
        &["runs", "--prefix-exp", "12"],
        &["properties", "--seq", "t", "--id", "5"],
        &["render", "--len", "8", "--base", "C3"],
    ];
    for args in cases {
        stdout(args);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        infinity(&["--quiet", "pda", "--note", "3", "--word", "10011"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        infinity(&["--quiet", "pda", "--note", "2", "--word", "10011"])
            .status
            .code(),
        Some(1)
    );
    let rejected = infinity(&["--quiet", "pda", "--note", "2", "--word", "10011"]);
    assert!(rejected.stdout.is_empty());
    assert_eq!(
        infinity(&["pda", "--note", "0", "--word", "10a"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(infinity(&["transpose"]).status.code(), Some(2));
    assert_eq!(
        infinity(&["eval", "--n", "1", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        infinity(&["count", "--note", "0", "--exp", "200"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(infinity(&["--help"]).status.code(), Some(0));
}

#[test]
fn usage_error_shows_help() {
    let out = infinity(&["frobnicate"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("Usage"), "{err}");
}

#[test]
fn table_csv_shape() {
    let text = stdout(&["table", "--format", "csv"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 23);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 25));
}

#[test]
fn positions_csv_one_row_each() {
    let text = stdout(&[
        "positions",
        "--note",
        "0",
        "--limit",
        "19",
        "--bound",
        "120",
        "--format",
        "csv",
    ]);
    let first: Vec<u64> = text
        .lines()
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(
        first,
        [0, 5, 10, 17, 20, 27, 34, 40, 45, 54, 65, 68, 75, 80, 85, 90, 99, 105, 108]
    );
}

#[test]
fn empty_report_is_empty_array() {
    let text = stdout(&["scan", "--prefix-exp", "10", "--format", "json"]);
    assert_eq!(text, "[]\n");
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("block.csv");
    let path_str = path.to_str().unwrap();
    let out = infinity(&["block", "--len", "8", "--format", "csv", "--out", path_str]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "0,1,-1,2,1,0,-2,3\n"
    );
}

#[test]
fn config_file_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    std::fs::write(&path, "name mine\nradix 2\nbranch 0 - 0\nbranch 1 + 1\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&["block", "--seq", p, "--len", "8", "--format", "csv"]),
        "0,1,-1,2,1,0,-2,3\n"
    );

    std::fs::write(&path, "radix 2\nbranch 0 * 0\n").unwrap();
    assert_eq!(
        infinity(&["eval", "--seq", p, "--n", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: &[&[&str]] = &[
        &["table"],
        &["properties", "--seq", "u", "--format", "json"],
        &[
            "scan",
            "--seq",
            "u",
            "--prefix-exp",
            "4",
            "--mode",
            "square",
            "--format",
            "csv",
        ],
        &["runs", "--format", "json"],
    ];
    for args in cases {
        let a = infinity(args);
        let b = infinity(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn sequential_and_parallel_scans_agree() {
    let base = [
        "scan",
        "--seq",
        "u",
        "--prefix-exp",
        "6",
        "--max-x",
        "6",
        "--format",
        "csv",
    ];
    let parallel = stdout(&base);
    let mut seq_args = base.to_vec();
    seq_args.push("--sequential");
    assert_eq!(parallel, stdout(&seq_args));
}
