use std::process::{Command, Output};

fn wordgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wordgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let cases: &[&[&str]] = &[
        &["build", "abcab", "--format", "dot"],
        &["build", "abcab", "--format", "json"],
        &["check", "abcbd"],
        &["table", "--max-length", "7", "--max-alphabet", "4"],
        &["histogram", "--length", "7", "--alphabet", "3"],
        &["verify", "--max-length", "6"],
    ];
    for args in cases {
        let a = wordgraph(args);
        let b = wordgraph(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
        assert!(a.stderr.is_empty(), "{args:?} wrote to stderr");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(wordgraph(&["check", "abca"]).status.code(), Some(0));
    assert_eq!(wordgraph(&["check", "abcb"]).status.code(), Some(1));
    assert_eq!(wordgraph(&["check", "AB"]).status.code(), Some(2));
    assert_eq!(wordgraph(&["build", ""]).status.code(), Some(2));
    assert_eq!(wordgraph(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        wordgraph(&["verify", "--max-length", "7", "--inject-fault", "6,2"]).status.code(),
        Some(3)
    );
}

#[test]
fn represent_round_trips_through_build() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let built = wordgraph(&["build", "abcbdcd", "--format", "json"]);
    std::fs::write(&path, &built.stdout).unwrap();
    let rep = wordgraph(&["represent", "--input", path.to_str().unwrap()]);
    assert_eq!(rep.status.code(), Some(0));
    let word = String::from_utf8(rep.stdout).unwrap();
    let rebuilt = wordgraph(&["build", word.trim(), "--format", "json"]);
    assert_eq!(rebuilt.stdout, built.stdout);
}

#[test]
fn represent_rejects_missing_file() {
    let out = wordgraph(&["represent", "--input", "/nonexistent/graph.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
