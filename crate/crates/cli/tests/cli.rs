use std::process::{Command, Output};

use affine_crystal::crystal::explore;
use affine_crystal::ChargedMultipartition;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-crystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn cm(s: &str) -> ChargedMultipartition {
    s.parse().unwrap()
}

const WORKED: &str = "4.2^2.1^3|5.2^3.1^4|7^2.6.4^2.2^2.1^3 @ 0,9,5";

#[test]
fn check_exit_codes() {
    let out = run(&["check", "flotw", "--e", "3", "2.1^2|2.1^3|2.1^4 @ 2,3,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");
    assert_eq!(
        ok(&[
            "check",
            "cylindric",
            "--e",
            "3",
            "2.1^2|2.1^3|2.1^4 @ 2,3,4"
        ]),
        "true\n"
    );
    assert_eq!(ok(&["check", "flotw", "--e", "2", "1|- @ 0,1"]), "true\n");
    assert_eq!(
        run(&["check", "d-e", "--e", "2", "-|- @ 0,2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(ok(&["check", "s-e", "--e", "3", "-|- @ 0,2"]), "true\n");
    assert_eq!(
        ok(&["check", "highest-weight", "--e", "3", "-|- @ 0,1"]),
        "true\n"
    );
}

#[test]
fn error_exit_codes() {
    assert_eq!(
        run(&["check", "flotw", "--e", "3", "1|x @ 0,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["apply", "--e", "2", "--ops", "g0", "-|- @ 0,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "flotw", "--e", "1", "-|- @ 0,1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["apply", "--e", "2", "--ops", "f2", "-|- @ 0,1"])
            .status
            .code(),
        Some(3)
    );
    let out = run(&["reduce", "--e", "3", "--trace", "1|- @ 0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.txt");
    std::fs::write(&log, "RS p=3 Q=[[1,2]]\n").unwrap();
    let out = run(&[
        "invert",
        "--e",
        "2",
        "--log",
        log.to_str().unwrap(),
        "-|- @ 0,1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::write(&log, "RS p=x\n").unwrap();
    let out = run(&[
        "invert",
        "--e",
        "2",
        "--log",
        log.to_str().unwrap(),
        "-|- @ 0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn symbol_and_word() {
    assert_eq!(
        ok(&["symbol", "--p", "4", "4.1|2^2|3 @ 0,3,-2"]),
        "0 4\n0 1 2 3 4 7 8\n0 1 3 7\n"
    );
    let out = ok(&["word", "--e", "3", "--i", "0", "4.1|2^2|3 @ 0,3,-2"]);
    assert!(out.contains("word: ARARR\n"));
    assert!(out.contains("reduced: ARR\n"));
    assert!(out.contains("good addable: (2,1,3)\n"));
    assert!(out.contains("good removable: (2,2,2)\n"));
}

#[test]
fn apply_operators() {
    assert_eq!(
        ok(&["apply", "--e", "2", "--ops", "f0,f1", "-|- @ 0,1"]),
        "2|- @ 0,1\n"
    );
    assert_eq!(
        ok(&["apply", "--e", "2", "--ops", "f0,e0,e0", "-|- @ 0,1"]),
        "0\n"
    );
    assert_eq!(
        ok(&[
            "apply",
            "--e",
            "2",
            "--inf",
            "--ops",
            "f-1,e-1",
            "-|1 @ 0,0"
        ]),
        "-|1 @ 0,0\n"
    );
}

#[test]
fn rsk_example() {
    let out = ok(&["rsk", "--e", "2", "--p", "3", "3.2|3^2 @ 2,0"]);
    let mut lines = out.lines();
    let image = lines.next().unwrap();
    assert!(lines.next().unwrap().starts_with("RS p=3 Q="));
    assert!(cm(image).charge().is_weakly_increasing());
}

#[test]
fn canonical_trace_passes_the_cylindric_charge() {
    let out = ok(&["canonical", "--e", "4", WORKED, "--trace"]);
    assert!(out.contains("-> 4.2^2.1^3|7.3^2.2^2.1^3|3^2.2.1^2 @ -4,-1,-1 [cylindric]"));
    let summary = out.lines().last().unwrap();
    assert!(summary.starts_with("m=5 "), "{summary}");
}

#[test]
fn canonical_and_invert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (e, input) in [
        ("4", WORKED),
        ("3", "3^2.2|2^2.1|3.1^2 @ 3,3,4"),
        ("2", "-|1 @ 0,0"),
        ("3", "2.1^2|2.1^3|2.1^4 @ 2,3,4"),
    ] {
        let log = dir.path().join(format!("{e}.log"));
        let log = log.to_str().unwrap();
        let out = ok(&["canonical", "--e", e, "--log", log, input]);
        let image = out.lines().next().unwrap();
        assert!(cm(image).is_flotw(e.parse().unwrap()));
        let back = ok(&["invert", "--e", e, "--log", log, image]);
        assert_eq!(back, format!("{}\n", cm(input)));
        assert_eq!(back.trim_end(), input);
    }
}

#[test]
fn graph_dot_matches_explore() {
    let out = ok(&[
        "graph",
        "--e",
        "2",
        "-|- @ 0,1",
        "--depth",
        "1",
        "--format",
        "dot",
    ]);
    let g = explore(&cm("-|- @ 0,1"), 2, 1).unwrap();
    assert_eq!(out, g.to_dot());
    assert_eq!(out.matches("[label=").count(), 5);
    assert!(out.contains("[label=\"0\"]") && out.contains("[label=\"1\"]"));
    let text = ok(&["graph", "--e", "2", "-|- @ 0,1", "--depth", "1"]);
    assert_eq!(text, g.to_text());
}

#[test]
fn vertices_and_oracle() {
    let out = ok(&["vertices", "--e", "2", "--max-rank", "2", "-|1 @ 0,0"]);
    let g = explore(&cm("-|1 @ 0,0"), 2, 1).unwrap();
    let expected: String = g.vertices.iter().map(|v| format!("{v}\n")).collect();
    assert_eq!(out, expected);
    let out = ok(&["oracle", "--e", "3", "3^2.2|2^2.1|3.1^2 @ 3,3,4"]);
    assert!(out.starts_with("-|-|- @ 0,0,1\ncharge=0,0,1\n"));
}

#[test]
fn deterministic_output() {
    let args = ["canonical", "--e", "4", "--trace", WORKED];
    assert_eq!(ok(&args), ok(&args));
    let args = [
        "graph",
        "--e",
        "3",
        "--depth",
        "4",
        "--format",
        "dot",
        "-|- @ 0,1",
    ];
    assert_eq!(ok(&args), ok(&args));
}
