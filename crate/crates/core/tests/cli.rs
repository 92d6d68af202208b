use std::path::Path;
use std::process::{Command, Output};

fn ringcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_square_stable_on_m2z2() {
    let o = ringcheck(&["check", "square-stable", "--ring", "M(2,Z(2))", "--ideal", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds=false counterexample a=[0,1,0,0], r=[0,0,1,0]"));
    let o = ringcheck(&[
        "--strict",
        "check",
        "square-stable",
        "--ring",
        "M(2,Z(2))",
        "--ideal",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_shipped_corpus_file() {
    let file = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/default.toml");
    let o = ringcheck(&[
        "--strict",
        "verify",
        "all",
        "--corpus",
        file.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["record"], "summary");
    assert_eq!(last["inconsistencies"], 0);
    assert_eq!(last["errors"], 0);
    assert!(last["rings"].as_u64().unwrap() >= 25);
}

#[test]
fn verify_subset_on_one_ring() {
    let o = ringcheck(&["verify", "T42,C43", "--ring", "M(2,Z(2))", "--ideal", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert!(
        out.lines().all(|l| l.contains("FF") && l.ends_with("consistent")),
        "{out}"
    );
}

#[test]
fn example41_names_witness() {
    let o = ringcheck(&["example41", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("found nonzero regular square-stable ideal all of size 9"));
}

#[test]
fn search_is_thread_independent() {
    let args = [
        "search",
        "--family",
        "T(2,Z({n}))",
        "--params",
        "2..4",
        "--a",
        "stable-range-one",
        "--b",
        "regular",
    ];
    let a = ringcheck(&[&["--threads", "1"], &args[..]].concat());
    let b = ringcheck(&[&["--threads", "3"], &args[..]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("summary"));
}

#[test]
fn errors_exit_2() {
    let o = ringcheck(&["axioms", "--ring", "Zi(3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 4"));
    assert_eq!(
        ringcheck(&["verify", "all", "--corpus", "/nonexistent/x.toml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ringcheck(&["check", "exchange", "--ring", "Z(6)", "--ideal", "gen(7)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ringcheck(&["classify", "--ring", "M(3,Z(2))"]).status.code(), Some(2));
    assert_eq!(ringcheck(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ringcheck(&["--help"]).status.code(), Some(0));
}

#[test]
fn describe_and_ideals() {
    let o = ringcheck(&["describe", "--ring", "Z(4)"]);
    let out = stdout(&o);
    assert!(out.contains("jacobson     2 {0, 2}"), "{out}");
    let o = ringcheck(&["--format", "json", "ideals", "--ring", "Z(6)"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}
