//! End-to-end runs of the `genalg` binary and its exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const POSITIVE: i32 = 0;
const NEGATIVE: i32 = 1;
const INCONCLUSIVE: i32 = 2;
const INVALID: i32 = 3;

fn genalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Runs a command, expects `want`, and stores its standard output in `dir/name`.
fn save(dir: &Path, name: &str, args: &[&str], want: i32) -> PathBuf {
    let out = genalg(args);
    assert_eq!(code(&out), want, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = dir.join(name);
    fs::write(&path, &out.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn field_workflow() {
    let dir = TempDir::new().unwrap();
    let mat = save(
        dir.path(),
        "mat.json",
        &["zoo", "matrix", "--field", "F2", "--n", "2"],
        POSITIVE,
    );

    let cert = save(
        dir.path(),
        "pair.json",
        &["check", s(&mat), "--tuple", "[[1,0,0,0],[0,1,1,0]]"],
        POSITIVE,
    );
    assert_eq!(code(&genalg(&["verify-cert", s(&mat), s(&cert)])), POSITIVE);
    save(
        dir.path(),
        "single.json",
        &["check", s(&mat), "--tuple", "[[1,0,0,0]]"],
        NEGATIVE,
    );

    let min = save(dir.path(), "min.json", &["mingen", s(&mat)], POSITIVE);
    let body: Value = serde_json::from_str(&fs::read_to_string(&min).unwrap()).unwrap();
    assert_eq!(body["body"]["n_upper"], 2);
    assert_eq!(code(&genalg(&["verify-cert", s(&mat), s(&min)])), POSITIVE);

    let tampered = fs::read_to_string(&min)
        .unwrap()
        .replace("\"n_upper\": 2", "\"n_upper\": 1");
    let bad = dir.path().join("bad.json");
    fs::write(&bad, tampered).unwrap();
    assert_eq!(code(&genalg(&["verify-cert", s(&mat), s(&bad)])), NEGATIVE);

    let other = save(
        dir.path(),
        "mat3.json",
        &["zoo", "matrix", "--field", "F3", "--n", "2"],
        POSITIVE,
    );
    assert_eq!(code(&genalg(&["verify-cert", s(&other), s(&min)])), NEGATIVE);
}

#[test]
fn uncertified_minimum_is_inconclusive() {
    let dir = TempDir::new().unwrap();
    let mat = save(
        dir.path(),
        "mat.json",
        &["zoo", "matrix", "--field", "F3", "--n", "2"],
        POSITIVE,
    );
    let args = ["mingen", s(&mat), "--max-exhaustive", "1", "--trials", "200"];
    let min = save(dir.path(), "min.json", &args, INCONCLUSIVE);
    // The certificate still replays; it just claims less.
    assert_eq!(code(&genalg(&["verify-cert", s(&mat), s(&min)])), POSITIVE);
}

#[test]
fn integral_workflow() {
    let dir = TempDir::new().unwrap();
    let module = save(
        dir.path(),
        "m.json",
        &["zoo", "zero", "--field", "Z", "--factors", "2,3,0"],
        POSITIVE,
    );
    let lift = save(
        dir.path(),
        "lift.json",
        &["forster-lift", s(&module), "--n", "2"],
        POSITIVE,
    );
    let cert: Value = serde_json::from_str(&fs::read_to_string(&lift).unwrap()).unwrap();
    assert_eq!(cert["body"]["generators"].as_array().unwrap().len(), 3);
    assert_eq!(code(&genalg(&["verify-cert", s(&module), s(&lift)])), POSITIVE);

    let short = save(
        dir.path(),
        "short.json",
        &["zoo", "zero", "--field", "Z", "--factors", "2,2"],
        POSITIVE,
    );
    assert_eq!(code(&genalg(&["forster-lift", s(&short), "--n", "1"])), NEGATIVE);

    let etale = save(
        dir.path(),
        "e.json",
        &["zoo", "split-etale", "--field", "Z", "--n", "3"],
        POSITIVE,
    );
    let bad = genalg(&["bad-primes", s(&etale), "--tuple", "[[1,2,3]]"]);
    assert_eq!(code(&bad), POSITIVE);
    assert_eq!(stdout(&bad).trim(), r#"["2","3"]"#);
    let bad = genalg(&["bad-primes", s(&etale), "--tuple", "[[1,2,3]]", "--unital"]);
    assert_eq!(stdout(&bad).trim(), r#"["2"]"#);
    assert_eq!(code(&genalg(&["check", s(&etale), "--tuple", "[[1,2,3]]"])), NEGATIVE);
    assert_eq!(
        code(&genalg(&["check", s(&etale), "--tuple", "[[1,2,3],[1,0,0]]"])),
        NEGATIVE
    );
    assert_eq!(
        code(&genalg(&["check", s(&etale), "--tuple", "[[1,0,0],[0,1,0],[0,0,1]]"])),
        POSITIVE
    );
}

#[test]
fn invalid_input() {
    let dir = TempDir::new().unwrap();
    let junk = dir.path().join("junk.json");
    fs::write(&junk, "{\"base\": \"F4\", \"ops\": []}").unwrap();
    assert_eq!(code(&genalg(&["mingen", s(&junk)])), INVALID);
    assert_eq!(code(&genalg(&["mingen", s(&dir.path().join("missing.json"))])), INVALID);
    assert_eq!(code(&genalg(&["frobnicate"])), INVALID);

    let mat = save(
        dir.path(),
        "mat.json",
        &["zoo", "matrix", "--field", "F2", "--n", "2"],
        POSITIVE,
    );
    assert_eq!(code(&genalg(&["check", s(&mat), "--tuple", "[[1,0,0]]"])), INVALID);
    assert_eq!(code(&genalg(&["forster-lift", s(&mat), "--n", "2"])), INVALID);
    assert_eq!(code(&genalg(&["zoo", "albert", "--field", "Z"])), INVALID);
    assert_eq!(code(&genalg(&["--help"])), POSITIVE);
}
