//! Helpers shared by the CLI test targets.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fx(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

pub fn tlz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlz"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Files that must be rejected with exit code 2 and a diagnostic.
pub const MALFORMED: &[(&str, &str)] = &[
    ("empty", ""),
    ("not json", "kind: binary"),
    ("truncated", r#"{"kind":"binary","dims":[2],"entries":["#),
    ("unknown kind", r#"{"kind":"quaternary","dims":[2],"entries":[]}"#),
    ("missing dims", r#"{"kind":"binary","entries":[]}"#),
    ("wrong dims count", r#"{"kind":"binary","dims":[2,2],"entries":[]}"#),
    ("zero dim", r#"{"kind":"binary","dims":[0],"entries":[]}"#),
    ("huge dim", r#"{"kind":"ternary","dims":[100000],"entries":[]}"#),
    (
        "negative index",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,-1,0],"val":"1"}]}"#,
    ),
    (
        "index out of range",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,2,0],"val":"1"}]}"#,
    ),
    (
        "short index",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1],"val":"1"}]}"#,
    ),
    (
        "unreduced",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1,0],"val":"2/4"}]}"#,
    ),
    (
        "zero denominator",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1,0],"val":"1/0"}]}"#,
    ),
    (
        "negative denominator",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1,0],"val":"1/-2"}]}"#,
    ),
    (
        "float value",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1,0],"val":"0.5"}]}"#,
    ),
    (
        "numeric value",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1,0],"val":1}]}"#,
    ),
    (
        "duplicate",
        r#"{"kind":"binary","dims":[2],"entries":[{"idx":[0,1,0],"val":"1"},{"idx":[0,1,0],"val":"2"}]}"#,
    ),
    (
        "unknown field",
        r#"{"kind":"binary","dims":[2],"entries":[],"extra":1}"#,
    ),
    (
        "part on algebra",
        r#"{"kind":"binary","dims":[2],"entries":[{"part":"l","idx":[0,1,0],"val":"1"}]}"#,
    ),
    (
        "arity on algebra",
        r#"{"kind":"binary","dims":[2],"arity":2,"entries":[]}"#,
    ),
    ("wrong kind for check", r#"{"kind":"ternary","dims":[2],"entries":[]}"#),
    ("json array", "[1,2,3]"),
];
