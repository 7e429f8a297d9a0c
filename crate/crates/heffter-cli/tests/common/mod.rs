//! Helpers shared by the CLI test suites: reference fixtures and a runner
//! for the compiled `heffter` binary.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;

use heffter_core::{Field, FieldElement, HeffterArray};

pub struct CmdResult {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdResult {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_str(self.stdout.trim()).expect("stdout is JSON")
    }
}

pub fn heffter(args: &[&str]) -> CmdResult {
    let out = Command::new(env!("CARGO_BIN_EXE_heffter"))
        .args(args)
        .output()
        .expect("binary runs");
    CmdResult {
        status: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn write_doc(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).expect("write");
    path
}

pub const EXAMPLE1_DOC: &str =
    r#"{"field":{"p":19,"k":1},"m":3,"n":3,"entries":[[1,3,15],[7,2,10],[11,14,13]]}"#;

pub const EXAMPLE2_DOC: &str = concat!(
    r#"{"field":{"p":5,"k":2,"modulus":[2,1,1]},"m":3,"n":4,"entries":"#,
    r#"[[[1,0],[0,1],[4,1],[0,3]],[[1,3],[4,3],[3,0],[2,4]],[[3,2],[1,1],[3,4],[3,3]]]}"#
);

pub fn residues(field: &Arc<Field>, values: &[i64]) -> Vec<FieldElement> {
    values
        .iter()
        .map(|&v| field.element_from_coeffs(&[v]).unwrap())
        .collect()
}

pub fn prime_array(p: u64, m: usize, n: usize, values: &[i64]) -> HeffterArray {
    let field = Arc::new(Field::new(p, 1, None).unwrap());
    let entries = residues(&field, values);
    HeffterArray::new(&field, m, n, entries).unwrap()
}

/// The reference H(3,5) over F_31 with X = (1,5,25), Y = (1,2,4,8,16).
pub fn h35_reference() -> HeffterArray {
    prime_array(
        31,
        3,
        5,
        &[
            1, 2, 4, 8, 16,
            5, 10, 20, 9, 18,
            25, 19, 7, 14, 28,
        ],
    )
}

/// The reference H(6,15) over F_181.
pub fn h615_reference() -> HeffterArray {
    prime_array(
        181,
        6,
        15,
        &[
            1, 59, 42, 125, 135, 4, 55, 168, 138, 178, 16, 39, 129, 9, 169,
            48, 117, 25, 27, 145, 11, 106, 100, 108, 37, 44, 62, 38, 70, 148,
            132, 5, 114, 29, 82, 166, 20, 94, 116, 147, 121, 80, 14, 102, 45,
            2, 118, 84, 69, 89, 8, 110, 155, 95, 175, 32, 78, 77, 18, 157,
            96, 53, 50, 54, 109, 22, 31, 19, 35, 74, 88, 124, 76, 140, 115,
            83, 10, 47, 58, 164, 151, 40, 7, 51, 113, 61, 160, 28, 23, 90,
        ],
    )
}

/// Sorted element renderings of a set-like JSON array of strings.
pub fn string_set(v: &serde_json::Value) -> Vec<String> {
    let mut out: Vec<String> = v
        .as_array()
        .expect("array")
        .iter()
        .map(|s| s.as_str().expect("string").to_string())
        .collect();
    out.sort();
    out
}
