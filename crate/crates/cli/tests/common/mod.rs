#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

/// Runs the library entry point in-process; returns the exit code and stdout.
pub fn run(args: &[&str]) -> (u8, String) {
    let mut out = Vec::new();
    let code = ogelfr_cli::run(std::iter::once("ogelfr").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

/// Runs the built binary as a child process.
pub fn run_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ogelfr"))
        .args(args)
        .output()
        .expect("spawn ogelfr")
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?} exited with {code}");
    serde_json::from_str(&out).expect("valid json")
}

/// Parses a two-column csv curve written by `plot-data`.
pub fn read_curve(path: &Path) -> Vec<(f64, f64)> {
    let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .skip(1)
        .map(|line| {
            let (x, y) = line.split_once(',').expect("two columns");
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect()
}

/// Number of sign changes in the first differences of `ys`, ignoring exact ties.
pub fn derivative_sign_changes(ys: &[f64]) -> usize {
    let signs: Vec<f64> = ys
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| *d != 0.0)
        .map(f64::signum)
        .collect();
    signs.windows(2).filter(|s| s[0] != s[1]).count()
}
