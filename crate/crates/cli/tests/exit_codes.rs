mod common;

use common::run_bin;
use std::io::Write;

fn code(args: &[&str]) -> i32 {
    run_bin(args).status.code().expect("exited normally")
}

#[test]
fn success_is_zero() {
    assert_eq!(code(&["fit", "--model", "e"]), 0);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn usage_errors_are_one() {
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["fit"]), 1);
    assert_eq!(code(&["fit", "--model", "weibull"]), 1);
    assert_eq!(code(&["fit", "--model", "e", "--level", "1.5"]), 1);
    assert_eq!(code(&["fit", "--model", "e", "--format", "xml"]), 1);
    assert_eq!(code(&["compare", "--model", "e"]), 1);
    assert_eq!(code(&["sample", "--params", "1,1,1", "-n", "3"]), 1);
    assert_eq!(code(&["sample", "--params", "1,-1,1,2", "-n", "3"]), 1);
}

#[test]
fn data_errors_are_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&["fit", "--model", "e", "--data", missing.to_str().unwrap()]), 2);

    let negative = dir.path().join("negative.txt");
    std::fs::write(&negative, "1\n-2\n3\n").unwrap();
    let out = run_bin(&["fit", "--model", "e", "--data", negative.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let garbage = dir.path().join("garbage.txt");
    let mut f = std::fs::File::create(&garbage).unwrap();
    writeln!(f, "# header\n1.5\nabc").unwrap();
    let out = run_bin(&["fit", "--model", "e", "--data", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    assert_eq!(code(&["fit", "--model", "e", "--data", empty.to_str().unwrap()]), 2);
}

#[test]
fn convergence_failure_is_three() {
    // five evaluations cannot satisfy the simplex tolerances
    let out = run_bin(&["fit", "--model", "oge-lfr", "--max-evals", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    // the report is still emitted, marked as not converged
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["fit"]["converged"], false);
    assert!(!out.stderr.is_empty());
}
