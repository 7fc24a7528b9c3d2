//! Comparison-report json decoder and its human and csv renderers.
//!
//! Run with: `cargo +nightly fuzz run decode_compare_report`

#![no_main]

use libfuzzer_sys::fuzz_target;
use ogelfr_cli::reports::CompareReport;

fuzz_target!(|data: &[u8]| {
    let Ok(report) = serde_json::from_slice::<CompareReport>(data) else {
        return;
    };
    let first = serde_json::to_string(&report).expect("serialize decoded report");
    let again: CompareReport = serde_json::from_str(&first).expect("decode re-emitted report");
    assert_eq!(serde_json::to_string(&again).unwrap(), first);
    let _ = ogelfr_cli::render::compare_human(&report);
    let _ = ogelfr_cli::render::compare_csv(&report);
});
