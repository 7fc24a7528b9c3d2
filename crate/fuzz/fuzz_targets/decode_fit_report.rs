//! FitReport json decoder: decoding must not panic and accepted reports re-emit identically.
//!
//! Run with: `cargo +nightly fuzz run decode_fit_report`

#![no_main]

use libfuzzer_sys::fuzz_target;
use ogelfr::estimation::FitReport;

fuzz_target!(|data: &[u8]| {
    let Ok(report) = serde_json::from_slice::<FitReport>(data) else {
        return;
    };
    let first = serde_json::to_string(&report).expect("serialize decoded report");
    let again: FitReport = serde_json::from_str(&first).expect("decode re-emitted report");
    assert_eq!(serde_json::to_string(&again).unwrap(), first);
    // rebuilding the model must fail cleanly rather than panic
    let _ = report.fitted_model();
});
