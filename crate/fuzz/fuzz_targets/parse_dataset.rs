//! Dataset text parser: arbitrary input must not panic, and accepted values survive re-emission.
//!
//! Run with: `cargo +nightly fuzz run parse_dataset`

#![no_main]

use libfuzzer_sys::fuzz_target;
use ogelfr::Dataset;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(parsed) = Dataset::parse(text) else { return };
    assert!(parsed.values().iter().all(|v| v.is_finite() && *v >= 0.0));
    // re-emitting the accepted values and parsing again is lossless
    let emitted: String = parsed.values().iter().map(|v| format!("{v:?}\n")).collect();
    let again = Dataset::parse(&emitted).expect("re-parse of emitted values");
    assert_eq!(again.values(), parsed.values());
});
