//! Decoders and renderers of the remaining command-line reports.
//!
//! Run with: `cargo +nightly fuzz run decode_cli_reports`

#![no_main]

use libfuzzer_sys::fuzz_target;
use ogelfr_cli::render;
use ogelfr_cli::reports::{FitCommandReport, PlotManifest, SampleReport, TablesReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn round_trip<T: Serialize + DeserializeOwned>(data: &[u8]) -> Option<T> {
    let report = serde_json::from_slice::<T>(data).ok()?;
    let first = serde_json::to_string(&report).expect("serialize decoded report");
    let again: T = serde_json::from_str(&first).expect("decode re-emitted report");
    assert_eq!(serde_json::to_string(&again).unwrap(), first);
    Some(report)
}

// The first byte selects the report type; the rest is the json document.
fuzz_target!(|data: &[u8]| {
    let Some((&selector, body)) = data.split_first() else {
        return;
    };
    match selector % 4 {
        0 => {
            if let Some(r) = round_trip::<FitCommandReport>(body) {
                let _ = render::fit_human(&r);
                let _ = render::fit_csv(&r);
            }
        }
        1 => {
            if let Some(r) = round_trip::<TablesReport>(body) {
                let _ = render::tables_human(&r);
                let _ = render::tables_csv(&r);
            }
        }
        2 => {
            if let Some(r) = round_trip::<SampleReport>(body) {
                let _ = render::sample_csv(&r);
            }
        }
        _ => {
            if let Some(r) = round_trip::<PlotManifest>(body) {
                let _ = render::manifest_human(&r);
                let _ = render::manifest_csv(&r);
            }
        }
    }
});
