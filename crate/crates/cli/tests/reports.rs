//! Determinism and json round trips of every subcommand's report.

mod common;

use common::run;
use ogelfr_cli::reports::{CompareReport, FitCommandReport, PlotManifest, SampleReport, TablesReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn twice(args: &[&str]) -> String {
    let (c1, a) = run(args);
    let (c2, b) = run(args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b, "{args:?} is not deterministic");
    a
}

fn round_trip<T: Serialize + DeserializeOwned>(text: &str) {
    let parsed: T = serde_json::from_str(text).expect("parses");
    assert_eq!(ogelfr_cli::render::json(&parsed).unwrap(), text);
}

#[test]
fn fit_is_deterministic_and_round_trips() {
    for model in ["e", "ge", "lfr", "glfr", "oge-lfr"] {
        let text = twice(&["fit", "--model", model, "--format", "json"]);
        round_trip::<FitCommandReport>(&text);
    }
}

#[test]
fn fit_report_alone_round_trips() {
    let text = twice(&["fit", "--model", "oge-lfr", "--format", "json"]);
    let report: FitCommandReport = serde_json::from_str(&text).unwrap();
    let inner = serde_json::to_string(&report.fit).unwrap();
    let back: ogelfr::estimation::FitReport = serde_json::from_str(&inner).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), inner);
}

#[test]
fn compare_is_deterministic_and_round_trips() {
    round_trip::<CompareReport>(&twice(&["compare", "--format", "json"]));
}

#[test]
fn tables_is_deterministic_and_round_trips() {
    round_trip::<TablesReport>(&twice(&["tables", "--format", "json"]));
}

#[test]
fn sample_is_deterministic_and_round_trips() {
    round_trip::<SampleReport>(&twice(&[
        "sample", "--params", "1,1,1,2", "-n", "50", "--seed", "3", "--format", "json",
    ]));
}

#[test]
fn plot_data_is_deterministic_and_round_trips() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let outputs: Vec<(u8, String)> = dirs
        .iter()
        .map(|d| {
            run(&[
                "plot-data",
                "--model",
                "oge-lfr",
                "--out",
                d.path().to_str().unwrap(),
                "--format",
                "json",
            ])
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    round_trip::<PlotManifest>(&outputs[0].1);
    let manifest: PlotManifest = serde_json::from_str(&outputs[0].1).unwrap();
    for f in &manifest.files {
        let a = std::fs::read(dirs[0].path().join(&f.name)).unwrap();
        let b = std::fs::read(dirs[1].path().join(&f.name)).unwrap();
        assert_eq!(a, b, "{}", f.name);
    }
}

#[test]
fn human_outputs_are_deterministic() {
    twice(&["fit", "--model", "oge-lfr"]);
    twice(&["compare"]);
    twice(&["tables"]);
    twice(&["compare", "--format", "csv"]);
    twice(&["tables", "--format", "csv"]);
}
