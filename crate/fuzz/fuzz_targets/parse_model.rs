//! Model-name parser shared by the library and the command line.
//!
//! Run with: `cargo +nightly fuzz run parse_model`

#![no_main]

use libfuzzer_sys::fuzz_target;
use ogelfr::ModelId;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let via_cli = ogelfr_cli::args::parse_model(text);
    let Ok(id) = text.parse::<ModelId>() else {
        assert!(via_cli.is_err());
        return;
    };
    assert_eq!(via_cli, Ok(id));
    assert_eq!(id.as_str().parse::<ModelId>().unwrap(), id);
    assert_eq!(id.param_names().len(), id.n_params());
});
