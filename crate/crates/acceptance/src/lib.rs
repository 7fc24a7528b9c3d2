//! Holds the `acceptance` test target, which checks the library and the
//! command-line driver against the published reference results. Run it with
//! `cargo test -p ogelfr-validation --test acceptance`.
