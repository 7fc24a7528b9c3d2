//! Odd generalized exponential linear failure rate (OGE-LFR) lifetime models.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] holds the shared kernels (stable log/exp helpers, bracketed
//!   root finding, half-line quadrature, normal quantile, Kolmogorov tail).
//! * [`distributions`] provides the OGE-LFR family, the generic odd
//!   generalized exponential transform and the E/GE/LFR/GLFR baselines.
//! * [`orderstats`] evaluates order-statistic densities.
//! * [`estimation`] implements likelihoods, scores, the observed information
//!   and multistart maximum-likelihood fitting.
//! * [`gof`] computes the empirical CDF, Kolmogorov-Smirnov statistics,
//!   information criteria and the Kaplan-Meier estimator.
//! * [`data`] parses newline-delimited samples and ships the Aarset device
//!   lifetimes.

pub mod data;
pub mod distributions;
pub mod error;
pub mod estimation;
pub mod gof;
pub mod numerics;
pub mod orderstats;

pub use data::Dataset;
pub use distributions::{LifetimeModel, ModelId, OgeLfr, ParamsOgeLfr};
pub use error::{Error, Result};
