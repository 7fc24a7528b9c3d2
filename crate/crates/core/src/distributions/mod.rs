//! Lifetime models: the OGE-LFR family, the generic odd generalized
//! exponential (OGE) transform, and the E, GE, LFR and GLFR baselines.

mod baselines;
mod model;
mod moments;
mod oge;
mod oge_lfr;
mod params;
mod sampling;

pub use baselines::{Exponential, GeneralizedExponential, GeneralizedLinearFailureRate, LinearFailureRate};
pub use model::{build_model, LifetimeModel, ModelId};
pub use moments::{moment_quadrature, moment_series, moment_series_partial_sums, SeriesLimits, SeriesMoment};
pub use oge::{oge_transform_cdf, OddGeneralizedExponential};
pub use oge_lfr::OgeLfr;
pub use params::{ParamsGe, ParamsGlfr, ParamsLfr, ParamsOgeLfr, Validation};
pub use sampling::{sample, sample_model};
