use super::baselines::{Exponential, GeneralizedExponential, GeneralizedLinearFailureRate, LinearFailureRate};
use super::oge_lfr::OgeLfr;
use super::params::{ParamsGe, ParamsGlfr, ParamsLfr, ParamsOgeLfr, Validation};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Common interface of the lifetime models.
///
/// Parameters are validated when a model is constructed, so evaluation is
/// infallible except for the quantile, whose argument has a restricted
/// domain. Negative arguments belong to the zero-probability region.
pub trait LifetimeModel {
    fn id(&self) -> ModelId;

    /// Parameters in the order given by [`ModelId::param_names`].
    fn params(&self) -> Vec<f64>;

    fn cdf(&self, x: f64) -> f64;

    fn ln_pdf(&self, x: f64) -> f64;

    fn quantile(&self, q: f64) -> Result<f64>;

    fn pdf(&self, x: f64) -> f64 {
        self.ln_pdf(x).exp()
    }

    fn ln_cdf(&self, x: f64) -> f64 {
        self.cdf(x).ln()
    }

    fn survival(&self, x: f64) -> f64 {
        1.0 - self.cdf(x)
    }

    fn ln_survival(&self, x: f64) -> f64 {
        self.survival(x).ln()
    }

    fn hazard(&self, x: f64) -> f64 {
        (self.ln_pdf(x) - self.ln_survival(x)).exp()
    }

    fn reversed_hazard(&self, x: f64) -> f64 {
        (self.ln_pdf(x) - self.ln_cdf(x)).exp()
    }
}

/// Identifier of a supported model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ModelId {
    #[serde(rename = "e")]
    Exponential,
    #[serde(rename = "ge")]
    Ge,
    #[serde(rename = "lfr")]
    Lfr,
    #[serde(rename = "glfr")]
    Glfr,
    #[serde(rename = "oge-lfr")]
    OgeLfr,
}

impl ModelId {
    pub const ALL: [ModelId; 5] = [
        ModelId::Exponential,
        ModelId::Ge,
        ModelId::Lfr,
        ModelId::Glfr,
        ModelId::OgeLfr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ModelId::Exponential => "e",
            ModelId::Ge => "ge",
            ModelId::Lfr => "lfr",
            ModelId::Glfr => "glfr",
            ModelId::OgeLfr => "oge-lfr",
        }
    }

    pub fn display_name(&self) -> &'static str {
        match self {
            ModelId::Exponential => "E",
            ModelId::Ge => "GE",
            ModelId::Lfr => "LFR",
            ModelId::Glfr => "GLFR",
            ModelId::OgeLfr => "OGE-LFR",
        }
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            ModelId::Exponential => &["lambda"],
            ModelId::Ge => &["alpha", "beta"],
            ModelId::Lfr => &["a", "b"],
            ModelId::Glfr => &["a", "b", "beta"],
            ModelId::OgeLfr => &["alpha", "a", "b", "beta"],
        }
    }

    pub fn n_params(&self) -> usize {
        self.param_names().len()
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e" | "exp" | "exponential" => Ok(ModelId::Exponential),
            "ge" => Ok(ModelId::Ge),
            "lfr" => Ok(ModelId::Lfr),
            "glfr" => Ok(ModelId::Glfr),
            "oge-lfr" | "ogelfr" | "oge_lfr" => Ok(ModelId::OgeLfr),
            other => Err(Error::InvalidParameter(format!("unknown model {other:?}"))),
        }
    }
}

/// Builds a model from a parameter vector in [`ModelId::param_names`] order.
pub fn build_model(id: ModelId, params: &[f64], mode: Validation) -> Result<Box<dyn LifetimeModel + Send + Sync>> {
    if params.len() != id.n_params() {
        return Err(Error::InvalidParameter(format!(
            "{} takes {} parameters, got {}",
            id.display_name(),
            id.n_params(),
            params.len()
        )));
    }
    Ok(match id {
        ModelId::Exponential => Box::new(Exponential::new(params[0])?),
        ModelId::Ge => Box::new(GeneralizedExponential::new(ParamsGe::new(params[0], params[1])?)),
        ModelId::Lfr => Box::new(LinearFailureRate::new(ParamsLfr::new(params[0], params[1])?)),
        ModelId::Glfr => Box::new(GeneralizedLinearFailureRate::new(ParamsGlfr::new(
            params[0], params[1], params[2],
        )?)),
        ModelId::OgeLfr => Box::new(OgeLfr::new(ParamsOgeLfr::from_slice(params, mode)?)),
    })
}
