use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// How strictly the linear failure rate coefficients are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Validation {
    /// `a > 0` and `b > 0`.
    #[default]
    Strict,
    /// `a >= 0`, `b >= 0` with `a + b > 0`; admits the exponential (`b = 0`)
    /// and Rayleigh (`a = 0`) based sub-models.
    Extended,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}

fn failure_rate(a: f64, b: f64, mode: Validation) -> Result<()> {
    match mode {
        Validation::Strict => {
            positive("a", a)?;
            positive("b", b)
        }
        Validation::Extended => {
            if !(a.is_finite() && a >= 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "a must be nonnegative and finite, got {a}"
                )));
            }
            if !(b.is_finite() && b >= 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "b must be nonnegative and finite, got {b}"
                )));
            }
            if a + b > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter("a and b cannot both be zero".into()))
            }
        }
    }
}

/// OGE-LFR parameter vector `(alpha, a, b, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsOgeLfr {
    alpha: f64,
    a: f64,
    b: f64,
    beta: f64,
}

impl ParamsOgeLfr {
    pub fn new(alpha: f64, a: f64, b: f64, beta: f64) -> Result<Self> {
        Self::with_validation(alpha, a, b, beta, Validation::Strict)
    }

    pub fn extended(alpha: f64, a: f64, b: f64, beta: f64) -> Result<Self> {
        Self::with_validation(alpha, a, b, beta, Validation::Extended)
    }

    pub fn with_validation(alpha: f64, a: f64, b: f64, beta: f64, mode: Validation) -> Result<Self> {
        positive("alpha", alpha)?;
        positive("beta", beta)?;
        failure_rate(a, b, mode)?;
        Ok(Self { alpha, a, b, beta })
    }

    pub fn from_slice(p: &[f64], mode: Validation) -> Result<Self> {
        match p {
            [alpha, a, b, beta] => Self::with_validation(*alpha, *a, *b, *beta, mode),
            _ => Err(Error::InvalidParameter(format!(
                "OGE-LFR takes 4 parameters, got {}",
                p.len()
            ))),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.alpha, self.a, self.b, self.beta]
    }

    /// Same `(alpha, a, b)` with a different shape.
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        positive("beta", beta)?;
        Ok(Self { beta, ..*self })
    }
}

/// Generalized exponential `(alpha, beta)`: rate and shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsGe {
    alpha: f64,
    beta: f64,
}

impl ParamsGe {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        positive("alpha", alpha)?;
        positive("beta", beta)?;
        Ok(Self { alpha, beta })
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Linear failure rate `(a, b)`, hazard `a + b x`.
///
/// Always validated in extended mode: `b = 0` is the exponential and `a = 0`
/// the Rayleigh distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsLfr {
    a: f64,
    b: f64,
}

impl ParamsLfr {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        failure_rate(a, b, Validation::Extended)?;
        Ok(Self { a, b })
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
}

/// Generalized linear failure rate `(a, b, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsGlfr {
    a: f64,
    b: f64,
    beta: f64,
}

impl ParamsGlfr {
    pub fn new(a: f64, b: f64, beta: f64) -> Result<Self> {
        failure_rate(a, b, Validation::Extended)?;
        positive("beta", beta)?;
        Ok(Self { a, b, beta })
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
}
