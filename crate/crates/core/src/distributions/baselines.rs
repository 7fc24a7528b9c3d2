//! Baseline models used for comparison: exponential (E), generalized
//! exponential (GE), linear failure rate (LFR) and generalized linear failure
//! rate (GLFR).

use super::model::{LifetimeModel, ModelId};
use super::params::{ParamsGe, ParamsGlfr, ParamsLfr};
use crate::error::{Error, Result};
use crate::numerics::ln_one_minus_exp_neg;

fn check_level(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("quantile requires 0 < q < 1, got {q}")))
    }
}

/// `-ln(1 - q^{1/beta})`: the cumulative hazard of the underlying
/// unexponentiated model at the `q` quantile of the exponentiated one.
fn exponentiated_level(q: f64, beta: f64) -> f64 {
    -ln_one_minus_exp_neg(-q.ln() / beta)
}

/// Positive root of `a x + b x^2 / 2 = level`.
fn lfr_inverse(a: f64, b: f64, level: f64) -> f64 {
    2.0 * level / (a + (a * a + 2.0 * b * level).sqrt())
}

/// Exponential distribution with rate `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponential {
    rate: f64,
}

impl Exponential {
    pub fn new(rate: f64) -> Result<Self> {
        if rate.is_finite() && rate > 0.0 {
            Ok(Self { rate })
        } else {
            Err(Error::InvalidParameter(format!(
                "rate must be positive and finite, got {rate}"
            )))
        }
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }
}

impl LifetimeModel for Exponential {
    fn id(&self) -> ModelId {
        ModelId::Exponential
    }
    fn params(&self) -> Vec<f64> {
        vec![self.rate]
    }
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            -(-self.rate * x).exp_m1()
        }
    }
    fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            f64::NEG_INFINITY
        } else {
            ln_one_minus_exp_neg(self.rate * x)
        }
    }
    fn survival(&self, x: f64) -> f64 {
        self.ln_survival(x).exp()
    }
    fn ln_survival(&self, x: f64) -> f64 {
        -self.rate * x.max(0.0)
    }
    fn ln_pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            f64::NEG_INFINITY
        } else {
            self.rate.ln() - self.rate * x
        }
    }
    fn hazard(&self, _x: f64) -> f64 {
        self.rate
    }
    fn quantile(&self, q: f64) -> Result<f64> {
        check_level(q)?;
        Ok(-(-q).ln_1p() / self.rate)
    }
}

/// Generalized (exponentiated) exponential `F = (1 - e^{-alpha x})^beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedExponential {
    params: ParamsGe,
}

impl GeneralizedExponential {
    pub fn new(params: ParamsGe) -> Self {
        Self { params }
    }
}

impl LifetimeModel for GeneralizedExponential {
    fn id(&self) -> ModelId {
        ModelId::Ge
    }
    fn params(&self) -> Vec<f64> {
        vec![self.params.alpha(), self.params.beta()]
    }
    fn cdf(&self, x: f64) -> f64 {
        self.ln_cdf(x).exp()
    }
    fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            f64::NEG_INFINITY
        } else {
            self.params.beta() * ln_one_minus_exp_neg(self.params.alpha() * x)
        }
    }
    fn survival(&self, x: f64) -> f64 {
        -self.ln_cdf(x).exp_m1()
    }
    fn ln_survival(&self, x: f64) -> f64 {
        self.survival(x).ln()
    }
    fn ln_pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        let (alpha, beta) = (self.params.alpha(), self.params.beta());
        let shape = if beta == 1.0 {
            0.0
        } else {
            (beta - 1.0) * ln_one_minus_exp_neg(alpha * x)
        };
        alpha.ln() + beta.ln() - alpha * x + shape
    }
    fn quantile(&self, q: f64) -> Result<f64> {
        check_level(q)?;
        Ok(exponentiated_level(q, self.params.beta()) / self.params.alpha())
    }
}

/// Linear failure rate `F = 1 - exp(-a x - b x^2 / 2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFailureRate {
    params: ParamsLfr,
}

impl LinearFailureRate {
    pub fn new(params: ParamsLfr) -> Self {
        Self { params }
    }

    fn cumulative_hazard(&self, x: f64) -> f64 {
        x * (self.params.a() + 0.5 * self.params.b() * x)
    }
}

impl LifetimeModel for LinearFailureRate {
    fn id(&self) -> ModelId {
        ModelId::Lfr
    }
    fn params(&self) -> Vec<f64> {
        vec![self.params.a(), self.params.b()]
    }
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            -(-self.cumulative_hazard(x)).exp_m1()
        }
    }
    fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            f64::NEG_INFINITY
        } else {
            ln_one_minus_exp_neg(self.cumulative_hazard(x))
        }
    }
    fn survival(&self, x: f64) -> f64 {
        self.ln_survival(x).exp()
    }
    fn ln_survival(&self, x: f64) -> f64 {
        -self.cumulative_hazard(x.max(0.0))
    }
    fn ln_pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        (self.params.a() + self.params.b() * x).ln() - self.cumulative_hazard(x)
    }
    fn hazard(&self, x: f64) -> f64 {
        self.params.a() + self.params.b() * x
    }
    fn quantile(&self, q: f64) -> Result<f64> {
        check_level(q)?;
        Ok(lfr_inverse(self.params.a(), self.params.b(), -(-q).ln_1p()))
    }
}

/// Generalized linear failure rate `F = (1 - exp(-a x - b x^2 / 2))^beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedLinearFailureRate {
    params: ParamsGlfr,
}

impl GeneralizedLinearFailureRate {
    pub fn new(params: ParamsGlfr) -> Self {
        Self { params }
    }

    fn cumulative_hazard(&self, x: f64) -> f64 {
        x * (self.params.a() + 0.5 * self.params.b() * x)
    }
}

impl LifetimeModel for GeneralizedLinearFailureRate {
    fn id(&self) -> ModelId {
        ModelId::Glfr
    }
    fn params(&self) -> Vec<f64> {
        vec![self.params.a(), self.params.b(), self.params.beta()]
    }
    fn cdf(&self, x: f64) -> f64 {
        self.ln_cdf(x).exp()
    }
    fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            f64::NEG_INFINITY
        } else {
            self.params.beta() * ln_one_minus_exp_neg(self.cumulative_hazard(x))
        }
    }
    fn survival(&self, x: f64) -> f64 {
        -self.ln_cdf(x).exp_m1()
    }
    fn ln_survival(&self, x: f64) -> f64 {
        self.survival(x).ln()
    }
    fn ln_pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        let beta = self.params.beta();
        let h = self.cumulative_hazard(x);
        let shape = if beta == 1.0 {
            0.0
        } else {
            (beta - 1.0) * ln_one_minus_exp_neg(h)
        };
        beta.ln() + (self.params.a() + self.params.b() * x).ln() - h + shape
    }
    fn quantile(&self, q: f64) -> Result<f64> {
        check_level(q)?;
        let level = exponentiated_level(q, self.params.beta());
        Ok(lfr_inverse(self.params.a(), self.params.b(), level))
    }
}
