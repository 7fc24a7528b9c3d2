//! The odd generalized exponential (OGE) class: substitutes the odds
//! `G / (1 - G)` of a base distribution into the generalized exponential cdf.

use super::model::{LifetimeModel, ModelId};
use crate::error::{Error, Result};
use crate::numerics::ln_one_minus_exp_neg;

/// `[1 - exp(-alpha G / (1 - G))]^beta` evaluated in log space.
///
/// `G = 1` has infinite odds; the transform returns 1 there by continuity.
pub fn oge_transform_cdf(base_cdf_value: f64, alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite() && beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "alpha and beta must be positive and finite, got ({alpha}, {beta})"
        )));
    }
    if !(0.0..=1.0).contains(&base_cdf_value) {
        return Err(Error::Domain(format!(
            "base cdf value must lie in [0, 1], got {base_cdf_value}"
        )));
    }
    if base_cdf_value == 1.0 {
        return Ok(1.0);
    }
    let odds = base_cdf_value / (1.0 - base_cdf_value);
    Ok((beta * ln_one_minus_exp_neg(alpha * odds)).exp())
}

/// OGE transform of an arbitrary base model.
///
/// Accuracy is limited by the base model's cdf near 1; the dedicated
/// [`super::OgeLfr`] evaluates the odds of the LFR base exactly as
/// `e^{ax + bx^2/2} - 1`.
#[derive(Debug, Clone)]
pub struct OddGeneralizedExponential<M> {
    base: M,
    alpha: f64,
    beta: f64,
}

impl<M: LifetimeModel> OddGeneralizedExponential<M> {
    pub fn new(base: M, alpha: f64, beta: f64) -> Result<Self> {
        oge_transform_cdf(0.0, alpha, beta)?;
        Ok(Self { base, alpha, beta })
    }

    pub fn base(&self) -> &M {
        &self.base
    }

    /// `ln(G / (1 - G))` of the base at `x`.
    fn ln_odds(&self, x: f64) -> f64 {
        self.base.ln_cdf(x) - self.base.ln_survival(x)
    }
}

impl<M: LifetimeModel> LifetimeModel for OddGeneralizedExponential<M> {
    fn id(&self) -> ModelId {
        // Only the LFR base has a registered identifier.
        ModelId::OgeLfr
    }

    fn params(&self) -> Vec<f64> {
        let mut p = vec![self.alpha];
        p.extend(self.base.params());
        p.push(self.beta);
        p
    }

    fn cdf(&self, x: f64) -> f64 {
        self.ln_cdf(x).exp()
    }

    fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        self.beta * ln_one_minus_exp_neg(self.alpha * self.ln_odds(x).exp())
    }

    fn survival(&self, x: f64) -> f64 {
        -self.ln_cdf(x).exp_m1()
    }

    fn ln_survival(&self, x: f64) -> f64 {
        self.survival(x).ln()
    }

    /// `alpha beta g / (1-G)^2 * e^{-alpha odds} * (1 - e^{-alpha odds})^{beta-1}`.
    fn ln_pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        let z = self.alpha * self.ln_odds(x).exp();
        let shape = if self.beta == 1.0 {
            0.0
        } else {
            (self.beta - 1.0) * ln_one_minus_exp_neg(z)
        };
        self.alpha.ln() + self.beta.ln() + self.base.ln_pdf(x) - 2.0 * self.base.ln_survival(x) - z + shape
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::Domain(format!("quantile requires 0 < q < 1, got {q}")));
        }
        let z = -ln_one_minus_exp_neg(-q.ln() / self.beta);
        let odds = z / self.alpha;
        self.base.quantile(odds / (1.0 + odds))
    }
}
