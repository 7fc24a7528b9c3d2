//! Raw moments `E[X^r]` of the OGE-LFR distribution.

use super::model::LifetimeModel;
use super::oge_lfr::OgeLfr;
use super::params::ParamsOgeLfr;
use crate::error::{Error, Result};
use crate::numerics::integrate_halfline_scaled;

const MOMENT_TOL: f64 = 1e-8;

/// `E[X^r]` by adaptive quadrature of `x^r f(x)` over the half line.
///
/// The integral is computed in units of the median so the tolerance is
/// effectively relative; `r = 0` returns the total mass.
pub fn moment_quadrature(params: &ParamsOgeLfr, r: u32) -> Result<f64> {
    let model = OgeLfr::new(*params);
    let scale = model.median()?;
    let power = r as i32;
    let res = integrate_halfline_scaled(
        |y| {
            let x = scale * y;
            let f = model.pdf(x);
            if f == 0.0 {
                0.0
            } else {
                y.powi(power) * f * scale
            }
        },
        1.0,
        MOMENT_TOL,
    )?;
    Ok(res.value * scale.powi(power))
}

/// Truncation limits for [`moment_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesLimits {
    /// Largest index of the binomial expansion in `beta - 1`.
    pub max_i: usize,
    /// Largest index of the exponential series (and of the inner binomial).
    pub max_j: usize,
    /// Largest index of the series in `b`.
    pub max_l: usize,
}

impl Default for SeriesLimits {
    fn default() -> Self {
        Self {
            max_i: 40,
            max_j: 40,
            max_l: 40,
        }
    }
}

/// Truncated value of the quadruple moment series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesMoment {
    pub value: f64,
    /// Magnitude of the contribution of the last `L` layer summed.
    pub last_term: f64,
    /// Number of `L` layers summed.
    pub layers: usize,
}

const LAYER_RTOL: f64 = 1e-12;

/// Generalized binomial coefficient `C(nu, i)` for real `nu`.
fn binom_real(nu: f64, i: usize) -> f64 {
    (0..i).fold(1.0, |acc, m| acc * (nu - m as f64) / (m + 1) as f64)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Term-by-term moment series obtained by expanding
/// `(1 - e^{-z})^{beta-1}` binomially, `e^{-alpha (i+1) (phi-1)}` as a power
/// series in `phi - 1`, `(phi - 1)^j` binomially, and `e^{b m x^2 / 2}`
/// (with `m = j - k + 1`) as a power series in `b`, then integrating each
/// term as a gamma integral:
///
/// ```text
/// sum_{i,j,k,L} C(beta-1,i) C(j,k) (-1)^{i+j+k} beta alpha^{j+1} b^L (i+1)^j m^L / (j! L! 2^L)
///     * [ (r+2L)! / (a^{r+2L} m^{r+2L+1}) + b (r+2L+1)! / (a^{r+2L+2} m^{r+2L+2}) ]
/// ```
///
/// Layers in `L` are accumulated until one contributes less than 1e-12 of
/// the running total; if that never happens within `limits` the result is
/// [`Error::SeriesNonConvergence`]. Requires `a > 0`.
///
/// The gamma-integral step treats `e^{a m x}` as if it decayed, so the series
/// is formal: it is not guaranteed to converge to the moment, and
/// [`moment_quadrature`] is the reference evaluator.
pub fn moment_series(params: &ParamsOgeLfr, r: u32, limits: SeriesLimits) -> Result<SeriesMoment> {
    let (alpha, a, b, beta) = (params.alpha(), params.a(), params.b(), params.beta());
    if !(a > 0.0) {
        return Err(Error::InvalidParameter("the moment series requires a > 0".into()));
    }
    let r = r as usize;
    let shape_coeffs: Vec<f64> = (0..=limits.max_i).map(|i| binom_real(beta - 1.0, i)).collect();

    let mut total = 0.0;
    let mut last_term = f64::INFINITY;
    for l in 0..=limits.max_l {
        let n0 = r + 2 * l;
        let g0 = factorial(n0) / a.powi(n0 as i32);
        let g1 = b * factorial(n0 + 1) / a.powi(n0 as i32 + 2);
        let l_factor = b.powi(l as i32) / (factorial(l) * 2f64.powi(l as i32));
        let mut layer = 0.0;
        for (i, &ci) in shape_coeffs.iter().enumerate() {
            if ci == 0.0 {
                continue;
            }
            let sign_i = if i % 2 == 0 { 1.0 } else { -1.0 };
            for j in 0..=limits.max_j {
                let j_factor = beta * alpha.powi(j as i32 + 1) * ((i + 1) as f64).powi(j as i32) / factorial(j);
                let mut binom_jk = 1.0;
                let mut inner = 0.0;
                for k in 0..=j {
                    if k > 0 {
                        binom_jk *= (j - k + 1) as f64 / k as f64;
                    }
                    let m = (j - k + 1) as f64;
                    let sign = if (j + k) % 2 == 0 { 1.0 } else { -1.0 };
                    let bracket = g0 / m.powi(n0 as i32 + 1) + g1 / m.powi(n0 as i32 + 2);
                    inner += sign * binom_jk * m.powi(l as i32) * bracket;
                }
                layer += sign_i * ci * j_factor * inner;
            }
        }
        layer *= l_factor;
        total += layer;
        last_term = layer.abs();
        if !total.is_finite() {
            break;
        }
        if last_term < LAYER_RTOL * total.abs() {
            return Ok(SeriesMoment {
                value: total,
                last_term,
                layers: l + 1,
            });
        }
    }
    Err(Error::SeriesNonConvergence {
        value: total,
        last_term,
    })
}

/// Unchecked partial sums, exposed for diagnostics: the value after each
/// `L` layer.
pub fn moment_series_partial_sums(params: &ParamsOgeLfr, r: u32, limits: SeriesLimits) -> Vec<f64> {
    (0..=limits.max_l)
        .map(|l| {
            let lim = SeriesLimits { max_l: l, ..limits };
            match moment_series(params, r, lim) {
                Ok(m) => m.value,
                Err(Error::SeriesNonConvergence { value, .. }) => value,
                Err(_) => f64::NAN,
            }
        })
        .collect()
}
