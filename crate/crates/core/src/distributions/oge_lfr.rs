use super::model::{LifetimeModel, ModelId};
use super::params::ParamsOgeLfr;
use crate::error::{Error, Result};
use crate::numerics::{expand_bracket, find_root, ln_one_minus_exp_neg, Bracket};

/// Beyond this value of `z = alpha (phi - 1)` the survival function is
/// evaluated from its asymptotic expansion in `e^{-z}`.
const LARGE_Z: f64 = 30.0;

/// Tolerance of the quantile round-trip guard.
const QUANTILE_GUARD: f64 = 1e-9;

/// Per-observation building blocks shared by the density and the
/// likelihood derivatives.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel {
    /// `a x + b x^2 / 2`, i.e. `ln phi`.
    pub u: f64,
    /// `alpha (phi - 1)`.
    pub z: f64,
    /// `ln(1 - e^{-z})`.
    pub ln_g: f64,
}

/// The OGE-LFR distribution.
///
/// Every function is evaluated in log space through `z = alpha (e^u - 1)`
/// with `u = a x + b x^2 / 2`, so large `alpha` (hundreds) and tiny `a`, `b`
/// (1e-6 and below) stay well conditioned.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OgeLfr {
    params: ParamsOgeLfr,
}

impl OgeLfr {
    pub fn new(params: ParamsOgeLfr) -> Self {
        Self { params }
    }

    pub fn parameters(&self) -> &ParamsOgeLfr {
        &self.params
    }

    pub(crate) fn kernel(&self, x: f64) -> Kernel {
        let p = &self.params;
        let u = x * (p.a() + 0.5 * p.b() * x);
        let z = p.alpha() * u.exp_m1();
        Kernel {
            u,
            z,
            ln_g: ln_one_minus_exp_neg(z),
        }
    }

    /// Reversed hazard `f(x) / F(x)`; undefined at `x = 0`.
    pub fn reversed_hazard_checked(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("reversed hazard requires x > 0, got {x}")));
        }
        let p = &self.params;
        let k = self.kernel(x);
        let ln_r = p.alpha().ln() + p.beta().ln() + (p.a() + p.b() * x).ln() + k.u - k.z - k.ln_g;
        Ok(ln_r.exp())
    }

    /// Quantile from the closed-form inverse of the cdf.
    ///
    /// With `w = -ln(1 - q^{1/beta})` the target satisfies
    /// `a x + b x^2 / 2 = L` where `L = ln(1 + w / alpha)`; the positive root
    /// is taken in the rationalised form `2L / (a + sqrt(a^2 + 2 b L))`, which
    /// reduces to `L / a` as `b -> 0`. The result is checked against the cdf
    /// and refined by bracketed root finding if the check fails.
    pub fn quantile_checked(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::Domain(format!("quantile requires 0 < q < 1, got {q}")));
        }
        let p = &self.params;
        let w = -ln_one_minus_exp_neg(-q.ln() / p.beta());
        let level = (w / p.alpha()).ln_1p();
        let x = 2.0 * level / (p.a() + (p.a() * p.a() + 2.0 * p.b() * level).sqrt());
        if x.is_finite() && (self.cdf(x) - q).abs() <= QUANTILE_GUARD {
            return Ok(x);
        }
        self.quantile_by_root(q, x)
    }

    fn quantile_by_root(&self, q: f64, guess: f64) -> Result<f64> {
        let start = if guess.is_finite() && guess > 0.0 { guess } else { 1.0 };
        let bracket = expand_bracket(|x| self.cdf(x) - q, start)?;
        find_root(|x| self.cdf(x) - q, bracket)
    }

    pub fn median(&self) -> Result<f64> {
        self.quantile_checked(0.5)
    }

    /// Left side of the stationarity condition of the density,
    /// `1 + b/(a+bx)^2 - alpha phi [1 - (beta-1)/psi]`, which has the sign of
    /// `d ln f / dx`.
    pub fn mode_equation(&self, x: f64) -> f64 {
        let p = &self.params;
        let k = self.kernel(x);
        let phi = k.u.exp();
        let inv_psi = if k.z > 1.0 {
            (-k.z).exp() / -(-k.z).exp_m1()
        } else {
            1.0 / k.z.exp_m1()
        };
        let rate = p.a() + p.b() * x;
        let tail = if p.beta() == 1.0 {
            0.0
        } else {
            (p.beta() - 1.0) * inv_psi
        };
        1.0 + p.b() / (rate * rate) - p.alpha() * phi * (1.0 - tail)
    }

    /// Global maximiser of the density on `[0, inf)`.
    ///
    /// Sign changes of [`Self::mode_equation`] from positive to negative are
    /// located on a geometric grid spanning the `1e-9` to `0.999` quantiles
    /// and refined by root finding; the boundary `x = 0` is always a
    /// candidate. The candidate with the largest log density wins.
    pub fn mode(&self) -> Result<f64> {
        const GRID: usize = 512;
        let lo = self.quantile_checked(1e-9)?;
        let mut hi = self.quantile_checked(0.999)?;
        // keep extending while the density is still increasing at the top
        for _ in 0..60 {
            if self.mode_equation(hi) < 0.0 {
                break;
            }
            hi *= 2.0;
        }
        let ratio = (hi / lo).powf(1.0 / (GRID - 1) as f64);
        let mut candidates = vec![0.0];
        let mut prev_x = lo;
        let mut prev_g = self.mode_equation(lo);
        let mut xi = lo;
        for _ in 1..GRID {
            xi *= ratio;
            let g = self.mode_equation(xi);
            if prev_g > 0.0 && g <= 0.0 {
                let root = find_root(|x| self.mode_equation(x), Bracket::new(prev_x, xi)?)?;
                candidates.push(root);
            }
            prev_x = xi;
            prev_g = g;
        }
        if prev_g > 0.0 {
            candidates.push(prev_x);
        }
        let best = candidates
            .into_iter()
            .map(|x| (x, self.ln_pdf(x)))
            .fold((0.0, f64::NEG_INFINITY), |best, c| if c.1 > best.1 { c } else { best });
        Ok(best.0)
    }
}

impl LifetimeModel for OgeLfr {
    fn id(&self) -> ModelId {
        ModelId::OgeLfr
    }

    fn params(&self) -> Vec<f64> {
        self.params.to_array().to_vec()
    }

    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        self.ln_cdf(x).exp()
    }

    fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        self.params.beta() * self.kernel(x).ln_g
    }

    fn survival(&self, x: f64) -> f64 {
        self.ln_survival(x).exp()
    }

    fn ln_survival(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let beta = self.params.beta();
        let k = self.kernel(x);
        if k.z > LARGE_Z {
            // 1 - (1 - e)^beta = beta e (1 - (beta - 1) e / 2 + O(e^2)), e = e^{-z}
            let e = (-k.z).exp();
            beta.ln() - k.z + (-(beta - 1.0) * 0.5 * e).ln_1p()
        } else {
            (-(beta * k.ln_g).exp_m1()).ln()
        }
    }

    fn ln_pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        let p = &self.params;
        let k = self.kernel(x);
        let shape_term = if p.beta() == 1.0 {
            0.0
        } else {
            (p.beta() - 1.0) * k.ln_g
        };
        p.alpha().ln() + p.beta().ln() + (p.a() + p.b() * x).ln() + k.u - k.z + shape_term
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        self.quantile_checked(q)
    }

    fn reversed_hazard(&self, x: f64) -> f64 {
        self.reversed_hazard_checked(x).unwrap_or(f64::INFINITY)
    }
}
