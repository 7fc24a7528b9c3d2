use crate::data::Dataset;
use crate::distributions::{LifetimeModel, OgeLfr, ParamsOgeLfr};
use crate::error::{Error, Result};

/// Per-observation nonlinear functions of the likelihood equations:
/// `phi = e^{ax + bx^2/2}`, `psi = e^{alpha (phi - 1)} - 1`,
/// `h = e^{z} (1 - z) - 1` and `tau = e^{z} (1 - alpha phi) - 1` with
/// `z = alpha (phi - 1)`.
///
/// `psi`, `h` and `tau` overflow for large `z`, so the derivatives use the
/// ratios [`AuxFunctions::inv_psi`], [`AuxFunctions::h_over_psi2`] and
/// [`AuxFunctions::tau_over_psi2`], which are evaluated stably.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxFunctions {
    pub phi: f64,
    pub psi: f64,
    pub h: f64,
    pub tau: f64,
    /// `phi - 1`, exact for small `x`.
    pub phi_m1: f64,
    /// `z = alpha (phi - 1)`.
    pub z: f64,
    /// `1 / psi`.
    pub inv_psi: f64,
    /// `(psi + 1) / psi^2`.
    pub exp_over_psi2: f64,
    /// `h / psi^2`.
    pub h_over_psi2: f64,
    /// `tau / psi^2`.
    pub tau_over_psi2: f64,
}

impl AuxFunctions {
    pub fn new(params: &ParamsOgeLfr, x: f64) -> Self {
        let alpha = params.alpha();
        let u = x * (params.a() + 0.5 * params.b() * x);
        let phi = u.exp();
        let phi_m1 = u.exp_m1();
        let z = alpha * phi_m1;
        let psi = z.exp_m1();
        let h = z.exp() * (1.0 - z) - 1.0;
        let tau = z.exp() * (1.0 - alpha * phi) - 1.0;

        // 1 - e^{-z}
        let em = -(-z).exp_m1();
        let inv_psi = if z > 1.0 { (-z).exp() / em } else { 1.0 / psi };
        let exp_over_psi2 = (-z).exp() / (em * em);
        let h_over_psi2 = if z < 0.1 {
            // h = -sum_{k>=2} (k-1) z^k / k!
            let mut term = z * z / 2.0;
            let mut sum = term;
            for k in 3..24 {
                term *= z / k as f64;
                sum += (k - 1) as f64 * term;
            }
            -sum / (psi * psi)
        } else {
            ((-z).exp() * (1.0 - z) - (-2.0 * z).exp()) / (em * em)
        };
        // tau = h - alpha e^z
        let tau_over_psi2 = h_over_psi2 - alpha * exp_over_psi2;
        Self {
            phi,
            psi,
            h,
            tau,
            phi_m1,
            z,
            inv_psi,
            exp_over_psi2,
            h_over_psi2,
            tau_over_psi2,
        }
    }
}

/// Log-likelihood of any model on a complete sample.
pub fn log_likelihood_model<M: LifetimeModel + ?Sized>(model: &M, data: &Dataset) -> Result<f64> {
    data.require_nonempty()?;
    Ok(data.values().iter().map(|&x| model.ln_pdf(x)).sum())
}

/// OGE-LFR log-likelihood.
///
/// Each term is the log density evaluated through the log-space kernels.
/// An observation at exactly zero makes the sum `+inf` for `beta < 1` and
/// `-inf` for `beta > 1` (or when `a = 0`).
pub fn log_likelihood(params: &ParamsOgeLfr, data: &Dataset) -> Result<f64> {
    log_likelihood_model(&OgeLfr::new(*params), data)
}

/// Closed-form maximiser of the likelihood in `beta` for fixed
/// `(alpha, a, b)`: `-n / sum ln(1 - e^{-alpha (phi_i - 1)})`.
pub fn profile_beta(alpha: f64, a: f64, b: f64, data: &Dataset) -> Result<f64> {
    data.require_positive()?;
    let p = ParamsOgeLfr::extended(alpha, a, b, 1.0)?;
    let model = OgeLfr::new(p);
    let sum: f64 = data.values().iter().map(|&x| model.kernel(x).ln_g).sum();
    let beta = -(data.len() as f64) / sum;
    if beta.is_finite() && beta > 0.0 {
        Ok(beta)
    } else {
        Err(Error::DegenerateData(format!(
            "profile estimate of beta is not positive and finite ({beta})"
        )))
    }
}

/// Gradient `(dL/dalpha, dL/da, dL/db, dL/dbeta)`.
pub fn score(params: &ParamsOgeLfr, data: &Dataset) -> Result<[f64; 4]> {
    data.require_positive()?;
    let (alpha, a, b, beta) = (params.alpha(), params.a(), params.b(), params.beta());
    let n = data.len() as f64;
    let model = OgeLfr::new(*params);
    let mut g = [n / alpha, 0.0, 0.0, n / beta];
    for &x in data.values() {
        let aux = AuxFunctions::new(params, x);
        let rate = a + b * x;
        let shaped = (beta - 1.0) * aux.inv_psi;
        g[0] += -aux.phi_m1 + shaped * aux.phi_m1;
        let common = -alpha * aux.phi * x + shaped * alpha * aux.phi * x;
        g[1] += 1.0 / rate + x + common;
        g[2] += x / rate + 0.5 * x * x + 0.5 * x * common;
        g[3] += model.kernel(x).ln_g;
    }
    Ok(g)
}

/// Observed information (negative Hessian of the log-likelihood) from the
/// analytic second partial derivatives.
pub fn observed_information(params: &ParamsOgeLfr, data: &Dataset) -> Result<[[f64; 4]; 4]> {
    data.require_positive()?;
    let (alpha, a, b, beta) = (params.alpha(), params.a(), params.b(), params.beta());
    let n = data.len() as f64;
    let bm1 = beta - 1.0;

    let mut h_aa = -n / (alpha * alpha); // alpha, alpha
    let mut h_al_a = 0.0;
    let mut h_al_b = 0.0;
    let mut h_a_a = 0.0;
    let mut h_a_b = 0.0;
    let mut h_b_b = 0.0;
    let mut h_be_al = 0.0;
    let mut h_be_a = 0.0;
    let mut h_be_b = 0.0;
    let h_be_be = -n / (beta * beta);

    for &x in data.values() {
        let aux = AuxFunctions::new(params, x);
        let rate = a + b * x;
        let rate2 = rate * rate;
        let (x2, x3, x4) = (x * x, x * x * x, x * x * x * x);
        let phi = aux.phi;

        h_aa -= bm1 * aux.phi_m1 * aux.phi_m1 * aux.exp_over_psi2;
        h_al_a += -x * phi + bm1 * x * phi * aux.h_over_psi2;
        h_al_b += -0.5 * x2 * phi + 0.5 * bm1 * x2 * phi * aux.h_over_psi2;
        h_a_a += -1.0 / rate2 - alpha * x2 * phi + bm1 * alpha * x2 * phi * aux.tau_over_psi2;
        h_a_b += -x / rate2 - 0.5 * alpha * x3 * phi + 0.5 * bm1 * alpha * x3 * phi * aux.tau_over_psi2;
        h_b_b += -x2 / rate2 - 0.25 * alpha * x4 * phi + 0.25 * bm1 * alpha * x4 * phi * aux.tau_over_psi2;
        h_be_al += aux.phi_m1 * aux.inv_psi;
        h_be_a += alpha * x * phi * aux.inv_psi;
        h_be_b += 0.5 * alpha * x2 * phi * aux.inv_psi;
    }

    let hess = [
        [h_aa, h_al_a, h_al_b, h_be_al],
        [h_al_a, h_a_a, h_a_b, h_be_a],
        [h_al_b, h_a_b, h_b_b, h_be_b],
        [h_be_al, h_be_a, h_be_b, h_be_be],
    ];
    Ok(hess.map(|row| row.map(|v| -v)))
}

/// Observed information from central differences of the analytic score,
/// symmetrised. Steps are relative to each coordinate.
pub fn observed_information_fd(params: &ParamsOgeLfr, data: &Dataset) -> Result<[[f64; 4]; 4]> {
    let theta = params.to_array();
    let mut cols = [[0.0; 4]; 4];
    for j in 0..4 {
        let step = 1e-6 * theta[j].abs().max(f64::MIN_POSITIVE);
        let mut up = theta;
        let mut down = theta;
        up[j] += step;
        down[j] -= step;
        let gu = score(&ParamsOgeLfr::extended(up[0], up[1], up[2], up[3])?, data)?;
        let gd = score(&ParamsOgeLfr::extended(down[0], down[1], down[2], down[3])?, data)?;
        for i in 0..4 {
            cols[j][i] = -(gu[i] - gd[i]) / (2.0 * step);
        }
    }
    let mut info = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            info[i][j] = 0.5 * (cols[i][j] + cols[j][i]);
        }
    }
    Ok(info)
}

/// Central finite-difference Hessian of a scalar function, with relative
/// steps `rel_step * max(|theta_j|, 1e-300)`.
pub fn finite_difference_hessian<F: FnMut(&[f64]) -> f64>(mut f: F, theta: &[f64], rel_step: f64) -> Vec<Vec<f64>> {
    let k = theta.len();
    let steps: Vec<f64> = theta.iter().map(|t| rel_step * t.abs().max(1e-300)).collect();
    let f0 = f(theta);
    let mut hess = vec![vec![0.0; k]; k];
    let mut point = theta.to_vec();
    for i in 0..k {
        point[i] = theta[i] + steps[i];
        let fp = f(&point);
        point[i] = theta[i] - steps[i];
        let fm = f(&point);
        point[i] = theta[i];
        hess[i][i] = (fp - 2.0 * f0 + fm) / (steps[i] * steps[i]);
        for j in 0..i {
            let mut eval = |si: f64, sj: f64| {
                point[i] = theta[i] + si * steps[i];
                point[j] = theta[j] + sj * steps[j];
                let v = f(&point);
                point[i] = theta[i];
                point[j] = theta[j];
                v
            };
            let v =
                (eval(1.0, 1.0) - eval(1.0, -1.0) - eval(-1.0, 1.0) + eval(-1.0, -1.0)) / (4.0 * steps[i] * steps[j]);
            hess[i][j] = v;
            hess[j][i] = v;
        }
    }
    hess
}
