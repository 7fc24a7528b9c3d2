use super::intervals::{confidence_intervals, invert_information, ConfidenceInterval};
use super::likelihood::{
    finite_difference_hessian, log_likelihood_model, observed_information, observed_information_fd,
};
use super::nelder_mead::{minimize, NelderMeadOptions, NelderMeadResult};
use crate::data::Dataset;
use crate::distributions::{build_model, LifetimeModel, ModelId, ParamsOgeLfr, Validation};
use crate::error::{Error, Result};
use crate::numerics::ln_one_minus_exp_neg;
use serde::{Deserialize, Serialize};

pub const FIT_SCHEMA_VERSION: u32 = 1;

/// Number of extra Nelder-Mead runs restarted from the incumbent optimum.
const POLISH_RUNS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HessianMethod {
    /// Closed-form second partial derivatives (OGE-LFR only; baselines fall
    /// back to finite differences).
    #[default]
    Analytic,
    FiniteDifference,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOptions {
    /// Use at most this many points of the deterministic start grid.
    pub max_starts: Option<usize>,
    pub max_evals: usize,
    pub x_tol: f64,
    pub f_tol: f64,
    pub level: f64,
    pub hessian: HessianMethod,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            max_starts: None,
            max_evals: 5000,
            x_tol: 1e-8,
            f_tol: 1e-10,
            level: 0.95,
            hessian: HessianMethod::Analytic,
        }
    }
}

/// Outcome of a maximum-likelihood fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub schema_version: u32,
    pub model: ModelId,
    pub n: usize,
    pub param_names: Vec<String>,
    pub estimates: Vec<f64>,
    pub neg_log_likelihood: f64,
    pub info_matrix: Option<Vec<Vec<f64>>>,
    pub covariance: Option<Vec<Vec<f64>>>,
    pub std_errors: Option<Vec<f64>>,
    pub confidence_level: f64,
    pub confidence_intervals: Option<Vec<ConfidenceInterval>>,
    /// Why the covariance could not be formed, when it could not.
    pub information_error: Option<String>,
    pub hessian_method: HessianMethod,
    pub converged: bool,
    pub iterations: usize,
    pub evaluations: usize,
    pub restarts_used: usize,
    /// Profiled negative log-likelihood at each start; `None` where infeasible.
    pub start_neg_log_likelihoods: Vec<Option<f64>>,
}

impl FitReport {
    pub fn fitted_model(&self) -> Result<Box<dyn LifetimeModel + Send + Sync>> {
        build_model(self.model, &self.estimates, Validation::Extended)
    }

    pub fn log_likelihood(&self) -> f64 {
        -self.neg_log_likelihood
    }
}

/// Negative log-likelihood of OGE-LFR with `beta` replaced by its profile
/// estimate. Returns `(nll, beta)`.
fn oge_profile_nll(alpha: f64, a: f64, b: f64, data: &[f64]) -> (f64, f64) {
    let n = data.len() as f64;
    let (mut sum_ln_rate, mut sum_u, mut sum_z, mut sum_ln_g) = (0.0, 0.0, 0.0, 0.0);
    for &x in data {
        let u = x * (a + 0.5 * b * x);
        let z = alpha * u.exp_m1();
        sum_ln_rate += (a + b * x).ln();
        sum_u += u;
        sum_z += z;
        sum_ln_g += ln_one_minus_exp_neg(z);
    }
    let beta = -n / sum_ln_g;
    let ll = n * alpha.ln() + n * beta.ln() + sum_ln_rate + sum_u - sum_z + (beta - 1.0) * sum_ln_g;
    (-ll, beta)
}

/// Profile `beta` of an exponentiated model from `sum ln(1 - e^{-H(x_i)})`.
fn exponentiated_profile(sum_ln_g: f64, n: f64) -> f64 {
    -n / sum_ln_g
}

fn ge_profile_nll(alpha: f64, data: &[f64]) -> (f64, f64) {
    let n = data.len() as f64;
    let sum_x: f64 = data.iter().sum();
    let sum_ln_g: f64 = data.iter().map(|&x| ln_one_minus_exp_neg(alpha * x)).sum();
    let beta = exponentiated_profile(sum_ln_g, n);
    let ll = n * (alpha.ln() + beta.ln()) - alpha * sum_x + (beta - 1.0) * sum_ln_g;
    (-ll, beta)
}

fn lfr_nll(a: f64, b: f64, data: &[f64]) -> f64 {
    -data
        .iter()
        .map(|&x| (a + b * x).ln() - x * (a + 0.5 * b * x))
        .sum::<f64>()
}

fn glfr_profile_nll(a: f64, b: f64, data: &[f64]) -> (f64, f64) {
    let n = data.len() as f64;
    let (mut sum_ln_rate, mut sum_h, mut sum_ln_g) = (0.0, 0.0, 0.0);
    for &x in data {
        let h = x * (a + 0.5 * b * x);
        sum_ln_rate += (a + b * x).ln();
        sum_h += h;
        sum_ln_g += ln_one_minus_exp_neg(h);
    }
    let beta = exponentiated_profile(sum_ln_g, n);
    let ll = n * beta.ln() + sum_ln_rate - sum_h + (beta - 1.0) * sum_ln_g;
    (-ll, beta)
}

fn finite_or_nan(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::NAN
    }
}

struct SearchOutcome {
    best: NelderMeadResult,
    iterations: usize,
    evaluations: usize,
    runs: usize,
    start_values: Vec<Option<f64>>,
}

/// Runs Nelder-Mead from every start, keeps the best (first found on ties),
/// then restarts from the incumbent a few times.
fn multistart<F: FnMut(&[f64]) -> f64>(
    mut objective: F,
    starts: &[Vec<f64>],
    opts: &FitOptions,
) -> Result<SearchOutcome> {
    let nm = NelderMeadOptions {
        x_tol: opts.x_tol,
        f_tol: opts.f_tol,
        max_evals: opts.max_evals,
        ..Default::default()
    };
    let mut best: Option<NelderMeadResult> = None;
    let (mut iterations, mut evaluations, mut runs) = (0, 0, 0);
    let mut start_values = Vec::with_capacity(starts.len());
    for s in starts {
        let f0 = objective(s);
        start_values.push(f0.is_finite().then_some(f0));
        let res = minimize(&mut objective, s, nm);
        iterations += res.iterations;
        evaluations += res.evaluations;
        runs += 1;
        if best.as_ref().is_none_or(|b| res.f < b.f) {
            best = Some(res);
        }
    }
    let mut best = best.ok_or_else(|| Error::Domain("no starting points".into()))?;
    for _ in 0..POLISH_RUNS {
        let res = minimize(&mut objective, &best.x, nm);
        iterations += res.iterations;
        evaluations += res.evaluations;
        runs += 1;
        let improved = best.f - res.f > opts.f_tol;
        if res.f <= best.f {
            best = res;
        }
        if !improved {
            break;
        }
    }
    if !best.f.is_finite() {
        return Err(Error::DegenerateData("likelihood is not finite at any start".into()));
    }
    Ok(SearchOutcome {
        best,
        iterations,
        evaluations,
        runs,
        start_values,
    })
}

fn capped(mut starts: Vec<Vec<f64>>, opts: &FitOptions) -> Vec<Vec<f64>> {
    if let Some(cap) = opts.max_starts {
        starts.truncate(cap.max(1));
    }
    starts
}

fn ln_vec(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| x.ln()).collect()
}

/// Deterministic OGE-LFR start grid: every combination of
/// `alpha in {0.1, 1, 10, 100, 1000}`, `a in {0.1, 1} / mean` and
/// `b in {0.1, 1} / mean^2`.
pub(crate) fn oge_start_grid(mean: f64) -> Vec<[f64; 3]> {
    let mut starts = Vec::with_capacity(20);
    for alpha in [0.1, 1.0, 10.0, 100.0, 1000.0] {
        for a in [0.1 / mean, 1.0 / mean] {
            for b in [0.1 / (mean * mean), 1.0 / (mean * mean)] {
                starts.push([alpha, a, b]);
            }
        }
    }
    starts
}

struct Estimate {
    params: Vec<f64>,
    nll: f64,
    converged: bool,
    iterations: usize,
    evaluations: usize,
    runs: usize,
    start_values: Vec<Option<f64>>,
}

fn estimate(data: &Dataset, model: ModelId, opts: &FitOptions) -> Result<Estimate> {
    let xs = data.values();
    let n = xs.len() as f64;
    let mean = data.mean().ok_or(Error::EmptyData)?;
    if !(mean > 0.0) {
        return Err(Error::DegenerateData("all observations are zero".into()));
    }
    let from_search = |s: SearchOutcome, params: Vec<f64>| Estimate {
        params,
        nll: s.best.f,
        converged: s.best.converged,
        iterations: s.iterations,
        evaluations: s.evaluations,
        runs: s.runs,
        start_values: s.start_values,
    };

    match model {
        ModelId::Exponential => {
            let rate = n / data.sum();
            let nll = -(n * rate.ln() - rate * data.sum());
            Ok(Estimate {
                params: vec![rate],
                nll,
                converged: true,
                iterations: 0,
                evaluations: 0,
                runs: 0,
                start_values: vec![],
            })
        }
        ModelId::Ge => {
            data.require_positive()?;
            let starts = capped([0.1, 1.0, 10.0].iter().map(|c| vec![(c / mean).ln()]).collect(), opts);
            let s = multistart(|t| finite_or_nan(ge_profile_nll(t[0].exp(), xs).0), &starts, opts)?;
            let alpha = s.best.x[0].exp();
            let beta = ge_profile_nll(alpha, xs).1;
            Ok(from_search(s, vec![alpha, beta]))
        }
        ModelId::Lfr => {
            let rate = 1.0 / mean;
            let mut starts = vec![ln_vec(&[rate, 1e-6 * rate * rate])];
            for a in [0.1 / mean, 1.0 / mean] {
                for b in [0.1 / (mean * mean), 1.0 / (mean * mean)] {
                    starts.push(ln_vec(&[a, b]));
                }
            }
            let starts = capped(starts, opts);
            let s = multistart(|t| finite_or_nan(lfr_nll(t[0].exp(), t[1].exp(), xs)), &starts, opts)?;
            let params = vec![s.best.x[0].exp(), s.best.x[1].exp()];
            Ok(from_search(s, params))
        }
        ModelId::Glfr => {
            data.require_positive()?;
            // the LFR optimum (beta = 1) seeds the search so GLFR never ends below LFR
            let lfr = estimate(data, ModelId::Lfr, opts)?;
            let mut starts = vec![ln_vec(&lfr.params)];
            for a in [0.1 / mean, 1.0 / mean] {
                for b in [0.1 / (mean * mean), 1.0 / (mean * mean)] {
                    starts.push(ln_vec(&[a, b]));
                }
            }
            let starts = capped(starts, opts);
            let s = multistart(
                |t| finite_or_nan(glfr_profile_nll(t[0].exp(), t[1].exp(), xs).0),
                &starts,
                opts,
            )?;
            let (a, b) = (s.best.x[0].exp(), s.best.x[1].exp());
            let beta = glfr_profile_nll(a, b, xs).1;
            Ok(from_search(s, vec![a, b, beta]))
        }
        ModelId::OgeLfr => {
            data.require_positive()?;
            let starts: Vec<Vec<f64>> = oge_start_grid(mean).iter().map(|s| ln_vec(s)).collect();
            let starts = capped(starts, opts);
            let s = multistart(
                |t| finite_or_nan(oge_profile_nll(t[0].exp(), t[1].exp(), t[2].exp(), xs).0),
                &starts,
                opts,
            )?;
            let (alpha, a, b) = (s.best.x[0].exp(), s.best.x[1].exp(), s.best.x[2].exp());
            let beta = oge_profile_nll(alpha, a, b, xs).1;
            Ok(from_search(s, vec![alpha, a, b, beta]))
        }
    }
}

fn information(model: ModelId, params: &[f64], data: &Dataset, method: HessianMethod) -> Result<Vec<Vec<f64>>> {
    let to_vec = |m: [[f64; 4]; 4]| m.iter().map(|r| r.to_vec()).collect();
    match model {
        ModelId::Exponential => {
            let n = data.len() as f64;
            Ok(vec![vec![n / (params[0] * params[0])]])
        }
        ModelId::OgeLfr => {
            let p = ParamsOgeLfr::from_slice(params, Validation::Extended)?;
            match method {
                HessianMethod::Analytic => Ok(to_vec(observed_information(&p, data)?)),
                HessianMethod::FiniteDifference => Ok(to_vec(observed_information_fd(&p, data)?)),
            }
        }
        _ => {
            let hess = finite_difference_hessian(
                |t| match build_model(model, t, Validation::Extended) {
                    Ok(m) => log_likelihood_model(m.as_ref(), data).unwrap_or(f64::NAN),
                    Err(_) => f64::NAN,
                },
                params,
                1e-4,
            );
            Ok(hess
                .into_iter()
                .map(|row| row.into_iter().map(|v| -v).collect())
                .collect())
        }
    }
}

/// Maximum-likelihood fit of `model` to a complete sample.
///
/// The search runs Nelder-Mead on log-transformed parameters from a fixed
/// grid of starts. Shape parameters of exponentiated models (GE, GLFR and
/// OGE-LFR) are profiled out in closed form, so OGE-LFR is searched in
/// `(ln alpha, ln a, ln b)` only. The exponential rate is `n / sum x`.
///
/// A search that exhausts its evaluation budget is reported through
/// `converged = false`; a singular information matrix leaves the covariance
/// fields empty and sets `information_error`.
pub fn fit_mle(data: &Dataset, model: ModelId, opts: &FitOptions) -> Result<FitReport> {
    data.require_nonempty()?;
    if !(opts.level > 0.0 && opts.level < 1.0) {
        return Err(Error::Domain(format!(
            "confidence level must lie in (0, 1), got {}",
            opts.level
        )));
    }
    let est = estimate(data, model, opts)?;
    let fitted = build_model(model, &est.params, Validation::Extended)?;
    let neg_log_likelihood = -log_likelihood_model(fitted.as_ref(), data)?;
    let hessian_method = if model == ModelId::OgeLfr {
        opts.hessian
    } else {
        HessianMethod::FiniteDifference
    };

    let mut report = FitReport {
        schema_version: FIT_SCHEMA_VERSION,
        model,
        n: data.len(),
        param_names: model.param_names().iter().map(|s| s.to_string()).collect(),
        estimates: est.params.clone(),
        neg_log_likelihood,
        info_matrix: None,
        covariance: None,
        std_errors: None,
        confidence_level: opts.level,
        confidence_intervals: None,
        information_error: None,
        hessian_method,
        converged: est.converged && est.nll.is_finite(),
        iterations: est.iterations,
        evaluations: est.evaluations,
        restarts_used: est.runs,
        start_neg_log_likelihoods: est.start_values,
    };

    match information(model, &est.params, data, hessian_method) {
        Ok(info) => {
            if info.iter().flatten().all(|v| v.is_finite()) {
                report.info_matrix = Some(info.clone());
            }
            match invert_information(&info) {
                Ok(inv) => {
                    report.covariance = Some(inv.covariance);
                    report.std_errors = Some(inv.std_errors);
                    report.confidence_intervals = Some(confidence_intervals(&report, opts.level)?);
                }
                Err(e) => report.information_error = Some(e.to_string()),
            }
        }
        Err(e) => report.information_error = Some(e.to_string()),
    }
    Ok(report)
}
