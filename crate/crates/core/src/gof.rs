//! Goodness-of-fit and model-comparison statistics.

use crate::data::Dataset;
use crate::distributions::LifetimeModel;
use crate::error::{Error, Result};
use crate::numerics::kolmogorov_sf;
use serde::{Deserialize, Serialize};

/// Right-continuous step function given by its jump points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepCurve {
    pub knots: Vec<(f64, f64)>,
}

impl StepCurve {
    /// Value at `x`: the value of the last knot at or before `x`, or
    /// `before_first` to the left of the first knot.
    pub fn eval(&self, x: f64, before_first: f64) -> f64 {
        match self.knots.partition_point(|&(k, _)| k <= x) {
            0 => before_first,
            i => self.knots[i - 1].1,
        }
    }
}

/// Distinct sorted values with their multiplicities.
fn tied_counts(data: &Dataset) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for x in data.sorted() {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Empirical distribution function with ties merged into a single jump.
pub fn empirical_cdf(data: &Dataset) -> Result<StepCurve> {
    data.require_nonempty()?;
    let n = data.len() as f64;
    let mut seen = 0usize;
    let knots = tied_counts(data)
        .into_iter()
        .map(|(x, c)| {
            seen += c;
            (x, seen as f64 / n)
        })
        .collect();
    Ok(StepCurve { knots })
}

/// Two-sided Kolmogorov-Smirnov distance between the sample and `cdf`.
///
/// At every distinct observation both sides of the jump of the empirical
/// cdf are compared with the model cdf.
pub fn ks_statistic<F: Fn(f64) -> f64>(data: &Dataset, cdf: F) -> Result<f64> {
    let ecdf = empirical_cdf(data)?;
    let mut below = 0.0;
    let mut d: f64 = 0.0;
    for &(x, above) in &ecdf.knots {
        let f = cdf(x);
        d = d.max((above - f).abs()).max((f - below).abs());
        below = above;
    }
    Ok(d)
}

/// Asymptotic p-value `Q(sqrt(n) d)` of the Kolmogorov-Smirnov statistic.
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    kolmogorov_sf((n as f64).sqrt() * d)
}

/// Information criteria of one fitted model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub neg_log_lik: f64,
    pub k: usize,
    pub n: usize,
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
    pub hqic: f64,
}

/// AIC, corrected AIC, BIC and Hannan-Quinn criterion from `-ln L`.
pub fn information_criteria(neg_log_lik: f64, k: usize, n: usize) -> Result<CriteriaReport> {
    if n <= k + 1 {
        return Err(Error::Domain(format!(
            "corrected AIC needs n > k + 1, got n = {n}, k = {k}"
        )));
    }
    let (kf, nf) = (k as f64, n as f64);
    let aic = 2.0 * kf + 2.0 * neg_log_lik;
    Ok(CriteriaReport {
        neg_log_lik,
        k,
        n,
        aic,
        aicc: aic + 2.0 * kf * (kf + 1.0) / (nf - kf - 1.0),
        bic: 2.0 * neg_log_lik + kf * nf.ln(),
        hqic: 2.0 * neg_log_lik + 2.0 * kf * nf.ln().ln(),
    })
}

/// Goodness-of-fit summary of one fitted model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    pub ks_statistic: f64,
    pub ks_pvalue: f64,
    pub criteria: CriteriaReport,
}

/// K-S statistic, its asymptotic p-value and the information criteria of a
/// model with `k` free parameters and maximized log-likelihood `-neg_log_lik`.
pub fn gof_report<M: LifetimeModel + ?Sized>(
    data: &Dataset,
    model: &M,
    neg_log_lik: f64,
    k: usize,
) -> Result<GofReport> {
    let d = ks_statistic(data, |x| model.cdf(x))?;
    Ok(GofReport {
        ks_statistic: d,
        ks_pvalue: ks_pvalue(d, data.len()),
        criteria: information_criteria(neg_log_lik, k, data.len())?,
    })
}

/// Product-limit survival estimate of a complete sample.
pub fn kaplan_meier(data: &Dataset) -> Result<StepCurve> {
    let events = vec![true; data.len()];
    kaplan_meier_censored(data, &events)
}

/// Product-limit estimator with right-censoring flags (`true` = failure
/// observed). Knots are placed at distinct failure times only; a censored
/// observation tied with failures is treated as at risk at that time.
pub fn kaplan_meier_censored(data: &Dataset, events: &[bool]) -> Result<StepCurve> {
    data.require_nonempty()?;
    if events.len() != data.len() {
        return Err(Error::Domain(format!(
            "got {} event flags for {} observations",
            events.len(),
            data.len()
        )));
    }
    let mut pairs: Vec<(f64, bool)> = data.values().iter().copied().zip(events.iter().copied()).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let n = pairs.len();
    let mut at_risk = n;
    let mut surv = 1.0;
    let mut censored = false;
    let mut knots = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let t = pairs[i].0;
        let (mut deaths, mut total) = (0usize, 0usize);
        while i < pairs.len() && pairs[i].0 == t {
            total += 1;
            deaths += usize::from(pairs[i].1);
            i += 1;
        }
        if deaths > 0 {
            surv = if deaths == at_risk {
                0.0
            } else if !censored {
                // the product telescopes to 1 - seen / n before any censoring
                1.0 - (n - at_risk + deaths) as f64 / n as f64
            } else {
                surv * ((at_risk - deaths) as f64 / at_risk as f64)
            };
            knots.push((t, surv));
        }
        censored |= deaths < total;
        at_risk -= total;
    }
    Ok(StepCurve { knots })
}
