//! Densities of order statistics from an OGE-LFR sample.

use crate::distributions::{LifetimeModel, OgeLfr, ParamsOgeLfr};
use crate::error::{Error, Result};

/// Largest sample size accepted; `n!` overflows `f64` beyond it.
pub const MAX_SAMPLE_SIZE: usize = 170;

/// Rank `r` within a sample of size `n`, `1 <= r <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderIndex {
    r: usize,
    n: usize,
}

impl OrderIndex {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n || n > MAX_SAMPLE_SIZE {
            return Err(Error::InvalidRank { r, n });
        }
        Ok(Self { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

/// `ln B(r, n - r + 1) = ln[(r-1)! (n-r)! / n!]`.
fn ln_beta_rank(idx: OrderIndex) -> f64 {
    ln_factorial(idx.r - 1) + ln_factorial(idx.n - idx.r) - ln_factorial(idx.n)
}

/// `f_{r:n}(x) = F^{r-1} (1-F)^{n-r} f / B(r, n-r+1)`, in log space.
pub fn order_pdf_direct(idx: OrderIndex, params: &ParamsOgeLfr, x: f64) -> f64 {
    if x < 0.0 {
        return 0.0;
    }
    let model = OgeLfr::new(*params);
    let below = if idx.r == 1 {
        0.0
    } else {
        (idx.r - 1) as f64 * model.ln_cdf(x)
    };
    let above = if idx.r == idx.n {
        0.0
    } else {
        (idx.n - idx.r) as f64 * model.ln_survival(x)
    };
    (below + above + model.ln_pdf(x) - ln_beta_rank(idx)).exp()
}

/// Mixture form: `sum_{i=0}^{n-r} w_i f(x; alpha, a, b, (r+i) beta)` with
/// `w_i = (-1)^i n! / [i! (r-1)! (n-r-i)! (r+i)]`.
///
/// The weights alternate in sign, so this form loses accuracy for large `n`;
/// [`order_pdf_direct`] is the production evaluator.
pub fn order_pdf_mixture(idx: OrderIndex, params: &ParamsOgeLfr, x: f64) -> Result<f64> {
    if x < 0.0 {
        return Ok(0.0);
    }
    let (r, n) = (idx.r, idx.n);
    let ln_n = ln_factorial(n);
    let mut total = 0.0;
    for i in 0..=(n - r) {
        let ln_w = ln_n - ln_factorial(i) - ln_factorial(r - 1) - ln_factorial(n - r - i) - ((r + i) as f64).ln();
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let shape = params.with_beta((r + i) as f64 * params.beta())?;
        total += sign * (ln_w + OgeLfr::new(shape).ln_pdf(x)).exp();
    }
    Ok(total)
}
