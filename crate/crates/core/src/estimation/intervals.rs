use super::fit::FitReport;
use crate::error::{Error, Result};
use crate::numerics::std_normal_quantile;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Largest accepted condition number of the correlation-scaled information.
const MAX_CONDITION: f64 = 1e12;

#[derive(Debug, Clone, PartialEq)]
pub struct InformationInverse {
    pub covariance: Vec<Vec<f64>>,
    pub std_errors: Vec<f64>,
    /// Condition number of `D^{-1/2} I D^{-1/2}`, `D = diag(I)`.
    pub condition: f64,
}

/// Inverts a symmetric observed-information matrix.
///
/// The matrix is first scaled to unit diagonal so that parameters of very
/// different magnitude (e.g. `alpha ~ 1e2` against `b ~ 1e-7`) do not
/// dominate the conditioning. Nonpositive diagonal entries, a failed
/// Cholesky factorisation or a scaled condition number above 1e12 are
/// reported as [`Error::SingularInformation`].
pub fn invert_information(info: &[Vec<f64>]) -> Result<InformationInverse> {
    let k = info.len();
    if k == 0 || info.iter().any(|row| row.len() != k) {
        return Err(Error::SingularInformation(
            "information matrix must be square and nonempty".into(),
        ));
    }
    if info.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::SingularInformation(
            "information matrix has non-finite entries".into(),
        ));
    }
    let diag: Vec<f64> = (0..k).map(|i| info[i][i]).collect();
    if let Some(i) = diag.iter().position(|&d| d <= 0.0) {
        return Err(Error::SingularInformation(format!(
            "diagonal entry {i} is not positive ({})",
            diag[i]
        )));
    }
    let scale: Vec<f64> = diag.iter().map(|d| 1.0 / d.sqrt()).collect();
    let scaled = DMatrix::from_fn(k, k, |i, j| info[i][j] * scale[i] * scale[j]);

    let eigen = scaled.clone().symmetric_eigen();
    let max_ev = eigen.eigenvalues.max();
    let min_ev = eigen.eigenvalues.min();
    if min_ev <= 0.0 {
        return Err(Error::SingularInformation(format!(
            "information is not positive definite (smallest scaled eigenvalue {min_ev:e})"
        )));
    }
    let condition = max_ev / min_ev;
    if condition > MAX_CONDITION {
        return Err(Error::SingularInformation(format!(
            "condition number {condition:e} exceeds {MAX_CONDITION:e}"
        )));
    }
    let chol = scaled
        .cholesky()
        .ok_or_else(|| Error::SingularInformation("Cholesky factorisation failed".into()))?;
    let inv = chol.inverse();
    let covariance: Vec<Vec<f64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| 0.5 * (inv[(i, j)] + inv[(j, i)]) * scale[i] * scale[j])
                .collect()
        })
        .collect();
    let std_errors = (0..k).map(|i| covariance[i][i].sqrt()).collect();
    Ok(InformationInverse {
        covariance,
        std_errors,
        condition,
    })
}

/// Wald interval `estimate +- z_{delta/2} * se` for one parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    pub parameter: String,
    pub estimate: f64,
    pub std_error: f64,
    pub lower: f64,
    pub upper: f64,
    /// `max(lower, 0)`; every parameter of the supported models is positive.
    pub lower_clipped: f64,
}

/// Asymptotic `level` intervals from the covariance stored in `report`.
pub fn confidence_intervals(report: &FitReport, level: f64) -> Result<Vec<ConfidenceInterval>> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::Domain(format!(
            "confidence level must lie in (0, 1), got {level}"
        )));
    }
    let std_errors = report.std_errors.as_ref().ok_or_else(|| {
        Error::SingularInformation(
            report
                .information_error
                .clone()
                .unwrap_or_else(|| "no covariance available".into()),
        )
    })?;
    let z = std_normal_quantile(0.5 + 0.5 * level)?;
    Ok(report
        .param_names
        .iter()
        .zip(&report.estimates)
        .zip(std_errors)
        .map(|((name, &estimate), &se)| {
            let lower = estimate - z * se;
            ConfidenceInterval {
                parameter: name.clone(),
                estimate,
                std_error: se,
                lower,
                upper: estimate + z * se,
                lower_clipped: lower.max(0.0),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverts_diagonal() {
        let inv = invert_information(&[vec![4.0, 0.0], vec![0.0, 0.25]]).unwrap();
        assert_eq!(inv.std_errors, vec![0.5, 2.0]);
        assert!((inv.condition - 1.0).abs() < 1e-12);
    }

    #[test]
    fn badly_scaled_but_well_conditioned() {
        let info = vec![vec![1e14, 1e5], vec![1e5, 1e-2]];
        // correlation 1e5 / sqrt(1e14 * 1e-2) = 0.1
        let inv = invert_information(&info).unwrap();
        assert!(inv.condition < 2.0);
        let det = 1e14 * 1e-2 - 1e10;
        assert!((inv.covariance[0][0] - 1e-2 / det).abs() < 1e-12 * 1e-2 / det);
    }

    #[test]
    fn singular_and_indefinite() {
        assert!(invert_information(&[vec![1.0, 1.0], vec![1.0, 1.0]]).is_err());
        assert!(invert_information(&[vec![1.0, 2.0], vec![2.0, 1.0]]).is_err());
        assert!(invert_information(&[vec![-1.0]]).is_err());
        assert!(invert_information(&[vec![f64::NAN]]).is_err());
    }
}
