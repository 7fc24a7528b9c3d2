use crate::error::{Error, Result};
use std::f64::consts::LN_2;

/// `ln(1 - e^{-u})` for `u >= 0`.
///
/// Switches between `ln(-expm1(-u))` and `ln1p(-exp(-u))` at `u = ln 2`,
/// which keeps full relative accuracy on both sides. Returns `-inf` at
/// `u = 0`.
pub fn log1p_exp_neg(u: f64) -> Result<f64> {
    if u.is_nan() || u < 0.0 {
        return Err(Error::Domain(format!("log1p_exp_neg requires u >= 0, got {u}")));
    }
    Ok(ln_one_minus_exp_neg(u))
}

/// Unchecked variant of [`log1p_exp_neg`]; `u` must be nonnegative.
#[inline]
pub(crate) fn ln_one_minus_exp_neg(u: f64) -> f64 {
    if u == 0.0 {
        f64::NEG_INFINITY
    } else if u <= LN_2 {
        (-(-u).exp_m1()).ln()
    } else {
        (-(-u).exp()).ln_1p()
    }
}

/// `e^u - 1` with full relative precision near zero.
#[inline]
pub fn expm1_stable(u: f64) -> f64 {
    u.exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log1p_exp_neg_examples() {
        assert_eq!(log1p_exp_neg(0.0).unwrap(), f64::NEG_INFINITY);
        assert!((log1p_exp_neg(LN_2).unwrap() - 0.5f64.ln()).abs() < 1e-15);
        // ln(1e-12) + ln(1 - 5e-13)
        let expected = -27.631_021_115_929_047;
        assert!((log1p_exp_neg(1e-12).unwrap() - expected).abs() < 1e-13);
    }

    #[test]
    fn log1p_exp_neg_rejects_negative() {
        assert!(matches!(log1p_exp_neg(-1e-300), Err(Error::Domain(_))));
        assert!(log1p_exp_neg(f64::NAN).is_err());
    }

    #[test]
    fn log1p_exp_neg_large_u_is_finite() {
        let v = log1p_exp_neg(50.0).unwrap();
        assert!(v < 0.0 && v > -1e-20);
        assert_eq!(log1p_exp_neg(800.0).unwrap(), -0.0);
    }

    #[test]
    fn expm1_examples() {
        assert_eq!(expm1_stable(0.0), 0.0);
        assert!((expm1_stable(1.0) - 1.718_281_828_459_045).abs() < 1e-15);
        let tiny = expm1_stable(1e-10);
        assert!((tiny - 1.000_000_000_05e-10).abs() / 1e-10 < 1e-15);
    }
}
