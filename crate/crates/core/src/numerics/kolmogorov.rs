use std::f64::consts::PI;

const TERM_CUTOFF: f64 = 1e-12;

/// Asymptotic Kolmogorov tail `Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2)`.
///
/// For `t < 1` the alternating series converges slowly, so the equivalent
/// theta-function form `1 - sqrt(2 pi)/t sum_{k odd} exp(-k^2 pi^2 / (8 t^2))`
/// is summed instead. Both series stop once a term drops below 1e-12.
pub fn kolmogorov_sf(t: f64) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    if t <= 0.0 {
        return 1.0;
    }
    if t < 1.0 {
        let scale = PI * PI / (8.0 * t * t);
        let mut sum = 0.0;
        let mut k = 1.0f64;
        loop {
            let term = (-k * k * scale).exp();
            sum += term;
            if term < TERM_CUTOFF {
                break;
            }
            k += 2.0;
        }
        (1.0 - (2.0 * PI).sqrt() / t * sum).clamp(0.0, 1.0)
    } else {
        let mut sum = 0.0;
        let mut sign = 1.0;
        let mut k = 1.0f64;
        loop {
            let term = (-2.0 * k * k * t * t).exp();
            sum += sign * term;
            if term < TERM_CUTOFF {
                break;
            }
            sign = -sign;
            k += 1.0;
        }
        (2.0 * sum).clamp(0.0, 1.0)
    }
}
