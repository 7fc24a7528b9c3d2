use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Domain(format!(
                "bracket requires finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    pub tol_x: f64,
    pub tol_f: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            tol_x: 1e-10,
            tol_f: 1e-12,
            max_iter: 200,
        }
    }
}

/// Grows `[start/2, 2 start]` geometrically until `f` changes sign across it.
///
/// Intended for monotone functions on `(0, inf)` such as `cdf(x) - q`.
pub fn expand_bracket<F: FnMut(f64) -> f64>(mut f: F, start: f64) -> Result<Bracket> {
    if !(start > 0.0 && start.is_finite()) {
        return Err(Error::Domain(format!(
            "bracket expansion needs a positive start, got {start}"
        )));
    }
    let (mut lo, mut hi) = (start * 0.5, start * 2.0);
    let (mut flo, mut fhi) = (f(lo), f(hi));
    for _ in 0..1100 {
        if flo.signum() != fhi.signum() || flo == 0.0 || fhi == 0.0 {
            return Bracket::new(lo, hi);
        }
        if flo.abs() < fhi.abs() {
            lo *= 0.5;
            flo = f(lo);
        } else {
            hi *= 2.0;
            fhi = f(hi);
        }
        if lo == 0.0 || !hi.is_finite() {
            break;
        }
    }
    Err(Error::NoSignChange { lo, hi })
}

/// Brent-style bracketed root finder with default tolerances.
pub fn find_root<F: FnMut(f64) -> f64>(f: F, bracket: Bracket) -> Result<f64> {
    find_root_with(f, bracket, RootOptions::default())
}

/// Bracketed hybrid root finder.
///
/// Inverse quadratic / secant steps are accepted only when they stay inside
/// the current bracket and shrink it fast enough; otherwise a bisection step
/// is taken. The returned point always lies inside the initial bracket.
pub fn find_root_with<F: FnMut(f64) -> f64>(mut f: F, bracket: Bracket, opts: RootOptions) -> Result<f64> {
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    // b is the best estimate, a the contrapoint, c the previous iterate.
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut bisected = true;

    for _ in 0..opts.max_iter {
        if fb.abs() <= opts.tol_f || (b - a).abs() <= opts.tol_x {
            return Ok(b);
        }
        let mut s = if fa != fc && fb != fc {
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };

        let lo = (3.0 * a + b) / 4.0;
        let (m1, m2) = if lo < b { (lo, b) } else { (b, lo) };
        let reject = !(s > m1 && s < m2)
            || (bisected && (s - b).abs() >= (b - c).abs() / 2.0)
            || (!bisected && (s - b).abs() >= (c - d).abs() / 2.0)
            || (bisected && (b - c).abs() < opts.tol_x)
            || (!bisected && (c - d).abs() < opts.tol_x)
            || !s.is_finite();
        if reject {
            s = 0.5 * (a + b);
            bisected = true;
        } else {
            bisected = false;
        }

        let fs = f(s);
        if fs.is_nan() {
            return Err(Error::Domain(format!("function returned NaN at {s}")));
        }
        d = c;
        c = b;
        fc = fb;
        if fa.signum() != fs.signum() {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
        if fb == 0.0 {
            return Ok(b);
        }
    }
    Err(Error::MaxIterations(opts.max_iter))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_quadratic_roots() {
        let r = find_root(|x| x - 2.0, Bracket::new(0.0, 5.0).unwrap()).unwrap();
        assert!((r - 2.0).abs() < 1e-10);
        let r = find_root(|x| x * x - 2.0, Bracket::new(1.0, 2.0).unwrap()).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-10);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        let err = find_root(|x| x * x + 1.0, Bracket::new(-1.0, 1.0).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn iteration_cap_is_reported() {
        let opts = RootOptions {
            tol_x: 0.0,
            tol_f: 0.0,
            max_iter: 3,
        };
        let err = find_root_with(|x| x.powi(3) - 0.3, Bracket::new(0.0, 1.0).unwrap(), opts);
        assert_eq!(err, Err(Error::MaxIterations(3)));
    }

    #[test]
    fn invalid_bracket() {
        assert!(Bracket::new(1.0, 1.0).is_err());
        assert!(Bracket::new(2.0, 1.0).is_err());
        assert!(Bracket::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn discontinuous_sign_change_converges_to_jump() {
        let r = find_root(|x| if x < 0.3 { -1.0 } else { 1.0 }, Bracket::new(0.0, 1.0).unwrap()).unwrap();
        assert!((r - 0.3).abs() < 1e-9);
    }
}
