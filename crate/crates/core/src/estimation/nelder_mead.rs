#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    /// Simplex diameter (max-norm distance of every vertex from the best).
    pub x_tol: f64,
    /// Spread of function values across the simplex.
    pub f_tol: f64,
    pub max_evals: usize,
    /// Edge length of the initial axis-aligned simplex.
    pub initial_step: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            x_tol: 1e-8,
            f_tol: 1e-10,
            max_evals: 5000,
            initial_step: 0.25,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NelderMeadResult {
    pub x: Vec<f64>,
    pub f: f64,
    pub evaluations: usize,
    pub iterations: usize,
    pub converged: bool,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Unconstrained Nelder-Mead minimisation.
///
/// Non-finite objective values are treated as `+inf`, which lets callers
/// mark infeasible points. Convergence requires both the simplex diameter
/// and the spread of function values to fall below their tolerances.
pub fn minimize<F: FnMut(&[f64]) -> f64>(mut f: F, x0: &[f64], opts: NelderMeadOptions) -> NelderMeadResult {
    let dim = x0.len();
    let evaluations = std::cell::Cell::new(0usize);
    let mut eval = |x: &[f64]| {
        evaluations.set(evaluations.get() + 1);
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    simplex.push(x0.to_vec());
    for i in 0..dim {
        let mut v = x0.to_vec();
        v[i] += opts.initial_step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| eval(v)).collect();
    let mut iterations = 0;
    let mut converged = false;

    loop {
        // order vertices, best first; ties keep insertion order
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let best = &simplex[0];
        let diameter = simplex[1..]
            .iter()
            .flat_map(|v| v.iter().zip(best).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        let spread = (values[dim] - values[0]).abs();
        if diameter <= opts.x_tol && (spread <= opts.f_tol || values[0] == values[dim]) {
            converged = true;
            break;
        }
        if evaluations.get() >= opts.max_evals {
            break;
        }
        iterations += 1;

        let centroid: Vec<f64> = (0..dim)
            .map(|k| simplex[..dim].iter().map(|v| v[k]).sum::<f64>() / dim as f64)
            .collect();
        let toward = |coef: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[dim])
                .map(|(c, w)| c + coef * (c - w))
                .collect()
        };

        let reflected = toward(REFLECT);
        let f_r = eval(&reflected);
        if f_r < values[0] {
            let expanded = toward(EXPAND);
            let f_e = eval(&expanded);
            if f_e < f_r {
                simplex[dim] = expanded;
                values[dim] = f_e;
            } else {
                simplex[dim] = reflected;
                values[dim] = f_r;
            }
            continue;
        }
        if f_r < values[dim - 1] {
            simplex[dim] = reflected;
            values[dim] = f_r;
            continue;
        }
        let (candidate, f_c) = if f_r < values[dim] {
            let outside = toward(REFLECT * CONTRACT);
            let f_o = eval(&outside);
            (outside, f_o)
        } else {
            let inside = toward(-CONTRACT);
            let f_i = eval(&inside);
            (inside, f_i)
        };
        if f_c < values[dim].min(f_r) {
            simplex[dim] = candidate;
            values[dim] = f_c;
            continue;
        }
        let anchor = simplex[0].clone();
        for i in 1..=dim {
            simplex[i] = anchor
                .iter()
                .zip(&simplex[i])
                .map(|(a, v)| a + SHRINK * (v - a))
                .collect();
            values[i] = eval(&simplex[i]);
        }
    }

    NelderMeadResult {
        x: simplex[0].clone(),
        f: values[0],
        evaluations: evaluations.get(),
        iterations,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let r = minimize(
            |x| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2),
            &[-1.2, 1.0],
            NelderMeadOptions {
                max_evals: 20_000,
                ..Default::default()
            },
        );
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-6 && (r.x[1] - 1.0).abs() < 1e-6, "{:?}", r.x);
    }

    #[test]
    fn infeasible_region_is_avoided() {
        let r = minimize(
            |x| if x[0] < 0.5 { f64::NAN } else { (x[0] - 0.7).powi(2) },
            &[2.0],
            NelderMeadOptions::default(),
        );
        assert!(r.converged);
        assert!((r.x[0] - 0.7).abs() < 1e-7);
    }

    #[test]
    fn evaluation_budget_is_respected() {
        let r = minimize(
            |x| x[0].sin() + x[1].powi(2),
            &[0.0, 3.0],
            NelderMeadOptions {
                max_evals: 10,
                ..Default::default()
            },
        );
        assert!(!r.converged);
        assert!(r.evaluations <= 10 + 3);
    }
}
