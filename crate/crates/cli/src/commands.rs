//! Subcommand implementations, independent of argument parsing and output.

use crate::args::OptimArgs;
use crate::error::{CliError, CliResult};
use crate::reports::*;
use ogelfr::distributions::{build_model, sample_model, Validation};
use ogelfr::estimation::{fit_mle, log_likelihood_model, FitOptions, FitReport};
use ogelfr::gof::{gof_report, kaplan_meier};
use ogelfr::{Dataset, ModelId};
use std::path::Path;

pub const BUILTIN_DATASET: &str = "aarset";

/// Models of the published comparison, in publication order.
pub const TABLE_MODELS: [ModelId; 4] = [ModelId::Exponential, ModelId::Ge, ModelId::Lfr, ModelId::OgeLfr];

/// Half-width of the slice profiles on the log scale: each parameter spans
/// `estimate / 4 ..= estimate * 4`.
const PROFILE_LOG_SPAN: f64 = std::f64::consts::LN_2 * 2.0;

/// Loads the builtin Aarset sample or a newline-delimited file.
pub fn load_dataset(source: &str) -> CliResult<Dataset> {
    if source == BUILTIN_DATASET {
        return Ok(Dataset::aarset());
    }
    let text =
        std::fs::read_to_string(Path::new(source)).map_err(|e| CliError::data(format!("cannot read {source}: {e}")))?;
    Dataset::parse(&text).map_err(|e| CliError::data(format!("{source}: {e}")))
}

pub fn fit_options(optim: &OptimArgs) -> CliResult<FitOptions> {
    if !(optim.level > 0.0 && optim.level < 1.0) {
        return Err(CliError::usage(format!(
            "--level must lie in (0, 1), got {}",
            optim.level
        )));
    }
    if optim.starts == Some(0) {
        return Err(CliError::usage("--starts must be at least 1"));
    }
    if optim.max_evals == 0 {
        return Err(CliError::usage("--max-evals must be at least 1"));
    }
    Ok(FitOptions {
        max_starts: optim.starts,
        max_evals: optim.max_evals,
        level: optim.level,
        ..Default::default()
    })
}

pub fn fit_command(data: &Dataset, source: &str, model: ModelId, opts: &FitOptions) -> CliResult<FitCommandReport> {
    let fit = fit_mle(data, model, opts)?;
    let (gof, gof_error) = match fit
        .fitted_model()
        .and_then(|m| gof_report(data, m.as_ref(), fit.neg_log_likelihood, model.n_params()))
    {
        Ok(g) => (Some(g), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(FitCommandReport {
        schema_version: REPORT_SCHEMA_VERSION,
        data_source: source.to_string(),
        fit,
        gof,
        gof_error,
    })
}

fn compare_row(data: &Dataset, fit: &FitReport) -> ogelfr::Result<CompareRow> {
    let m = fit.fitted_model()?;
    let g = gof_report(data, m.as_ref(), fit.neg_log_likelihood, fit.model.n_params())?;
    Ok(CompareRow {
        model: fit.model,
        param_names: fit.param_names.clone(),
        estimates: fit.estimates.clone(),
        neg_log_likelihood: fit.neg_log_likelihood,
        ks_statistic: g.ks_statistic,
        ks_pvalue: g.ks_pvalue,
        aic: g.criteria.aic,
        aicc: g.criteria.aicc,
        bic: g.criteria.bic,
        hqic: g.criteria.hqic,
        converged: fit.converged,
    })
}

fn argmin(rows: &[CompareRow], key: impl Fn(&CompareRow) -> f64) -> ModelId {
    rows.iter()
        .min_by(|a, b| key(a).total_cmp(&key(b)))
        .map(|r| r.model)
        .expect("argmin over a nonempty set of rows")
}

/// Fits every requested model (in the order given, duplicates removed) and
/// ranks the survivors by AIC. A model that fails is listed in `failures`.
pub fn compare_command(
    data: &Dataset,
    source: &str,
    models: &[ModelId],
    opts: &FitOptions,
) -> CliResult<CompareReport> {
    let mut unique: Vec<ModelId> = Vec::new();
    for &m in models {
        if !unique.contains(&m) {
            unique.push(m);
        }
    }
    if unique.len() < 2 {
        return Err(CliError::usage("compare needs at least two distinct models"));
    }
    data.require_nonempty()?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &model in &unique {
        match fit_mle(data, model, opts).and_then(|fit| compare_row(data, &fit)) {
            Ok(row) => rows.push(row),
            Err(e) => failures.push(ModelFailure {
                model,
                error: e.to_string(),
            }),
        }
    }
    // stable sort keeps the requested order among equal AIC values
    rows.sort_by(|a, b| a.aic.total_cmp(&b.aic));
    let best = (!rows.is_empty()).then(|| BestModels {
        neg_log_likelihood: argmin(&rows, |r| r.neg_log_likelihood),
        ks_statistic: argmin(&rows, |r| r.ks_statistic),
        aic: argmin(&rows, |r| r.aic),
        aicc: argmin(&rows, |r| r.aicc),
        bic: argmin(&rows, |r| r.bic),
        hqic: argmin(&rows, |r| r.hqic),
    });
    Ok(CompareReport {
        schema_version: REPORT_SCHEMA_VERSION,
        data_source: source.to_string(),
        n: data.len(),
        rows,
        failures,
        best,
    })
}

/// Both comparison tables for E, GE, LFR and OGE-LFR. Published values are
/// attached only when the data are the builtin Aarset sample.
pub fn tables_command(data: &Dataset, source: &str, opts: &FitOptions) -> CliResult<TablesReport> {
    let with_reference = source == BUILTIN_DATASET;
    let mut estimates = Vec::new();
    let mut criteria = Vec::new();
    let mut failures = Vec::new();
    for model in TABLE_MODELS {
        let row = fit_mle(data, model, opts).and_then(|fit| compare_row(data, &fit));
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                failures.push(ModelFailure {
                    model,
                    error: e.to_string(),
                });
                continue;
            }
        };
        let reference = if with_reference { published(model) } else { None };
        let pick = |f: fn(&PublishedRow) -> f64| reference.map(f);
        estimates.push(EstimatesRow {
            model,
            parameters: row
                .param_names
                .iter()
                .zip(&row.estimates)
                .enumerate()
                .map(|(i, (name, &v))| ParameterComparison {
                    parameter: name.clone(),
                    value: Comparison::new(v, reference.map(|r| r.params[i])),
                })
                .collect(),
            ks_statistic: Comparison::new(row.ks_statistic, pick(|r| r.ks_statistic)),
            ks_pvalue: Comparison::new(row.ks_pvalue, pick(|r| r.ks_pvalue)),
        });
        criteria.push(CriteriaRow {
            model,
            neg_log_likelihood: Comparison::new(row.neg_log_likelihood, pick(|r| r.neg_log_likelihood)),
            aic: Comparison::new(row.aic, pick(|r| r.aic)),
            aicc: Comparison::new(row.aicc, pick(|r| r.aicc)),
            bic: Comparison::new(row.bic, pick(|r| r.bic)),
            hqic: Comparison::new(row.hqic, pick(|r| r.hqic)),
        });
    }
    Ok(TablesReport {
        schema_version: REPORT_SCHEMA_VERSION,
        data_source: source.to_string(),
        n: data.len(),
        published_reference: with_reference,
        estimates,
        criteria,
        failures,
    })
}

pub fn sample_command(model: ModelId, params: &[f64], n: usize, seed: u64) -> CliResult<SampleReport> {
    let m = build_model(model, params, Validation::Extended).map_err(|e| CliError::usage(e.to_string()))?;
    let data = sample_model(m.as_ref(), n, seed)?;
    Ok(SampleReport {
        schema_version: REPORT_SCHEMA_VERSION,
        model,
        params: params.to_vec(),
        seed,
        values: data.values().to_vec(),
    })
}

/// One two-column csv curve.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: String,
    pub columns: [String; 2],
    pub points: Vec<(f64, f64)>,
}

impl Curve {
    fn new(name: impl Into<String>, x: &str, y: &str, points: Vec<(f64, f64)>) -> Self {
        Self {
            name: name.into(),
            columns: [x.to_string(), y.to_string()],
            points,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("{},{}\n", self.columns[0], self.columns[1]);
        for (x, y) in &self.points {
            s.push_str(&format!("{x:?},{y:?}\n"));
        }
        s
    }
}

/// Curves of a model with known parameters, plus data-dependent curves
/// (Kaplan-Meier and slice profiles) when `data` is given.
pub struct PlotInputs<'a> {
    pub model: ModelId,
    pub params: &'a [f64],
    pub data: Option<&'a Dataset>,
    pub grid_points: usize,
    pub x_max: Option<f64>,
}

pub fn plot_curves(inputs: &PlotInputs) -> CliResult<Vec<Curve>> {
    if inputs.grid_points < 2 {
        return Err(CliError::usage("--grid-points must be at least 2"));
    }
    let model =
        build_model(inputs.model, inputs.params, Validation::Extended).map_err(|e| CliError::usage(e.to_string()))?;
    let x_max = match (inputs.x_max, inputs.data) {
        (Some(x), _) => x,
        (None, Some(d)) => d.max().ok_or(ogelfr::Error::EmptyData)?,
        (None, None) => model.quantile(0.999)?,
    };
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(CliError::usage(format!(
            "--x-max must be positive and finite, got {x_max}"
        )));
    }
    let name = inputs.model.as_str();
    let n = inputs.grid_points;
    // the grid starts one step above zero, where some densities are unbounded
    let grid: Vec<f64> = (1..=n).map(|i| x_max * i as f64 / n as f64).collect();
    let curve = |label: &str, f: &dyn Fn(f64) -> f64| {
        Curve::new(
            format!("{name}_{label}"),
            "x",
            label,
            grid.iter().map(|&x| (x, f(x))).collect(),
        )
    };
    let mut curves = vec![
        curve("pdf", &|x| model.pdf(x)),
        curve("cdf", &|x| model.cdf(x)),
        curve("survival", &|x| model.survival(x)),
        curve("hazard", &|x| model.hazard(x)),
        curve("reversed_hazard", &|x| model.reversed_hazard(x)),
    ];

    if let Some(data) = inputs.data {
        let km = kaplan_meier(data)?;
        let mut points = vec![(0.0, 1.0)];
        points.extend(km.knots.iter().copied());
        curves.push(Curve::new(format!("{name}_kaplan_meier"), "x", "survival", points));

        let names = inputs.model.param_names();
        for (j, pname) in names.iter().enumerate() {
            let points = slice_profile(inputs.model, inputs.params, j, n, data)?;
            curves.push(Curve::new(
                format!("{name}_profile_{pname}"),
                pname,
                "log_likelihood",
                points,
            ));
        }
    }
    Ok(curves)
}

/// Log-likelihood along parameter `j` on a geometric grid centred on the
/// given value (an odd point count puts the value itself on the grid).
fn slice_profile(
    model: ModelId,
    params: &[f64],
    j: usize,
    points: usize,
    data: &Dataset,
) -> CliResult<Vec<(f64, f64)>> {
    let points = points | 1;
    let half = (points / 2) as f64;
    let mut out = Vec::with_capacity(points);
    for i in 0..points {
        let s = PROFILE_LOG_SPAN * (i as f64 - half) / half;
        let mut theta = params.to_vec();
        theta[j] = params[j] * s.exp();
        let ll = match build_model(model, &theta, Validation::Extended) {
            Ok(m) => log_likelihood_model(m.as_ref(), data)?,
            Err(_) => f64::NAN,
        };
        out.push((theta[j], ll));
    }
    Ok(out)
}
