//! Human-readable and csv renderings of the reports.

use crate::reports::*;
use ogelfr::ModelId;
use serde::Serialize;
use std::fmt::Write;

/// Four significant figures; scientific notation outside `[1e-3, 1e6)`.
pub fn sig4(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-3..6).contains(&mag) {
        format!("{:.*}", (3 - mag).max(0) as usize, x)
    } else {
        format!("{x:.3e}")
    }
}

fn opt4(x: Option<f64>) -> String {
    x.map(sig4).unwrap_or_else(|| "-".into())
}

/// Pretty json with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    for row in rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn fit_human(r: &FitCommandReport) -> String {
    let f = &r.fit;
    let mut s = String::new();
    let _ = writeln!(s, "model: {} ({})", f.model.display_name(), f.model);
    let _ = writeln!(s, "data: {} (n = {})", r.data_source, f.n);
    let _ = writeln!(
        s,
        "converged: {} ({} simplex runs, {} evaluations)",
        yes_no(f.converged),
        f.restarts_used,
        f.evaluations
    );
    let _ = writeln!(s, "-log L: {}", sig4(f.neg_log_likelihood));
    let level = format!("{}% interval", 100.0 * f.confidence_level);
    let rows: Vec<Vec<String>> = match &f.confidence_intervals {
        Some(ci) => ci
            .iter()
            .map(|c| {
                vec![
                    c.parameter.clone(),
                    sig4(c.estimate),
                    sig4(c.std_error),
                    format!("[{}, {}]", sig4(c.lower_clipped), sig4(c.upper)),
                ]
            })
            .collect(),
        None => f
            .param_names
            .iter()
            .zip(&f.estimates)
            .map(|(n, v)| vec![n.clone(), sig4(*v), "-".into(), "-".into()])
            .collect(),
    };
    s.push_str(&table(&["parameter", "estimate", "std. error", &level], &rows));
    if let Some(e) = &f.information_error {
        let _ = writeln!(s, "intervals unavailable: {e}");
    }
    if let Some(g) = &r.gof {
        let c = &g.criteria;
        let _ = writeln!(s, "K-S: {} (p = {})", sig4(g.ks_statistic), sig4(g.ks_pvalue));
        let _ = writeln!(
            s,
            "AIC: {}  AICC: {}  BIC: {}  HQIC: {}",
            sig4(c.aic),
            sig4(c.aicc),
            sig4(c.bic),
            sig4(c.hqic)
        );
    }
    if let Some(e) = &r.gof_error {
        let _ = writeln!(s, "goodness of fit unavailable: {e}");
    }
    s
}

pub fn fit_csv(r: &FitCommandReport) -> String {
    let f = &r.fit;
    let mut s = String::from("parameter,estimate,std_error,lower,upper,lower_clipped\n");
    for (i, (name, est)) in f.param_names.iter().zip(&f.estimates).enumerate() {
        let ci = f.confidence_intervals.as_ref().map(|c| &c[i]);
        let cell = |v: Option<f64>| v.map(|x| format!("{x:?}")).unwrap_or_default();
        let _ = writeln!(
            s,
            "{name},{est:?},{},{},{},{}",
            cell(ci.map(|c| c.std_error)),
            cell(ci.map(|c| c.lower)),
            cell(ci.map(|c| c.upper)),
            cell(ci.map(|c| c.lower_clipped))
        );
    }
    s
}

fn estimates_text(names: &[String], values: &[f64]) -> String {
    names
        .iter()
        .zip(values)
        .map(|(n, v)| format!("{n}={}", sig4(*v)))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn compare_human(r: &CompareReport) -> String {
    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| {
            vec![
                row.model.display_name().to_string(),
                sig4(row.neg_log_likelihood),
                sig4(row.ks_statistic),
                sig4(row.ks_pvalue),
                sig4(row.aic),
                sig4(row.aicc),
                sig4(row.bic),
                sig4(row.hqic),
                estimates_text(&row.param_names, &row.estimates),
            ]
        })
        .collect();
    let mut s = format!("data: {} (n = {})\n", r.data_source, r.n);
    s.push_str(&table(
        &[
            "model",
            "-log L",
            "K-S",
            "p-value",
            "AIC",
            "AICC",
            "BIC",
            "HQIC",
            "estimates",
        ],
        &rows,
    ));
    if let Some(b) = &r.best {
        let name = |m: ModelId| m.display_name();
        let _ = writeln!(
            s,
            "best: -log L {}, K-S {}, AIC {}, AICC {}, BIC {}, HQIC {}",
            name(b.neg_log_likelihood),
            name(b.ks_statistic),
            name(b.aic),
            name(b.aicc),
            name(b.bic),
            name(b.hqic)
        );
    }
    for row in r.rows.iter().filter(|row| !row.converged) {
        let _ = writeln!(s, "warning: {} did not converge", row.model.display_name());
    }
    for f in &r.failures {
        let _ = writeln!(s, "failed: {}: {}", f.model.display_name(), f.error);
    }
    s
}

pub fn compare_csv(r: &CompareReport) -> String {
    let mut s = String::from("model,neg_log_likelihood,ks_statistic,ks_pvalue,aic,aicc,bic,hqic,converged,estimates\n");
    for row in &r.rows {
        let est: Vec<String> = row.estimates.iter().map(|v| format!("{v:?}")).collect();
        let _ = writeln!(
            s,
            "{},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{},{}",
            row.model,
            row.neg_log_likelihood,
            row.ks_statistic,
            row.ks_pvalue,
            row.aic,
            row.aicc,
            row.bic,
            row.hqic,
            row.converged,
            est.join(";")
        );
    }
    s
}

fn comparison_cells(c: &Comparison) -> [String; 3] {
    [sig4(c.computed), opt4(c.published), opt4(c.difference)]
}

pub fn tables_human(r: &TablesReport) -> String {
    let mut s = format!(
        "data: {} (n = {})\n\nEstimates and Kolmogorov-Smirnov statistics\n",
        r.data_source, r.n
    );
    let mut rows = Vec::new();
    for row in &r.estimates {
        for (i, p) in row.parameters.iter().enumerate() {
            let model = if i == 0 {
                row.model.display_name().to_string()
            } else {
                String::new()
            };
            let [c, p_, d] = comparison_cells(&p.value);
            rows.push(vec![model, p.parameter.clone(), c, p_, d]);
        }
        for (label, c) in [("K-S", &row.ks_statistic), ("p-value", &row.ks_pvalue)] {
            let [c, p_, d] = comparison_cells(c);
            rows.push(vec![String::new(), label.to_string(), c, p_, d]);
        }
    }
    s.push_str(&table(
        &["model", "quantity", "computed", "published", "difference"],
        &rows,
    ));

    s.push_str("\nLikelihood and information criteria\n");
    let mut rows = Vec::new();
    for row in &r.criteria {
        for (i, (label, c)) in [
            ("-log L", &row.neg_log_likelihood),
            ("AIC", &row.aic),
            ("AICC", &row.aicc),
            ("BIC", &row.bic),
            ("HQIC", &row.hqic),
        ]
        .into_iter()
        .enumerate()
        {
            let model = if i == 0 {
                row.model.display_name().to_string()
            } else {
                String::new()
            };
            let [c, p_, d] = comparison_cells(c);
            rows.push(vec![model, label.to_string(), c, p_, d]);
        }
    }
    s.push_str(&table(
        &["model", "quantity", "computed", "published", "difference"],
        &rows,
    ));
    for f in &r.failures {
        let _ = writeln!(s, "failed: {}: {}", f.model.display_name(), f.error);
    }
    s
}

pub fn tables_csv(r: &TablesReport) -> String {
    let mut s = String::from("model,quantity,computed,published,difference\n");
    let cell = |v: Option<f64>| v.map(|x| format!("{x:?}")).unwrap_or_default();
    let mut push = |model: ModelId, q: &str, c: &Comparison| {
        let _ = writeln!(
            s,
            "{model},{q},{:?},{},{}",
            c.computed,
            cell(c.published),
            cell(c.difference)
        );
    };
    for row in &r.estimates {
        for p in &row.parameters {
            push(row.model, &p.parameter, &p.value);
        }
        push(row.model, "ks_statistic", &row.ks_statistic);
        push(row.model, "ks_pvalue", &row.ks_pvalue);
    }
    for row in &r.criteria {
        push(row.model, "neg_log_likelihood", &row.neg_log_likelihood);
        push(row.model, "aic", &row.aic);
        push(row.model, "aicc", &row.aicc);
        push(row.model, "bic", &row.bic);
        push(row.model, "hqic", &row.hqic);
    }
    s
}

/// One value per line, full precision.
pub fn sample_text(r: &SampleReport) -> String {
    r.values.iter().map(|v| format!("{v:?}\n")).collect()
}

pub fn sample_csv(r: &SampleReport) -> String {
    let mut s = String::from("value\n");
    s.push_str(&sample_text(r));
    s
}

pub fn manifest_human(m: &PlotManifest) -> String {
    let mut s = format!(
        "model: {} with {} ({})\n",
        m.model.display_name(),
        estimates_text(
            &m.model.param_names().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            &m.params
        ),
        m.params_source
    );
    for f in &m.files {
        let _ = writeln!(s, "wrote {} ({} rows)", f.name, f.rows);
    }
    s
}

pub fn manifest_csv(m: &PlotManifest) -> String {
    let mut s = String::from("file,rows,columns\n");
    for f in &m.files {
        let _ = writeln!(s, "{},{},{}", f.name, f.rows, f.columns.join(";"));
    }
    s
}
