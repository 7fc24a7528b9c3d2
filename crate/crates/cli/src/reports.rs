//! Serializable reports emitted by the subcommands.

use ogelfr::estimation::FitReport;
use ogelfr::gof::GofReport;
use ogelfr::ModelId;
use serde::{Deserialize, Serialize};

/// Version of every json document written by the CLI.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitCommandReport {
    pub schema_version: u32,
    pub data_source: String,
    pub fit: FitReport,
    pub gof: Option<GofReport>,
    pub gof_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub model: ModelId,
    pub param_names: Vec<String>,
    pub estimates: Vec<f64>,
    pub neg_log_likelihood: f64,
    pub ks_statistic: f64,
    pub ks_pvalue: f64,
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
    pub hqic: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFailure {
    pub model: ModelId,
    pub error: String,
}

/// Model with the smallest value of each criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestModels {
    pub neg_log_likelihood: ModelId,
    pub ks_statistic: ModelId,
    pub aic: ModelId,
    pub aicc: ModelId,
    pub bic: ModelId,
    pub hqic: ModelId,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub schema_version: u32,
    pub data_source: String,
    pub n: usize,
    /// Rows sorted by AIC, ascending.
    pub rows: Vec<CompareRow>,
    pub failures: Vec<ModelFailure>,
    pub best: Option<BestModels>,
}

impl CompareReport {
    pub fn row(&self, model: ModelId) -> Option<&CompareRow> {
        self.rows.iter().find(|r| r.model == model)
    }
}

/// A computed quantity beside its published counterpart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub computed: f64,
    pub published: Option<f64>,
    /// `computed - published`.
    pub difference: Option<f64>,
}

impl Comparison {
    pub fn new(computed: f64, published: Option<f64>) -> Self {
        Self {
            computed,
            published,
            difference: published.map(|p| computed - p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterComparison {
    pub parameter: String,
    #[serde(flatten)]
    pub value: Comparison,
}

/// Parameter estimates and K-S statistics of one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatesRow {
    pub model: ModelId,
    pub parameters: Vec<ParameterComparison>,
    pub ks_statistic: Comparison,
    pub ks_pvalue: Comparison,
}

/// Likelihood and information criteria of one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriteriaRow {
    pub model: ModelId,
    pub neg_log_likelihood: Comparison,
    pub aic: Comparison,
    pub aicc: Comparison,
    pub bic: Comparison,
    pub hqic: Comparison,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablesReport {
    pub schema_version: u32,
    pub data_source: String,
    pub n: usize,
    /// Whether published values are attached (only for the builtin data).
    pub published_reference: bool,
    pub estimates: Vec<EstimatesRow>,
    pub criteria: Vec<CriteriaRow>,
    pub failures: Vec<ModelFailure>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub schema_version: u32,
    pub model: ModelId,
    pub params: Vec<f64>,
    pub seed: u64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotFile {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotManifest {
    pub schema_version: u32,
    pub model: ModelId,
    pub params: Vec<f64>,
    /// `"params"` for explicit parameters, otherwise the fitted data source.
    pub params_source: String,
    /// Log-likelihood profiles vary one parameter with the others held at
    /// their estimates (slices), rather than re-maximising.
    pub profile_kind: String,
    pub files: Vec<PlotFile>,
}

/// Published Aarset results: parameters, K-S statistic and p-value, and
/// `-ln L` with AIC, AICC, BIC and HQIC.
pub struct PublishedRow {
    pub model: ModelId,
    pub params: &'static [f64],
    pub ks_statistic: f64,
    pub ks_pvalue: f64,
    pub neg_log_likelihood: f64,
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
    pub hqic: f64,
}

pub const PUBLISHED: [PublishedRow; 4] = [
    PublishedRow {
        model: ModelId::Exponential,
        params: &[0.0219],
        ks_statistic: 0.1911,
        ks_pvalue: 0.0519,
        neg_log_likelihood: 241.090,
        aic: 484.1792,
        aicc: 484.2625,
        bic: 486.0912,
        hqic: 484.908,
    },
    PublishedRow {
        model: ModelId::Ge,
        params: &[0.0212, 0.9012],
        ks_statistic: 0.1940,
        ks_pvalue: 0.0514,
        neg_log_likelihood: 240.3855,
        aic: 484.7710,
        aicc: 485.0264,
        bic: 488.5951,
        hqic: 486.227,
    },
    PublishedRow {
        model: ModelId::Lfr,
        params: &[0.014, 2.4e-4],
        ks_statistic: 0.1955,
        ks_pvalue: 0.0370,
        neg_log_likelihood: 238.064,
        aic: 480.128,
        aicc: 480.383,
        bic: 483.952,
        hqic: 481.584,
    },
    PublishedRow {
        model: ModelId::OgeLfr,
        params: &[472.404, 8.218e-6, 6.427e-7, 0.529],
        ks_statistic: 0.1627,
        ks_pvalue: 0.12830,
        neg_log_likelihood: 232.865,
        aic: 473.730,
        aicc: 474.618,
        bic: 481.378,
        hqic: 476.642,
    },
];

pub fn published(model: ModelId) -> Option<&'static PublishedRow> {
    PUBLISHED.iter().find(|r| r.model == model)
}
