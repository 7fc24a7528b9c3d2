use clap::{Args, Parser, Subcommand, ValueEnum};
use ogelfr::ModelId;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "ogelfr", version, about = "Fit, compare and sample OGE-LFR lifetime models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum-likelihood fit of one model, with intervals and goodness of fit.
    Fit(FitArgs),
    /// Fit several models and rank them by information criteria.
    Compare(CompareArgs),
    /// Draw a seeded random sample from a model with explicit parameters.
    Sample(SampleArgs),
    /// Write csv curves: density, distribution, hazard, Kaplan-Meier and
    /// log-likelihood slice profiles.
    PlotData(PlotArgs),
    /// Reproduce the Aarset comparison tables next to the published values.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub fn parse_model(s: &str) -> Result<ModelId, String> {
    s.parse::<ModelId>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct DataArgs {
    /// Data file (one value per line, '#' comments) or the builtin "aarset".
    #[arg(long, default_value = "aarset")]
    pub data: String,
}

#[derive(Debug, Clone, Args)]
pub struct OptimArgs {
    /// Use only the first N points of the multistart grid.
    #[arg(long, value_name = "N")]
    pub starts: Option<usize>,
    /// Objective evaluations allowed per simplex run.
    #[arg(long, value_name = "N", default_value_t = 5000)]
    pub max_evals: usize,
    /// Confidence level of the Wald intervals.
    #[arg(long, default_value_t = 0.95)]
    pub level: f64,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FitArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: ModelId,
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub optim: OptimArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    /// Models to compare, repeated or comma separated.
    #[arg(long, value_parser = parse_model, value_delimiter = ',', default_values = ["e", "ge", "lfr", "oge-lfr"])]
    pub model: Vec<ModelId>,
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub optim: OptimArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[arg(long, value_parser = parse_model, default_value = "oge-lfr")]
    pub model: ModelId,
    /// Comma-separated parameters in the model's order, e.g. 1,1,1,2.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub params: Vec<f64>,
    /// Sample size.
    #[arg(short = 'n', long = "count", value_name = "N")]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PlotArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: ModelId,
    /// Use these parameters instead of fitting the data.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub params: Option<Vec<f64>>,
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub optim: OptimArgs,
    /// Points per curve.
    #[arg(long, default_value_t = 200)]
    pub grid_points: usize,
    /// Right end of the x grid (default: largest observation).
    #[arg(long)]
    pub x_max: Option<f64>,
    /// Format of the manifest printed after the files are written.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Directory receiving the csv files.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub optim: OptimArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}
