//! Command-line driver: argument handling, subcommands and report output.

pub mod args;
pub mod commands;
pub mod error;
pub mod render;
pub mod reports;

use args::{Cli, Command, Format, OutputArgs};
use clap::Parser;
use commands::*;
use error::{CliError, CliResult, ErrorKind, EXIT_CONVERGENCE, EXIT_OK, EXIT_USAGE};
use reports::{PlotFile, PlotManifest, REPORT_SCHEMA_VERSION};
use std::ffi::OsString;
use std::io::Write;

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code. Reports go to `stdout` unless `--out` names a file;
/// diagnostics go to standard error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            return match e.kind() {
                K::DisplayHelp | K::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let label = match e.kind {
                ErrorKind::Usage => "usage error",
                ErrorKind::Data => "data error",
                ErrorKind::Convergence => "convergence failure",
            };
            eprintln!("ogelfr: {label}: {e}");
            e.exit_code()
        }
    }
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match &output.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))
        }
        None => stdout.write_all(text.as_bytes()).map_err(CliError::from),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> CliResult<u8> {
    match command {
        Command::Fit(a) => {
            let opts = fit_options(&a.optim)?;
            let data = load_dataset(&a.data.data)?;
            let report = fit_command(&data, &a.data.data, a.model, &opts)?;
            let text = match a.output.format {
                Format::Human => render::fit_human(&report),
                Format::Json => render::json(&report)?,
                Format::Csv => render::fit_csv(&report),
            };
            emit(&a.output, &text, stdout)?;
            if report.fit.converged {
                Ok(EXIT_OK)
            } else {
                eprintln!(
                    "ogelfr: convergence failure: {} did not converge within {} evaluations per run",
                    report.fit.model, a.optim.max_evals
                );
                Ok(EXIT_CONVERGENCE)
            }
        }
        Command::Compare(a) => {
            let opts = fit_options(&a.optim)?;
            let data = load_dataset(&a.data.data)?;
            let report = compare_command(&data, &a.data.data, &a.model, &opts)?;
            let text = match a.output.format {
                Format::Human => render::compare_human(&report),
                Format::Json => render::json(&report)?,
                Format::Csv => render::compare_csv(&report),
            };
            emit(&a.output, &text, stdout)?;
            for f in &report.failures {
                eprintln!("ogelfr: {} failed: {}", f.model, f.error);
            }
            Ok(if report.rows.is_empty() {
                EXIT_CONVERGENCE
            } else {
                EXIT_OK
            })
        }
        Command::Sample(a) => {
            let report = sample_command(a.model, &a.params, a.count, a.seed)?;
            let text = match a.output.format {
                Format::Human => render::sample_text(&report),
                Format::Json => render::json(&report)?,
                Format::Csv => render::sample_csv(&report),
            };
            emit(&a.output, &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::PlotData(a) => {
            let data = match (&a.params, a.data.data.as_str()) {
                (Some(_), BUILTIN_DATASET) => None,
                (_, source) => Some(load_dataset(source)?),
            };
            let (params, params_source) = match &a.params {
                Some(p) => (p.clone(), "params".to_string()),
                None => {
                    let opts = fit_options(&a.optim)?;
                    let fit =
                        ogelfr::estimation::fit_mle(data.as_ref().expect("data loaded for fitting"), a.model, &opts)?;
                    if !fit.converged {
                        return Err(CliError {
                            kind: ErrorKind::Convergence,
                            message: format!("{} did not converge; no curves written", a.model),
                        });
                    }
                    (fit.estimates, format!("fit:{}", a.data.data))
                }
            };
            let curves = plot_curves(&PlotInputs {
                model: a.model,
                params: &params,
                data: data.as_ref(),
                grid_points: a.grid_points,
                x_max: a.x_max,
            })?;
            std::fs::create_dir_all(&a.out)
                .map_err(|e| CliError::data(format!("cannot create {}: {e}", a.out.display())))?;
            let mut files = Vec::new();
            for c in &curves {
                let name = format!("{}.csv", c.name);
                let path = a.out.join(&name);
                std::fs::write(&path, c.to_csv())
                    .map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))?;
                files.push(PlotFile {
                    name,
                    columns: c.columns.to_vec(),
                    rows: c.points.len(),
                });
            }
            let manifest = PlotManifest {
                schema_version: REPORT_SCHEMA_VERSION,
                model: a.model,
                params,
                params_source,
                profile_kind: "slice".into(),
                files,
            };
            let text = match a.format {
                Format::Human => render::manifest_human(&manifest),
                Format::Json => render::json(&manifest)?,
                Format::Csv => render::manifest_csv(&manifest),
            };
            stdout.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Tables(a) => {
            let opts = fit_options(&a.optim)?;
            let data = load_dataset(&a.data.data)?;
            let report = tables_command(&data, &a.data.data, &opts)?;
            let text = match a.output.format {
                Format::Human => render::tables_human(&report),
                Format::Json => render::json(&report)?,
                Format::Csv => render::tables_csv(&report),
            };
            emit(&a.output, &text, stdout)?;
            Ok(EXIT_OK)
        }
    }
}
