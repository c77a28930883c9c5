use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::stats::{normality_diagnostic, MIN_NORMALITY_SAMPLE};
use super::{fit_loglog_slope, ExperimentResult, Statistic};
use crate::error::{Error, Result};

pub const RAW_HEADER: [&str; 6] = [
    "domain",
    "alpha",
    "n",
    "replicate",
    "perimeter_estimate",
    "true_perimeter",
];

pub const SUMMARY_HEADER: [&str; 7] = ["domain", "alpha", "n", "M", "error", "bias", "std"];

fn csv_err(path: &Path, e: csv::Error) -> Error {
    let source = match e.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => std::io::Error::other(format!("{other:?}")),
    };
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// One row per replicate, cells in run order. Floats use the shortest
/// representation that round-trips.
pub fn write_raw_csv<W: Write>(result: &ExperimentResult, out: W, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RAW_HEADER).map_err(|e| csv_err(path, e))?;
    let domain = result.domain.to_string();
    let truth = result.true_perimeter.to_string();
    for cell in &result.cells {
        let alpha = cell.alpha.to_string();
        let n = cell.n.to_string();
        for (m, v) in cell.values.iter().enumerate() {
            w.write_record([
                domain.as_str(),
                &alpha,
                &n,
                &m.to_string(),
                &v.to_string(),
                &truth,
            ])
            .map_err(|e| csv_err(path, e))?;
        }
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_summary_csv<W: Write>(result: &ExperimentResult, out: W, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_HEADER)
        .map_err(|e| csv_err(path, e))?;
    let domain = result.domain.to_string();
    for cell in &result.cells {
        w.write_record([
            domain.clone(),
            cell.alpha.to_string(),
            cell.n.to_string(),
            cell.values.len().to_string(),
            cell.error.to_string(),
            cell.bias.to_string(),
            cell.std.to_string(),
        ])
        .map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Plain-text report: slope fits per alpha, normality per cell, and a
/// whitespace-separated data block suitable for gnuplot.
pub fn render_report(result: &ExperimentResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "domain: {}", result.domain);
    let _ = writeln!(s, "estimator: {}", result.estimator);
    let _ = writeln!(s, "true perimeter: {}", result.true_perimeter);
    let _ = writeln!(s);
    let _ = writeln!(s, "log-log slopes");
    for alpha in result.alphas() {
        for (label, stat) in [("error", Statistic::Error), ("std", Statistic::Std)] {
            match fit_loglog_slope(result, alpha, stat) {
                Ok(f) => {
                    let _ = writeln!(
                        s,
                        "  alpha={alpha} {label}: slope={:.4} ci=[{:.4}, {:.4}] r2={:.4} k={}",
                        f.slope, f.ci_low, f.ci_high, f.r_squared, f.points
                    );
                }
                Err(e) => {
                    let _ = writeln!(s, "  alpha={alpha} {label}: no fit ({e})");
                }
            }
        }
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "normality (Jarque-Bera)");
    for cell in &result.cells {
        if cell.values.len() < MIN_NORMALITY_SAMPLE {
            continue;
        }
        match normality_diagnostic(&cell.values) {
            Ok(r) => {
                let _ = writeln!(
                    s,
                    "  alpha={} n={}: skew={:.4} kurt={:.4} jb={:.4} p={:.4}",
                    cell.alpha, cell.n, r.skewness, r.excess_kurtosis, r.jarque_bera, r.p_value
                );
            }
            Err(e) => {
                let _ = writeln!(s, "  alpha={} n={}: {e}", cell.alpha, cell.n);
            }
        }
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "# alpha n error bias std");
    for cell in &result.cells {
        let _ = writeln!(
            s,
            "{} {} {} {} {}",
            cell.alpha, cell.n, cell.error, cell.bias, cell.std
        );
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputPaths {
    pub raw: PathBuf,
    pub summary: PathBuf,
    pub report: PathBuf,
}

/// Writes `raw.csv`, `summary.csv` and `report.txt` into `dir`, creating it
/// if needed.
pub fn emit_outputs(result: &ExperimentResult, dir: &Path) -> Result<OutputPaths> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let paths = OutputPaths {
        raw: dir.join("raw.csv"),
        summary: dir.join("summary.csv"),
        report: dir.join("report.txt"),
    };
    let create = |p: &Path| {
        std::fs::File::create(p).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        })
    };
    write_raw_csv(result, create(&paths.raw)?, &paths.raw)?;
    write_summary_csv(result, create(&paths.summary)?, &paths.summary)?;
    std::fs::write(&paths.report, render_report(result)).map_err(|source| Error::Io {
        path: paths.report.clone(),
        source,
    })?;
    Ok(paths)
}
