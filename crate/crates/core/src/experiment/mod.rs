//! Monte Carlo study of the perimeter estimators.
//!
//! For every sample size `n`, every alpha and every replicate `m`, a sample
//! is drawn from the generator seeded with
//! `stream_seed(master_seed, [n, alpha_index, m])`, its alpha-shape is built
//! with the fast path and the selected estimator recorded. Cells aggregate
//! the mean absolute error, the bias and the sample standard deviation
//! (denominator `M - 1`) of the replicate values.

mod config;
mod output;
pub mod stats;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Deserialize;

use crate::alpha::AlphaShape;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::rng::replicate_rng;

pub use config::ConfigFile;
pub use output::{
    emit_outputs, render_report, write_raw_csv, write_summary_csv, OutputPaths, RAW_HEADER,
    SUMMARY_HEADER,
};
pub use stats::{normality_diagnostic, ols_fit, NormalityReport, SlopeFit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Estimator {
    /// Total length of the alpha-edges.
    #[default]
    #[serde(alias = "alpha_shape")]
    Shape,
    /// Total length of the radius-alpha arcs over the alpha-edges.
    #[serde(alias = "alpha_hull")]
    Hull,
}

impl Estimator {
    pub fn evaluate(self, shape: &AlphaShape) -> f64 {
        match self {
            Estimator::Shape => shape.shape_perimeter(),
            Estimator::Hull => shape.hull_perimeter(),
        }
    }
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Estimator::Shape => "shape",
            Estimator::Hull => "hull",
        })
    }
}

impl FromStr for Estimator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shape" | "alpha_shape" => Ok(Estimator::Shape),
            "hull" | "alpha_hull" => Ok(Estimator::Hull),
            other => Err(Error::InvalidConfig(format!("unknown estimator {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub domain: Domain,
    pub alphas: Vec<f64>,
    pub sample_sizes: Vec<usize>,
    pub replicates: usize,
    pub master_seed: u64,
    pub estimator: Estimator,
    /// Directory for `raw.csv`, `summary.csv` and `report.txt`, if any.
    pub output_path: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::InvalidConfig("replicates must be at least 1".into()));
        }
        if let Some(a) = self.alphas.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
            return Err(Error::InvalidConfig(format!(
                "alpha must be positive, got {a}"
            )));
        }
        if self.sample_sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(
                "sample sizes must be strictly increasing".into(),
            ));
        }
        Ok(())
    }
}

/// Summary of the replicates for one `(n, alpha)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub alpha: f64,
    pub alpha_index: usize,
    pub n: usize,
    /// Mean absolute deviation from the true perimeter.
    pub error: f64,
    /// Mean signed deviation from the true perimeter.
    pub bias: f64,
    /// Sample standard deviation with denominator `M - 1` (0 when `M = 1`).
    pub std: f64,
    /// Estimates indexed by replicate.
    pub values: Vec<f64>,
}

impl CellSummary {
    /// Aggregates over the values sorted ascending, so the result does not
    /// depend on replicate order.
    pub fn from_values(
        alpha: f64,
        alpha_index: usize,
        n: usize,
        truth: f64,
        values: Vec<f64>,
    ) -> Self {
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        let m = sorted.len() as f64;
        let (error, bias, std) = if sorted.is_empty() {
            (f64::NAN, f64::NAN, f64::NAN)
        } else {
            let mean = sorted.iter().sum::<f64>() / m;
            let error = sorted.iter().map(|v| (v - truth).abs()).sum::<f64>() / m;
            let bias = sorted.iter().map(|v| v - truth).sum::<f64>() / m;
            let std = if sorted.len() > 1 {
                (sorted.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (m - 1.0)).sqrt()
            } else {
                0.0
            };
            (error, bias, std)
        };
        CellSummary {
            alpha,
            alpha_index,
            n,
            error,
            bias,
            std,
            values,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub domain: Domain,
    pub estimator: Estimator,
    pub true_perimeter: f64,
    /// Ordered by sample size, then alpha index.
    pub cells: Vec<CellSummary>,
}

impl ExperimentResult {
    pub fn empty(domain: Domain, estimator: Estimator) -> Self {
        ExperimentResult {
            domain,
            estimator,
            true_perimeter: domain.exact_perimeter(),
            cells: Vec::new(),
        }
    }

    pub fn cell(&self, alpha: f64, n: usize) -> Option<&CellSummary> {
        self.cells.iter().find(|c| c.alpha == alpha && c.n == n)
    }

    /// Distinct alphas in first-seen order.
    pub fn alphas(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for c in &self.cells {
            if !out.contains(&c.alpha) {
                out.push(c.alpha);
            }
        }
        out
    }
}

/// Draws replicate `m` of cell `(n, alpha_index)` and returns its alpha-shape.
pub fn replicate_shape(
    config: &ExperimentConfig,
    n: usize,
    alpha_index: usize,
    replicate: usize,
) -> Result<AlphaShape> {
    let mut rng = replicate_rng(config.master_seed, n, alpha_index, replicate);
    let points = config.domain.sample_uniform(n, &mut rng);
    AlphaShape::build(points, config.alphas[alpha_index])
}

/// Runs every replicate of every cell. Replicates run in parallel; the first
/// failure aborts the run.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let truth = config.domain.exact_perimeter();
    let mut cells = Vec::with_capacity(config.sample_sizes.len() * config.alphas.len());
    for &n in &config.sample_sizes {
        for (alpha_index, &alpha) in config.alphas.iter().enumerate() {
            let values = (0..config.replicates)
                .into_par_iter()
                .map(|m| {
                    replicate_shape(config, n, alpha_index, m)
                        .map(|shape| config.estimator.evaluate(&shape))
                        .map_err(|e| Error::Replicate {
                            n,
                            alpha,
                            replicate: m,
                            source: Box::new(e),
                        })
                })
                .collect::<Result<Vec<f64>>>()?;
            cells.push(CellSummary::from_values(
                alpha,
                alpha_index,
                n,
                truth,
                values,
            ));
        }
    }
    Ok(ExperimentResult {
        domain: config.domain,
        estimator: config.estimator,
        true_perimeter: truth,
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Error,
    Std,
}

impl Statistic {
    fn of(self, cell: &CellSummary) -> f64 {
        match self {
            Statistic::Error => cell.error,
            Statistic::Std => cell.std,
        }
    }
}

/// Least-squares fit of `log(statistic)` on `log(n)` over the cells of one
/// alpha.
pub fn fit_loglog_slope(
    result: &ExperimentResult,
    alpha: f64,
    statistic: Statistic,
) -> Result<SlopeFit> {
    let mut cells: Vec<&CellSummary> = result.cells.iter().filter(|c| c.alpha == alpha).collect();
    cells.sort_by_key(|c| c.n);
    if cells.len() < 3 {
        return Err(Error::TooFewSizes {
            alpha,
            required: 3,
            got: cells.len(),
        });
    }
    let mut xs = Vec::with_capacity(cells.len());
    let mut ys = Vec::with_capacity(cells.len());
    for c in cells {
        let value = statistic.of(c);
        if value.is_nan() || value <= 0.0 {
            return Err(Error::NonPositiveStatistic {
                n: c.n,
                alpha,
                value,
            });
        }
        xs.push((c.n as f64).ln());
        ys.push(value.ln());
    }
    ols_fit(&xs, &ys)
}
