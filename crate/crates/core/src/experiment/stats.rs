//! Least-squares slope fits and moment-based normality statistics.

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Two-sided 95% Student interval for the slope.
    pub ci_low: f64,
    pub ci_high: f64,
    pub r_squared: f64,
    pub points: usize,
}

/// Ordinary least squares of `ys` on `xs` with a 95% Student confidence
/// interval on the slope (`k - 2` degrees of freedom).
pub fn ols_fit(xs: &[f64], ys: &[f64]) -> Result<SlopeFit> {
    let k = xs.len();
    if k != ys.len() || k < 3 {
        return Err(Error::TooFewPoints {
            required: 3,
            got: k.min(ys.len()),
        });
    }
    let kf = k as f64;
    let mx = xs.iter().sum::<f64>() / kf;
    let my = ys.iter().sum::<f64>() / kf;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mx;
        let dy = y - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::ZeroVariance);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| (y - intercept - slope * x).powi(2))
        .sum();
    let dof = kf - 2.0;
    let se = (sse / dof / sxx).sqrt();
    let t = StudentsT::new(0.0, 1.0, dof)
        .expect("dof >= 1")
        .inverse_cdf(0.975);
    let r_squared = if syy > 0.0 {
        (1.0 - sse / syy).clamp(0.0, 1.0)
    } else {
        1.0
    };
    Ok(SlopeFit {
        slope,
        intercept,
        ci_low: slope - t * se,
        ci_high: slope + t * se,
        r_squared,
        points: k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalityReport {
    pub skewness: f64,
    pub excess_kurtosis: f64,
    /// Jarque-Bera statistic `n/6 (S^2 + K^2/4)`.
    pub jarque_bera: f64,
    /// Upper tail of the chi-square(2) law at the statistic.
    pub p_value: f64,
}

pub const MIN_NORMALITY_SAMPLE: usize = 20;

pub fn normality_diagnostic(values: &[f64]) -> Result<NormalityReport> {
    let n = values.len();
    if n < MIN_NORMALITY_SAMPLE {
        return Err(Error::TooFewPoints {
            required: MIN_NORMALITY_SAMPLE,
            got: n,
        });
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for &v in values {
        let d = v - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;
    if m2 <= (f64::EPSILON * mean.abs()).powi(2) {
        return Err(Error::ZeroVariance);
    }
    let skewness = m3 / m2.powf(1.5);
    let excess_kurtosis = m4 / (m2 * m2) - 3.0;
    let jarque_bera = nf / 6.0 * (skewness * skewness + 0.25 * excess_kurtosis * excess_kurtosis);
    Ok(NormalityReport {
        skewness,
        excess_kurtosis,
        jarque_bera,
        // Chi-square with two degrees of freedom has survival exp(-x/2).
        p_value: (-0.5 * jarque_bera).exp(),
    })
}
