use serde::Serialize;

use crate::error::{MayerError, Result};

/// Relative zero threshold: an eigenvalue counts as zero when `λ <= 1e-8 · max(1, λ_max)`.
pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-8;

/// Which Laplacian a spectrum belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralChannel {
    pub n: usize,
    pub q: usize,
    pub order: u32,
    pub a: f64,
    pub b: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub channel: Option<SpectralChannel>,
    pub eigenvalues: Vec<f64>,
    pub zero_count: usize,
    /// Smallest positive eigenvalue.
    pub lambda1: Option<f64>,
    pub lambda_max: f64,
    pub mean_positive: f64,
    pub tolerance_used: f64,
    pub expected_zero: Option<usize>,
}

impl SpectrumReport {
    /// True when an exact Betti number was supplied and disagrees with the zero count.
    pub fn cross_check_failed(&self) -> bool {
        self.expected_zero.is_some_and(|e| e != self.zero_count)
    }

    pub fn positive(&self) -> &[f64] {
        &self.eigenvalues[self.zero_count..]
    }
}

/// Summary of an ascending spectrum with the default zero threshold.
pub fn spectral_summary(eigenvalues: Vec<f64>, expected_zero: Option<usize>) -> Result<SpectrumReport> {
    summarize(eigenvalues, expected_zero, DEFAULT_ZERO_TOLERANCE)
}

/// Summary of an ascending spectrum, zero threshold `relative · max(1, λ_max)`.
pub fn summarize(eigenvalues: Vec<f64>, expected_zero: Option<usize>, relative: f64) -> Result<SpectrumReport> {
    let lambda_max = eigenvalues.last().copied().unwrap_or(0.0);
    let tau = relative * lambda_max.max(1.0);
    if let Some(&low) = eigenvalues.first() {
        if low < -tau {
            return Err(MayerError::NotPositiveSemidefinite {
                eigenvalue: low,
                tolerance: tau,
            });
        }
    }
    let zero_count = eigenvalues.partition_point(|&x| x <= tau);
    let positive = &eigenvalues[zero_count..];
    let mean_positive = if positive.is_empty() {
        0.0
    } else {
        positive.iter().sum::<f64>() / positive.len() as f64
    };
    Ok(SpectrumReport {
        channel: None,
        lambda1: positive.first().copied(),
        eigenvalues,
        zero_count,
        lambda_max,
        mean_positive,
        tolerance_used: tau,
        expected_zero,
    })
}
