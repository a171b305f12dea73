//! Estimator configuration: windowing, segmentation, detrending, and the
//! policy for evaluating the spectrum at fractional bin indices.

use serde::{Deserialize, Serialize};

use crate::error::{config, Result};

/// Taper applied to each segment before its transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowKind {
    /// No taper. Keeps integer-bin tones exact; use for hand-checkable values.
    Rectangular,
    /// Periodic Hann taper. Recommended for leakage control when tone
    /// frequencies do not fall on integer bins.
    Hann,
}

impl WindowKind {
    /// Window coefficients for a segment of length `n` (periodic form).
    pub fn coefficients(self, n: usize) -> Vec<f64> {
        match self {
            WindowKind::Rectangular => vec![1.0; n],
            WindowKind::Hann => (0..n)
                .map(|t| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * t as f64 / n as f64).cos())
                .collect(),
        }
    }
}

/// Per-segment detrending applied before windowing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetrendKind {
    None,
    /// Subtract the segment mean. Default: third-order statistics are
    /// defined for zero-mean data, and a DC offset otherwise dominates
    /// the low-order bins.
    RemoveMean,
}

/// How the spectrum is evaluated at the fractional index u + k*v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InterpMode {
    /// Round to the nearest bin of the N-periodic coefficient sequence.
    Nearest,
    /// Linear interpolation between the two adjacent bins.
    Linear,
    /// Evaluate exactly for rational k = p/q on a q-fold fine frequency
    /// grid. No interpolation error; requires `rational_k`.
    ExactRational,
}

/// Windowing, segmentation, detrending, and interpolation policy for the
/// averaged estimators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorConfig {
    pub window: WindowKind,
    /// Power-of-two segment length, or 0 for a single whole-signal segment.
    pub segment_length: usize,
    /// Fraction of each segment shared with the next, in [0, 0.9].
    /// Ignored when `segment_length` is 0.
    pub overlap_fraction: f64,
    pub detrend: DetrendKind,
    pub interp: InterpMode,
    /// Reduced rational (p, q) defining k = p/q; required when
    /// `interp == ExactRational`.
    pub rational_k: Option<(i64, u64)>,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self {
            window: WindowKind::Rectangular,
            segment_length: 0,
            overlap_fraction: 0.0,
            detrend: DetrendKind::RemoveMean,
            interp: InterpMode::Linear,
            rational_k: None,
        }
    }
}

impl EstimatorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.segment_length != 0 && !self.segment_length.is_power_of_two() {
            return Err(config(format!(
                "segment_length must be a power of two or 0, got {}",
                self.segment_length
            )));
        }
        if !(0.0..=0.9).contains(&self.overlap_fraction) {
            return Err(config(format!(
                "overlap_fraction must lie in [0, 0.9], got {}",
                self.overlap_fraction
            )));
        }
        if self.interp == InterpMode::ExactRational {
            match self.rational_k {
                None => {
                    return Err(config(
                        "interp = exact_rational requires rational_k = (p, q)",
                    ))
                }
                Some((p, q)) => check_reduced_rational(p, q)?,
            }
        }
        Ok(())
    }
}

/// Checks q >= 1 and gcd(|p|, q) = 1.
pub fn check_reduced_rational(p: i64, q: u64) -> Result<()> {
    if q == 0 {
        return Err(config("rational denominator q must be positive"));
    }
    if gcd(p.unsigned_abs(), q) != 1 {
        return Err(config(format!("rational {p}/{q} is not in lowest terms")));
    }
    Ok(())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
