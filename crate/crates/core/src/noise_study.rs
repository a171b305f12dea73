//! Monte Carlo studies of the Gaussian-null property: the fractional
//! bispectrum of zero-mean Gaussian noise has zero expectation, so segment
//! averaging drives the estimate toward zero (roughly as one over the
//! square root of the segment count), and on a contaminated signal the
//! coupling peak stands out more as the noise floor is averaged down.
//!
//! Studies are fully deterministic: per-trial noise comes from
//! [`trial_seed`](crate::signal_gen::trial_seed)-derived streams and
//! aggregation runs in trial order.

use serde::{Deserialize, Serialize};

use crate::bispectrum::averaged_fractional_bispectrum;
use crate::config::EstimatorConfig;
use crate::detection::peak_statistic;
use crate::error::{config, invalid, Result};
use crate::signal_gen::{gaussian_noise, multi_tone, trial_seed, NoiseSpec, ToneSpec};

/// Monte Carlo study parameters.
///
/// Frequencies of the deterministic tone component are in hertz with the
/// study's sample rate fixed at `segment_length` Hz, so integer
/// frequencies are integer bins of every segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    pub base_seed: u64,
    /// Independent noise records per segment-count point.
    pub trials: usize,
    /// Strictly increasing list of segment counts M to evaluate.
    pub segment_counts: Vec<usize>,
    /// Samples per segment (power of two).
    pub segment_length: usize,
    /// Noise standard deviation.
    pub sigma: f64,
    /// Fractional parameter of the estimator.
    pub k: f64,
    /// Optional deterministic component; empty means pure noise.
    pub tones: Vec<ToneSpec>,
    pub grid_extent: usize,
}

impl StudyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(config("study requires at least one trial"));
        }
        if self.segment_counts.is_empty() {
            return Err(config("study requires at least one segment count"));
        }
        if self.segment_counts[0] == 0 {
            return Err(config("segment counts must be at least 1"));
        }
        if !self.segment_counts.windows(2).all(|w| w[0] < w[1]) {
            return Err(config("segment counts must be strictly increasing"));
        }
        if !self.sigma.is_finite() || self.sigma < 0.0 {
            return Err(config(format!(
                "sigma must be finite and nonnegative, got {}",
                self.sigma
            )));
        }
        if !self.k.is_finite() {
            return Err(invalid(format!("k must be finite, got {}", self.k)));
        }
        Ok(())
    }

    fn estimator(&self) -> EstimatorConfig {
        EstimatorConfig {
            segment_length: self.segment_length,
            ..EstimatorConfig::default()
        }
    }

    /// Pure-noise decay scenario: sigma 1, k 3/2, 32 trials over
    /// M in {4, 16, 64} segments of length 128, seed 42.
    pub fn default_null_scenario() -> Self {
        Self {
            base_seed: 42,
            trials: 32,
            segment_counts: vec![4, 16, 64],
            segment_length: 128,
            sigma: 1.0,
            k: 1.5,
            tones: Vec::new(),
            grid_extent: 32,
        }
    }

    /// Contaminated-signal scenario: unit tones on segment bins 8 and 20
    /// plus sigma 1 noise, k 3/2, 8 trials over M in {4, 16, 64}, seed 42.
    pub fn default_contaminated_scenario() -> Self {
        Self {
            tones: vec![
                ToneSpec {
                    frequency: 8.0,
                    amplitude: 1.0,
                    phase: 0.0,
                },
                ToneSpec {
                    frequency: 20.0,
                    amplitude: 1.0,
                    phase: 0.0,
                },
            ],
            trials: 8,
            ..Self::default_null_scenario()
        }
    }
}

/// One evaluated segment count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub segments: usize,
    /// Grid-mean |F| of the averaged estimate, averaged over trials.
    pub mean_abs: f64,
    /// Peak contrast (margin 1) of the averaged estimate, averaged over trials.
    pub peak_contrast: f64,
}

/// Suppression curve over the requested segment counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuppressionCurve {
    pub points: Vec<CurvePoint>,
    /// Least-squares slope of log(mean_abs) against log(segments);
    /// `None` when undefined (a zero mean_abs or fewer than two points).
    pub slope_estimate: Option<f64>,
}

fn run_study(cfg: &StudyConfig) -> Result<SuppressionCurve> {
    cfg.validate()?;
    let sample_rate = cfg.segment_length as f64;
    let estimator = cfg.estimator();

    let mut points = Vec::with_capacity(cfg.segment_counts.len());
    for (batch, &m) in cfg.segment_counts.iter().enumerate() {
        let record_len = m
            .checked_mul(cfg.segment_length)
            .ok_or_else(|| config("record length overflows"))?;
        let deterministic = if cfg.tones.is_empty() {
            None
        } else {
            Some(multi_tone(&cfg.tones, record_len, sample_rate)?)
        };

        let mut sum_mean_abs = 0.0;
        let mut sum_contrast = 0.0;
        for trial in 0..cfg.trials {
            let seed = trial_seed(cfg.base_seed, trial as u64, batch as u64);
            let noise = gaussian_noise(
                &NoiseSpec {
                    sigma: cfg.sigma,
                    seed,
                },
                record_len,
                sample_rate,
            )?;
            let record = match &deterministic {
                Some(tones) => tones.add(&noise)?,
                None => noise,
            };
            let grid = averaged_fractional_bispectrum(&record, cfg.k, &estimator, cfg.grid_extent)?;
            sum_mean_abs += grid.mean_abs();
            sum_contrast += peak_statistic(&grid, 1)?.contrast;
        }
        points.push(CurvePoint {
            segments: m,
            mean_abs: sum_mean_abs / cfg.trials as f64,
            peak_contrast: sum_contrast / cfg.trials as f64,
        });
    }

    Ok(SuppressionCurve {
        slope_estimate: fit_log_slope(&points),
        points,
    })
}

fn fit_log_slope(points: &[CurvePoint]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|p| p.mean_abs <= 0.0) {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.segments as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.mean_abs.ln()).collect();
    let n = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let var: f64 = xs.iter().map(|x| (x - x_mean) * (x - x_mean)).sum();
    Some(cov / var)
}

/// Decay of the pure-noise estimate with segment count. The configuration
/// must not carry a deterministic component.
pub fn gaussian_null_study(cfg: &StudyConfig) -> Result<SuppressionCurve> {
    if !cfg.tones.is_empty() {
        return Err(config(
            "gaussian_null_study expects a pure-noise configuration (no tones)",
        ));
    }
    run_study(cfg)
}

/// Peak-contrast growth with segment count for a tone component buried in
/// noise. The configuration must carry a deterministic component.
pub fn contaminated_signal_study(cfg: &StudyConfig) -> Result<SuppressionCurve> {
    if cfg.tones.is_empty() {
        return Err(config(
            "contaminated_signal_study requires a deterministic tone component",
        ));
    }
    run_study(cfg)
}
