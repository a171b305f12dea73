//! Higher-order spectral analysis around the fractional bispectrum
//! F(u, v, k) = X(u) X(v) X*(u + k v), a one-parameter generalization of
//! the classical bispectrum (k = 1) that detects frequency coupling even
//! when no component sits at an exact sum frequency.
//!
//! The crate provides:
//!
//! - frequency-domain estimators (single-shot, exact-rational, and
//!   segment-averaged) over bifrequency grids ([`bispectrum`]);
//! - the time-domain triple-correlation dual and a numerical verification
//!   that the two sides form an exact discrete transform pair
//!   ([`cumulant`]);
//! - deterministic synthetic signals: tones, phase-coupled triples, and
//!   seeded Gaussian and band-limited noise ([`signal_gen`]);
//! - peak statistics and a k-scan detector for the coupling parameter
//!   ([`detection`]);
//! - Monte Carlo studies of Gaussian-noise suppression ([`noise_study`]).
//!
//! Conventions: unnormalized forward DFT, circular (N-periodic) indexing
//! throughout, and grids over u, v in [0, extent) with extent at most N/2.
//! All operations are pure functions of their inputs; identical inputs
//! give identical outputs, seeds included.

pub mod bispectrum;
pub mod config;
pub mod cumulant;
pub mod detection;
pub mod error;
mod fft;
pub mod noise_study;
pub mod signal;
pub mod signal_gen;
pub mod spectrum;

pub use bispectrum::{
    averaged_fractional_bispectrum, bispectrum_direct, fractional_bispectrum_direct,
    fractional_bispectrum_exact_rational, fractional_bispectrum_full,
    fractional_bispectrum_full_rational, BifrequencyGrid,
};
pub use config::{DetrendKind, EstimatorConfig, InterpMode, WindowKind};
pub use cumulant::{
    cumulant_grid, fractional_triple_correlation, triple_correlation, verify_fourier_pair,
    verify_fourier_pair_with_cap, CumulantGrid, DEFAULT_VERIFY_CAP,
};
pub use detection::{
    estimate_frequency_ratio, estimate_frequency_ratio_with_extent, k_scan, peak_statistic,
    KScanEntry, KScanResult, PeakReport, RatioEstimate, CONTRAST_SATURATION,
    DETECTION_CONTRAST_FACTOR,
};
pub use error::{Error, Result};
pub use noise_study::{
    contaminated_signal_study, gaussian_null_study, CurvePoint, StudyConfig, SuppressionCurve,
};
pub use signal::Signal;
pub use signal_gen::{
    bandpass_noise, coupled_triple, gaussian_noise, multi_tone, trial_seed, NoiseSpec, ToneSpec,
};
pub use spectrum::{dft_forward, fine_spectrum, Spectrum};

pub use num_complex::Complex64;
