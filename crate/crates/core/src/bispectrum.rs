//! Direct (triple-product) bispectrum and fractional-bispectrum estimators.
//!
//! The classical bispectrum of a real signal multiplies two spectrum bins
//! with the conjugate bin at their sum, S(u,v) = X(u) X(v) X*(u+v). The
//! fractional form generalizes the third index to u + k*v for a real
//! parameter k, F(u,v,k) = X(u) X(v) X*(u + k*v), and reduces to the
//! classical form at k = 1. Off-grid indices are handled by the policy in
//! [`InterpMode`]: nearest/linear interpolation on the periodic coefficient
//! sequence, or exact evaluation on a q-fold fine grid for rational k.
//!
//! Estimation of the underlying expectation is by segment averaging:
//! split, detrend, window, transform, average the per-segment products.

use ndarray::Array2;
use num_complex::Complex64;

use crate::config::{check_reduced_rational, DetrendKind, EstimatorConfig, InterpMode, WindowKind};
use crate::error::{config, invalid, Result};
use crate::signal::Signal;
use crate::spectrum::{dft_forward, fine_spectrum, Spectrum};

/// Dense bifrequency grid F(u, v) with the parameters that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct BifrequencyGrid {
    /// Complex grid values indexed by integer bin pairs (u, v).
    pub values: Array2<Complex64>,
    /// Fractional parameter the grid was evaluated at (1 for the
    /// classical bispectrum).
    pub k: f64,
    /// Hertz per bin of the per-segment transform.
    pub bin_resolution: f64,
    /// Configuration used; direct single-spectrum estimators record a
    /// whole-signal, rectangular, no-detrend configuration.
    pub estimator: EstimatorConfig,
    /// Number of segments averaged into the grid (1 for single-shot).
    pub segments_averaged: usize,
}

impl BifrequencyGrid {
    /// Grid magnitudes |F(u, v)|.
    pub fn magnitude(&self) -> Array2<f64> {
        self.values.mapv(|c| c.norm())
    }

    /// Mean of |F| over the whole grid.
    pub fn mean_abs(&self) -> f64 {
        let n = self.values.len();
        self.values.iter().map(|c| c.norm()).sum::<f64>() / n as f64
    }

    /// Largest |F| over the whole grid.
    pub fn peak_abs(&self) -> f64 {
        self.values.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

fn check_grid_domain(n: usize, grid_extent: usize) -> Result<()> {
    if n < 2 {
        return Err(config(
            "grid operations require at least 2 samples per transform",
        ));
    }
    if grid_extent == 0 {
        return Err(config("grid extent must be at least 1"));
    }
    if grid_extent > n / 2 {
        return Err(config(format!(
            "grid extent {grid_extent} exceeds N/2 = {} for N = {n}",
            n / 2
        )));
    }
    Ok(())
}

fn direct_estimator_config(interp: InterpMode, rational_k: Option<(i64, u64)>) -> EstimatorConfig {
    EstimatorConfig {
        window: WindowKind::Rectangular,
        segment_length: 0,
        overlap_fraction: 0.0,
        detrend: DetrendKind::None,
        interp,
        rational_k,
    }
}

/// Classical bispectrum on integer bins:
/// values(u, v) = X(u) X(v) conj(X((u+v) mod N)) for 0 <= u, v < extent.
pub fn bispectrum_direct(spectrum: &Spectrum, grid_extent: usize) -> Result<BifrequencyGrid> {
    let n = spectrum.len();
    check_grid_domain(n, grid_extent)?;
    let c = spectrum.coefficients();
    let values = Array2::from_shape_fn((grid_extent, grid_extent), |(u, v)| {
        c[u] * c[v] * c[(u + v) % n].conj()
    });
    Ok(BifrequencyGrid {
        values,
        k: 1.0,
        bin_resolution: spectrum.bin_resolution(),
        estimator: direct_estimator_config(InterpMode::Linear, None),
        segments_averaged: 1,
    })
}

/// Fractional bispectrum with interpolated third index:
/// values(u, v) = X(u) X(v) conj(X(u + k*v)), the index reduced modulo N.
///
/// When k*v is integral for every v on the grid (integer k in particular)
/// the interpolation path returns stored coefficients exactly, so k = 1
/// reproduces [`bispectrum_direct`] bit for bit.
pub fn fractional_bispectrum_direct(
    spectrum: &Spectrum,
    k: f64,
    grid_extent: usize,
    interp: InterpMode,
) -> Result<BifrequencyGrid> {
    if !k.is_finite() {
        return Err(invalid(format!(
            "fractional parameter k must be finite, got {k}"
        )));
    }
    let n = spectrum.len();
    check_grid_domain(n, grid_extent)?;
    if interp == InterpMode::ExactRational {
        return Err(config(
            "exact rational evaluation requires fractional_bispectrum_exact_rational",
        ));
    }
    let c = spectrum.coefficients();
    let mut values = Array2::default((grid_extent, grid_extent));
    for u in 0..grid_extent {
        for v in 0..grid_extent {
            let w = spectrum.value_at(u as f64 + k * v as f64, interp)?;
            values[[u, v]] = c[u] * c[v] * w.conj();
        }
    }
    Ok(BifrequencyGrid {
        values,
        k,
        bin_resolution: spectrum.bin_resolution(),
        estimator: direct_estimator_config(interp, None),
        segments_averaged: 1,
    })
}

/// Fractional bispectrum for k = p/q with no interpolation error.
///
/// The third factor is read off the q-fold fine frequency grid (the
/// spectrum of the time-zero-padded signal), where the index q*u + p*v is
/// integral: values(u, v) = X(u) X(v) conj(X_fine((q*u + p*v) mod q*N)).
/// Exact up to floating-point rounding.
pub fn fractional_bispectrum_exact_rational(
    signal: &Signal,
    p: i64,
    q: u64,
    grid_extent: usize,
) -> Result<BifrequencyGrid> {
    check_reduced_rational(p, q)?;
    let n = signal.len();
    check_grid_domain(n, grid_extent)?;
    let coarse = dft_forward(signal);
    let fine = fine_spectrum(signal, q)?;
    let c = coarse.coefficients();
    let cf = fine.coefficients();
    let fine_len = cf.len() as i64;
    let q_i = q as i64;

    let values = Array2::from_shape_fn((grid_extent, grid_extent), |(u, v)| {
        let idx = (q_i * u as i64 + p * v as i64).rem_euclid(fine_len) as usize;
        c[u] * c[v] * cf[idx].conj()
    });
    Ok(BifrequencyGrid {
        values,
        k: p as f64 / q as f64,
        bin_resolution: coarse.bin_resolution(),
        estimator: direct_estimator_config(InterpMode::ExactRational, Some((p, q))),
        segments_averaged: 1,
    })
}

/// Centered residue of v modulo N, used by the full-grid evaluators:
/// bins above N/2 stand for negative frequencies, and the third index
/// must scale the signed frequency by k. Returns None for the split
/// Nyquist bin of an even N.
fn centered_bin(v: usize, n: usize) -> Option<i64> {
    if 2 * v < n {
        Some(v as i64)
    } else if 2 * v == n {
        None
    } else {
        Some(v as i64 - n as i64)
    }
}

/// Fractional bispectrum over the full N x N periodic grid, interpolated.
///
/// Unlike the public estimators (whose domain stops at N/2), the full grid
/// covers negative-frequency rows and columns; the column index enters the
/// third factor through its centered residue, and the Nyquist column of an
/// even N averages the two +/- N/2 representatives. Under this convention
/// the grid of a real signal satisfies F(N-u, N-v) = conj(F(u, v)) exactly
/// and is the discrete transform of a real lag-domain grid.
pub fn fractional_bispectrum_full(
    spectrum: &Spectrum,
    k: f64,
    interp: InterpMode,
) -> Result<Array2<Complex64>> {
    if !k.is_finite() {
        return Err(invalid(format!(
            "fractional parameter k must be finite, got {k}"
        )));
    }
    if interp == InterpMode::ExactRational {
        return Err(config(
            "exact rational evaluation requires fractional_bispectrum_full_rational",
        ));
    }
    let n = spectrum.len();
    if n < 2 {
        return Err(config("full-grid evaluation requires at least 2 samples"));
    }
    let c = spectrum.coefficients();
    let mut values = Array2::default((n, n));
    for u in 0..n {
        for v in 0..n {
            let third = match centered_bin(v, n) {
                Some(vc) => spectrum.value_at(u as f64 + k * vc as f64, interp)?,
                None => {
                    let half = n as f64 / 2.0;
                    let hi = spectrum.value_at(u as f64 + k * half, interp)?;
                    let lo = spectrum.value_at(u as f64 - k * half, interp)?;
                    (hi + lo) * 0.5
                }
            };
            values[[u, v]] = c[u] * c[v] * third.conj();
        }
    }
    Ok(values)
}

/// Exact-rational counterpart of [`fractional_bispectrum_full`] for k = p/q.
pub fn fractional_bispectrum_full_rational(
    signal: &Signal,
    p: i64,
    q: u64,
) -> Result<Array2<Complex64>> {
    check_reduced_rational(p, q)?;
    let n = signal.len();
    if n < 2 {
        return Err(config("full-grid evaluation requires at least 2 samples"));
    }
    let coarse = dft_forward(signal);
    let fine = fine_spectrum(signal, q)?;
    let c = coarse.coefficients();
    let cf = fine.coefficients();
    let fine_len = cf.len() as i64;
    let q_i = q as i64;

    let mut values = Array2::default((n, n));
    for u in 0..n {
        let base = q_i * u as i64;
        for v in 0..n {
            let third = match centered_bin(v, n) {
                Some(vc) => cf[(base + p * vc).rem_euclid(fine_len) as usize],
                None => {
                    // Even N: p * N/2 is integral on the fine grid.
                    let off = p * (n as i64 / 2);
                    let hi = cf[(base + off).rem_euclid(fine_len) as usize];
                    let lo = cf[(base - off).rem_euclid(fine_len) as usize];
                    (hi + lo) * 0.5
                }
            };
            values[[u, v]] = c[u] * c[v] * third.conj();
        }
    }
    Ok(values)
}

/// Segment start offsets for a record of length `n`: hop is the segment
/// length minus the floor of the overlapped part, and every segment must
/// fit entirely inside the record.
fn segment_starts(n: usize, segment_length: usize, overlap_fraction: f64) -> Vec<usize> {
    let hop = (segment_length - (overlap_fraction * segment_length as f64).floor() as usize).max(1);
    (0..)
        .step_by(hop)
        .take_while(|start| start + segment_length <= n)
        .collect()
}

/// Segment-averaged fractional bispectrum: splits the signal per the
/// configuration, detrends then windows each segment, computes the
/// per-segment fractional bispectrum, and returns the arithmetic mean grid.
///
/// With `interp = exact_rational` the configured (p, q) pair must agree
/// with `k`; nearest/linear modes accept any finite k.
pub fn averaged_fractional_bispectrum(
    signal: &Signal,
    k: f64,
    cfg: &EstimatorConfig,
    grid_extent: usize,
) -> Result<BifrequencyGrid> {
    cfg.validate()?;
    if !k.is_finite() {
        return Err(invalid(format!(
            "fractional parameter k must be finite, got {k}"
        )));
    }
    let n = signal.len();
    let seg_len = if cfg.segment_length == 0 {
        n
    } else {
        cfg.segment_length
    };
    if seg_len > n {
        return Err(invalid(format!(
            "signal of length {n} is shorter than one segment of length {seg_len}"
        )));
    }
    check_grid_domain(seg_len, grid_extent)?;
    if cfg.interp == InterpMode::ExactRational {
        let (p, q) = cfg.rational_k.expect("validated above");
        let rk = p as f64 / q as f64;
        if (k - rk).abs() > 1e-9 * k.abs().max(1.0) {
            return Err(config(format!(
                "k = {k} disagrees with configured rational {p}/{q}"
            )));
        }
    }

    let starts = if cfg.segment_length == 0 {
        vec![0]
    } else {
        segment_starts(n, seg_len, cfg.overlap_fraction)
    };
    debug_assert!(!starts.is_empty());
    let taper = cfg.window.coefficients(seg_len);

    let mut sum: Array2<Complex64> = Array2::default((grid_extent, grid_extent));
    let mut bin_resolution = 0.0;
    for &start in &starts {
        let seg = &signal.samples()[start..start + seg_len];
        let mean = match cfg.detrend {
            DetrendKind::None => 0.0,
            DetrendKind::RemoveMean => seg.iter().sum::<f64>() / seg_len as f64,
        };
        let prepared: Vec<f64> = seg
            .iter()
            .zip(&taper)
            .map(|(&x, &w)| (x - mean) * w)
            .collect();
        let seg_signal = Signal::new(prepared, signal.sample_rate())?;

        let grid = match cfg.interp {
            InterpMode::ExactRational => {
                let (p, q) = cfg.rational_k.expect("validated above");
                fractional_bispectrum_exact_rational(&seg_signal, p, q, grid_extent)?
            }
            mode => {
                let spec = dft_forward(&seg_signal);
                fractional_bispectrum_direct(&spec, k, grid_extent, mode)?
            }
        };
        bin_resolution = grid.bin_resolution;
        sum += &grid.values;
    }

    let count = starts.len();
    let scale = 1.0 / count as f64;
    Ok(BifrequencyGrid {
        values: sum.mapv(|c| c * scale),
        k,
        bin_resolution,
        estimator: cfg.clone(),
        segments_averaged: count,
    })
}
