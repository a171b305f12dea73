//! Peak statistics over bifrequency grids and the k-scan that locates the
//! fractional parameter at which coupling appears.
//!
//! The detection statistic is contrast: peak magnitude over the median
//! magnitude of the searched region. Both numerator and denominator scale
//! cubically with signal amplitude, so contrast is scale-free, and the
//! median is robust against the peak itself. The DC row and column are
//! excluded by default (margin 1) because |X(0)|-driven values say nothing
//! about zero-mean structure and dominate after windowing.
//!
//! Noiseless grids need care: cells that are zero in exact arithmetic
//! carry transform rounding dust in floats, and ratios of dust are
//! meaningless. Contrast therefore saturates at [`CONTRAST_SATURATION`]
//! once the background falls below the rounding floor of the peak, and
//! the k scan ranks an entry as a zero grid when its peak value is dust
//! relative to the scan-wide maximum. Both thresholds reproduce the
//! exact-arithmetic outcome, where such grids tie or vanish exactly.

use serde::{Deserialize, Serialize};

use crate::bispectrum::{averaged_fractional_bispectrum, BifrequencyGrid};
use crate::config::EstimatorConfig;
use crate::error::{config, invalid, Result};
use crate::signal::Signal;

/// Guard against division by an identically zero background.
const CONTRAST_EPSILON: f64 = 1e-300;

/// Contrast reported when the background is numerical dust. A median
/// background below `value * 1e-15` is zero in exact arithmetic (for
/// example the off-peak cells of a noiseless integer-bin tone grid), and
/// the would-be ratio is a rounding lottery; pinning it to one shared
/// constant turns such grids into exact ties instead.
pub const CONTRAST_SATURATION: f64 = 1e15;

/// Relative rounding floor below which a background counts as dust.
const BACKGROUND_DUST_REL: f64 = 1e-15;

/// Scan entries whose peak value falls below this fraction of the largest
/// peak value in the scan are treated as exact-arithmetic zero grids when
/// ranking: their value is transform rounding noise, not structure.
const SCAN_VALUE_FLOOR_REL: f64 = 1e-9;

/// Peak contrast must exceed this multiple of the median contrast across
/// the scanned k values before a scan is reported as a detection. A real
/// coupling lights up only the matching k; spectra without one produce
/// comparable contrast at every k.
pub const DETECTION_CONTRAST_FACTOR: f64 = 10.0;

/// Largest-magnitude cell of a searched grid region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeakReport {
    /// Peak magnitude.
    pub value: f64,
    /// Bin pair (u, v) of the peak; lexicographically smallest on ties.
    pub location: (usize, usize),
    /// Median magnitude over the searched region.
    pub background: f64,
    /// value / max(background, 1e-300), saturated at
    /// [`CONTRAST_SATURATION`] when the background is rounding dust
    /// relative to the peak.
    pub contrast: f64,
}

/// Searches the region u, v >= margin for the largest |F(u, v)|.
///
/// Ties resolve to the lexicographically smallest (u, v). The grid must be
/// larger than twice the margin in each dimension.
pub fn peak_statistic(grid: &BifrequencyGrid, exclude_axes: usize) -> Result<PeakReport> {
    let (rows, cols) = grid.values.dim();
    let margin = exclude_axes;
    if rows <= 2 * margin || cols <= 2 * margin {
        return Err(config(format!(
            "search region is empty: grid {rows}x{cols} with margin {margin}"
        )));
    }

    let mut value = f64::NEG_INFINITY;
    let mut location = (margin, margin);
    let mut magnitudes = Vec::with_capacity((rows - margin) * (cols - margin));
    for u in margin..rows {
        for v in margin..cols {
            let m = grid.values[[u, v]].norm();
            magnitudes.push(m);
            if m > value {
                value = m;
                location = (u, v);
            }
        }
    }

    let background = median(&mut magnitudes);
    let contrast = if value == 0.0 {
        0.0
    } else if background <= value * BACKGROUND_DUST_REL {
        CONTRAST_SATURATION
    } else {
        value / background.max(CONTRAST_EPSILON)
    };

    Ok(PeakReport {
        value,
        location,
        background,
        contrast,
    })
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

/// Peak report for one scanned k value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KScanEntry {
    pub k: f64,
    pub peak: PeakReport,
}

/// Result of scanning the fractional parameter over a set of candidates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KScanResult {
    /// One entry per requested k, in request order.
    pub entries: Vec<KScanEntry>,
    /// The contrast-maximizing k; ties break toward smaller k, then the
    /// lexicographically smaller peak location.
    pub best_k: f64,
    pub best_peak: PeakReport,
    /// Hertz per bin of the scanned grids.
    pub bin_resolution: f64,
}

/// Computes the averaged fractional bispectrum at every candidate k and
/// reports the contrast-maximizing one. Deterministic for fixed inputs;
/// permutation of `k_values` changes only entry order, never `best_k`.
pub fn k_scan(
    signal: &Signal,
    k_values: &[f64],
    cfg: &EstimatorConfig,
    grid_extent: usize,
) -> Result<KScanResult> {
    if k_values.is_empty() {
        return Err(config("k scan requires at least one candidate k"));
    }
    if let Some(bad) = k_values.iter().find(|k| !k.is_finite()) {
        return Err(invalid(format!("non-finite candidate k = {bad}")));
    }

    let mut entries = Vec::with_capacity(k_values.len());
    let mut bin_resolution = 0.0;
    for &k in k_values {
        let grid = averaged_fractional_bispectrum(signal, k, cfg, grid_extent)?;
        bin_resolution = grid.bin_resolution;
        entries.push(KScanEntry {
            k,
            peak: peak_statistic(&grid, 1)?,
        });
    }

    let ranking = effective_contrasts(&entries);
    let mut best = 0;
    for i in 1..entries.len() {
        let (e, b) = (&entries[i], &entries[best]);
        let better = ranking[i] > ranking[best]
            || (ranking[i] == ranking[best]
                && (e.k < b.k || (e.k == b.k && e.peak.location < b.peak.location)));
        if better {
            best = i;
        }
    }
    let best_k = entries[best].k;
    let best_peak = entries[best].peak.clone();

    Ok(KScanResult {
        entries,
        best_k,
        best_peak,
        bin_resolution,
    })
}

/// Contrast used for ranking and detection decisions: entries whose peak
/// value is rounding noise next to the scan-wide maximum count as zero
/// grids, whatever ratio their own dust happens to produce.
fn effective_contrasts(entries: &[KScanEntry]) -> Vec<f64> {
    let value_peak = entries.iter().map(|e| e.peak.value).fold(0.0, f64::max);
    entries
        .iter()
        .map(|e| {
            if e.peak.value < value_peak * SCAN_VALUE_FLOOR_REL {
                0.0
            } else {
                e.peak.contrast
            }
        })
        .collect()
}

/// Frequency-ratio estimate derived from a k scan over an arithmetic grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioEstimate {
    /// Contrast-maximizing k.
    pub k_star: f64,
    /// Peak u coordinate in hertz.
    pub f1_hz: f64,
    /// Third-factor frequency (u + k*v) * bin_resolution; under the
    /// diagonal-peak interpretation (u = v) this is f1 * (1 + k_star),
    /// the implied second component.
    pub f2_implied_hz: f64,
    /// True when the best contrast stands out from the scan background
    /// (see [`DETECTION_CONTRAST_FACTOR`]).
    pub detected: bool,
    pub scan: KScanResult,
}

/// Scans k over `low, low + step, ...` up to `high` (inclusive) and
/// converts the winning peak to frequencies.
///
/// The grid extent is half the per-segment transform length. A scan whose
/// best contrast does not exceed [`DETECTION_CONTRAST_FACTOR`] times the
/// median contrast across candidates is flagged `detected = false`; with
/// fewer than three candidates the flag is unreliable.
pub fn estimate_frequency_ratio(
    signal: &Signal,
    k_range: (f64, f64, f64),
    cfg: &EstimatorConfig,
) -> Result<RatioEstimate> {
    estimate_frequency_ratio_with_extent(signal, k_range, cfg, None)
}

/// [`estimate_frequency_ratio`] with an explicit grid extent instead of
/// the half-transform default.
pub fn estimate_frequency_ratio_with_extent(
    signal: &Signal,
    k_range: (f64, f64, f64),
    cfg: &EstimatorConfig,
    grid_extent: Option<usize>,
) -> Result<RatioEstimate> {
    let (low, high, step) = k_range;
    if !(low.is_finite() && high.is_finite() && step.is_finite()) || low >= high || step <= 0.0 {
        return Err(config(format!(
            "k range must satisfy low < high with positive step, got ({low}, {high}, {step})"
        )));
    }
    if (high - low) / step > 1e6 {
        return Err(config(format!(
            "k range ({low}, {high}, {step}) would evaluate over a million candidates"
        )));
    }
    let mut ks = Vec::new();
    let mut i = 0u32;
    loop {
        let k = low + f64::from(i) * step;
        if k > high + step * 1e-9 {
            break;
        }
        ks.push(k);
        i += 1;
    }

    let seg_len = if cfg.segment_length == 0 {
        signal.len()
    } else {
        cfg.segment_length
    };
    let extent = grid_extent.unwrap_or(seg_len / 2);
    let scan = k_scan(signal, &ks, cfg, extent)?;

    let mut contrasts = effective_contrasts(&scan.entries);
    let median_contrast = median(&mut contrasts);
    let detected = scan.best_peak.contrast > DETECTION_CONTRAST_FACTOR * median_contrast;

    let (u, v) = scan.best_peak.location;
    let f1_hz = u as f64 * scan.bin_resolution;
    let f2_implied_hz = (u as f64 + scan.best_k * v as f64) * scan.bin_resolution;
    Ok(RatioEstimate {
        k_star: scan.best_k,
        f1_hz,
        f2_implied_hz,
        detected,
        scan,
    })
}
