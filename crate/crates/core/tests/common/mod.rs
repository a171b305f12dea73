//! Independent oracles for the estimator tests: direct O(N^2) transform
//! sums evaluated term by term, sharing no code with the library's FFT
//! path.
//!
//! Shared by several test targets; each uses a subset.
#![allow(dead_code)]

use fracspec_core::Complex64;
use ndarray::Array2;

/// Direct evaluation of the unnormalized transform sum at a (possibly
/// fractional) bin index f: sum_t x(t) exp(-i 2 pi f t / N).
pub fn naive_dft_at(x: &[f64], f: f64) -> Complex64 {
    let n = x.len() as f64;
    x.iter()
        .enumerate()
        .map(|(t, &v)| {
            let angle = -2.0 * std::f64::consts::PI * f * t as f64 / n;
            Complex64::new(v * angle.cos(), v * angle.sin())
        })
        .sum()
}

/// Direct evaluation of all N integer bins.
pub fn naive_dft(x: &[f64]) -> Vec<Complex64> {
    (0..x.len()).map(|m| naive_dft_at(x, m as f64)).collect()
}

/// Brute-force fractional triple product X(u) X(v) conj(X(u + k v)) with
/// every factor evaluated by the direct sum.
pub fn naive_triple_product(x: &[f64], u: f64, v: f64, k: f64) -> Complex64 {
    naive_dft_at(x, u) * naive_dft_at(x, v) * naive_dft_at(x, u + k * v).conj()
}

/// Direct 2D inverse transform (1/N^2 normalization) of a complex grid.
pub fn naive_inverse_dft2(grid: &Array2<Complex64>) -> Array2<Complex64> {
    let (rows, cols) = grid.dim();
    let mut out = Array2::default((rows, cols));
    for rho in 0..rows {
        for tau in 0..cols {
            let mut sum = Complex64::default();
            for u in 0..rows {
                for v in 0..cols {
                    let angle = 2.0
                        * std::f64::consts::PI
                        * (u as f64 * rho as f64 / rows as f64
                            + v as f64 * tau as f64 / cols as f64);
                    sum += grid[[u, v]] * Complex64::new(angle.cos(), angle.sin());
                }
            }
            out[[rho, tau]] = sum / (rows as f64 * cols as f64);
        }
    }
    out
}

/// Largest cell magnitude.
pub fn grid_peak(grid: &Array2<Complex64>) -> f64 {
    grid.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Maximum cellwise difference normalized by the larger grid peak.
pub fn max_rel_to_peak(a: &Array2<Complex64>, b: &Array2<Complex64>) -> f64 {
    assert_eq!(a.dim(), b.dim());
    let peak = grid_peak(a).max(grid_peak(b));
    if peak == 0.0 {
        return 0.0;
    }
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
        / peak
}
