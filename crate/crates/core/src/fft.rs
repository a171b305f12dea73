//! Thin wrappers over rustfft with this crate's conventions: the forward
//! transform is the unnormalized sum `X(m) = sum_t x(t) exp(-i 2 pi m t / N)`
//! and the inverse is its unnormalized conjugate (callers scale by 1/N).

use ndarray::Array2;
use num_complex::Complex64;
use rustfft::FftPlanner;

pub(crate) fn forward_in_place(buf: &mut [Complex64]) {
    FftPlanner::new().plan_fft_forward(buf.len()).process(buf);
}

pub(crate) fn inverse_in_place(buf: &mut [Complex64]) {
    FftPlanner::new().plan_fft_inverse(buf.len()).process(buf);
}

/// Unnormalized forward DFT of a real sequence.
pub(crate) fn forward_real(samples: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    forward_in_place(&mut buf);
    buf
}

/// Unnormalized 2D forward DFT over both axes of a real matrix. Row index
/// pairs with the first output frequency, column index with the second.
pub(crate) fn forward_2d_real(values: &Array2<f64>) -> Array2<Complex64> {
    let (rows, cols) = values.dim();
    let mut out = values.mapv(|x| Complex64::new(x, 0.0));

    let row_fft = FftPlanner::new().plan_fft_forward(cols);
    let mut scratch = vec![Complex64::default(); cols.max(rows)];
    for mut row in out.rows_mut() {
        scratch[..cols].copy_from_slice(row.as_slice().expect("contiguous row"));
        row_fft.process(&mut scratch[..cols]);
        row.as_slice_mut()
            .unwrap()
            .copy_from_slice(&scratch[..cols]);
    }

    let col_fft = FftPlanner::new().plan_fft_forward(rows);
    for j in 0..cols {
        for i in 0..rows {
            scratch[i] = out[[i, j]];
        }
        col_fft.process(&mut scratch[..rows]);
        for i in 0..rows {
            out[[i, j]] = scratch[i];
        }
    }
    out
}
