//! Frequency-domain representation of a signal and evaluation of the
//! spectrum at fractional bin indices.
//!
//! The forward transform is unnormalized (no 1/N factor), which keeps
//! triple-product magnitudes integral in hand-checkable examples: a unit
//! cosine on integer bin b of an N-point record has |X(b)| = N/2.

use num_complex::Complex64;

use crate::config::InterpMode;
use crate::error::{config, invalid, Result};
use crate::fft;
use crate::signal::Signal;

/// DFT coefficients of one signal or segment.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    coefficients: Vec<Complex64>,
    origin_length: usize,
    sample_rate: f64,
}

/// Unnormalized forward DFT: bin m = sum_t x(t) exp(-i 2 pi m t / N).
///
/// Input validity (finite samples, positive rate) is enforced by
/// [`Signal`] construction, so this cannot fail.
pub fn dft_forward(signal: &Signal) -> Spectrum {
    Spectrum {
        coefficients: fft::forward_real(signal.samples()),
        origin_length: signal.len(),
        sample_rate: signal.sample_rate(),
    }
}

/// Spectrum of the signal zero-padded in time to length q*N: samples the
/// same underlying trigonometric sum on a grid with 1/q-bin spacing, so
/// bin m of the result evaluates the spectrum at original-bin index m/q.
pub fn fine_spectrum(signal: &Signal, q: u64) -> Result<Spectrum> {
    if q == 0 {
        return Err(config("upsampling factor q must be positive"));
    }
    let n = signal.len();
    let fine_len = n
        .checked_mul(q as usize)
        .ok_or_else(|| config("q * N overflows"))?;
    let mut buf = vec![Complex64::default(); fine_len];
    for (t, &x) in signal.samples().iter().enumerate() {
        buf[t] = Complex64::new(x, 0.0);
    }
    fft::forward_in_place(&mut buf);
    Ok(Spectrum {
        coefficients: buf,
        origin_length: fine_len,
        sample_rate: signal.sample_rate(),
    })
}

impl Spectrum {
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.origin_length
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    /// Hertz per bin.
    pub fn bin_resolution(&self) -> f64 {
        self.sample_rate / self.origin_length as f64
    }

    /// Coefficient at an integer bin, reduced modulo N.
    pub fn coefficient(&self, bin: i64) -> Complex64 {
        let n = self.origin_length as i64;
        self.coefficients[bin.rem_euclid(n) as usize]
    }

    /// Evaluates the N-periodic extension of the coefficient sequence at a
    /// (possibly fractional, possibly negative) index.
    ///
    /// The index is reduced modulo N first. Integer indices return the
    /// stored coefficient exactly in both modes; `Nearest` rounds half
    /// away from zero, `Linear` blends the two adjacent bins.
    pub fn value_at(&self, index: f64, interp: InterpMode) -> Result<Complex64> {
        if !index.is_finite() {
            return Err(invalid(format!("non-finite spectrum index {index}")));
        }
        let n = self.coefficients.len();
        let n_f = n as f64;
        let mut r = index.rem_euclid(n_f);
        // rem_euclid of a tiny negative index can round up to exactly N.
        if r >= n_f {
            r -= n_f;
        }
        match interp {
            InterpMode::Nearest => {
                let mut j = r.round() as usize;
                if j == n {
                    j = 0;
                }
                Ok(self.coefficients[j])
            }
            InterpMode::Linear => {
                let i0 = r.floor() as usize;
                let frac = r - i0 as f64;
                if frac == 0.0 {
                    return Ok(self.coefficients[i0]);
                }
                let a = self.coefficients[i0 % n];
                let b = self.coefficients[(i0 + 1) % n];
                Ok(a * (1.0 - frac) + b * frac)
            }
            InterpMode::ExactRational => Err(config(
                "value_at supports nearest or linear; exact rational evaluation \
                 is performed by the rational estimators",
            )),
        }
    }

    /// Max absolute deviation from conjugate symmetry c(N-m) = conj(c(m)).
    /// Zero (to rounding) for spectra of real signals.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.coefficients.len();
        (1..n)
            .map(|m| (self.coefficients[n - m] - self.coefficients[m].conj()).norm())
            .fold(0.0, f64::max)
    }
}

/// Band-limited q-fold upsampling: the length q*N sequence sampling the
/// circular trigonometric interpolant of `signal` at steps of 1/q sample.
///
/// Built by splitting the spectrum at the Nyquist bin (half weight to each
/// of +/- N/2 for even N), zero-padding the middle, and inverse
/// transforming; entries at multiples of q reproduce the input samples to
/// rounding accuracy, and for q = 1 this is the identity.
pub(crate) fn upsample_bandlimited(signal: &Signal, q: u64) -> Result<Vec<f64>> {
    if q == 0 {
        return Err(config("upsampling factor q must be positive"));
    }
    if q == 1 {
        return Ok(signal.samples().to_vec());
    }
    let n = signal.len();
    let fine_len = n
        .checked_mul(q as usize)
        .ok_or_else(|| config("q * N overflows"))?;
    let spec = fft::forward_real(signal.samples());

    let mut buf = vec![Complex64::default(); fine_len];
    let half = n / 2;
    for (m, &c) in spec.iter().enumerate() {
        if n.is_multiple_of(2) && m == half {
            let split = c * 0.5;
            buf[half] = split;
            buf[fine_len - half] = split;
        } else if m <= half {
            buf[m] = c;
        } else {
            buf[fine_len - (n - m)] = c;
        }
    }
    fft::inverse_in_place(&mut buf);

    let scale = 1.0 / n as f64;
    let peak = buf.iter().map(|c| c.re.abs()).fold(0.0, f64::max) * scale;
    let residue = buf.iter().map(|c| c.im.abs()).fold(0.0, f64::max) * scale;
    if residue > 1e-9 * (1.0 + peak) {
        return Err(invalid(format!(
            "upsampled sequence has non-negligible imaginary residue {residue:e}"
        )));
    }
    Ok(buf.into_iter().map(|c| c.re * scale).collect())
}
