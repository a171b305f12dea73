//! Deterministic, seedable synthetic-signal factory: tone combinations,
//! quadratically phase-coupled triples, white Gaussian noise, and
//! band-limited noise.
//!
//! Reproducibility contract: every generator is a pure function of its
//! full argument list including the seed. Noise uses the ChaCha8 stream
//! cipher keyed by a 64-bit seed, with normal variates drawn through the
//! ziggurat sampler, so a given seed yields the same samples on every
//! platform. Monte Carlo code derives per-trial seeds with [`trial_seed`]
//! instead of consuming one long stream, which lets paired experiments
//! reuse identical noise shapes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{config, Result};
use crate::fft;
use crate::signal::Signal;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One cosine component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToneSpec {
    /// Hertz; must sit strictly below the Nyquist frequency at generation.
    pub frequency: f64,
    pub amplitude: f64,
    /// Radians.
    pub phase: f64,
}

/// White Gaussian noise parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    /// Standard deviation; 0 produces the zero signal.
    pub sigma: f64,
    pub seed: u64,
}

fn check_tone(frequency: f64, sample_rate: f64) -> Result<()> {
    if !frequency.is_finite() || frequency < 0.0 {
        return Err(config(format!(
            "tone frequency must be finite and nonnegative, got {frequency}"
        )));
    }
    if frequency >= sample_rate / 2.0 {
        return Err(config(format!(
            "tone frequency {frequency} Hz is at or above Nyquist ({} Hz)",
            sample_rate / 2.0
        )));
    }
    Ok(())
}

/// Sum of cosines: samples(t) = sum_j A_j cos(2 pi f_j t / fs + phi_j).
/// An empty tone list yields the zero signal.
pub fn multi_tone(tones: &[ToneSpec], n: usize, sample_rate: f64) -> Result<Signal> {
    for tone in tones {
        check_tone(tone.frequency, sample_rate)?;
        if !tone.amplitude.is_finite() || !tone.phase.is_finite() {
            return Err(config("tone amplitude and phase must be finite"));
        }
    }
    let mut samples = vec![0.0; n];
    for tone in tones {
        let w = 2.0 * std::f64::consts::PI * tone.frequency / sample_rate;
        for (t, s) in samples.iter_mut().enumerate() {
            *s += tone.amplitude * (w * t as f64 + tone.phase).cos();
        }
    }
    Signal::new(samples, sample_rate)
}

/// Three unit tones at f1, f2 and f1+f2 with the third phase equal to the
/// sum of the first two (quadratic phase coupling), so the bispectrum at
/// (f1, f2) is real and positive.
pub fn coupled_triple(
    f1: f64,
    f2: f64,
    n: usize,
    sample_rate: f64,
    phases: (f64, f64),
) -> Result<Signal> {
    check_tone(f1 + f2, sample_rate)?;
    multi_tone(
        &[
            ToneSpec {
                frequency: f1,
                amplitude: 1.0,
                phase: phases.0,
            },
            ToneSpec {
                frequency: f2,
                amplitude: 1.0,
                phase: phases.1,
            },
            ToneSpec {
                frequency: f1 + f2,
                amplitude: 1.0,
                phase: phases.0 + phases.1,
            },
        ],
        n,
        sample_rate,
    )
}

/// Independent N(0, sigma^2) draws from a ChaCha8 stream keyed by the seed.
pub fn gaussian_noise(spec: &NoiseSpec, n: usize, sample_rate: f64) -> Result<Signal> {
    if !spec.sigma.is_finite() || spec.sigma < 0.0 {
        return Err(config(format!(
            "noise sigma must be finite and nonnegative, got {}",
            spec.sigma
        )));
    }
    if spec.sigma == 0.0 {
        return Signal::zeros(n, sample_rate);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let samples = (0..n)
        .map(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            z * spec.sigma
        })
        .collect();
    Signal::new(samples, sample_rate)
}

/// White Gaussian noise hard-masked in the frequency domain to bins whose
/// frequency lies in [low, high] hertz (mirror bins included), then
/// transformed back. Band edges are exact; there is no transition band.
pub fn bandpass_noise(
    low: f64,
    high: f64,
    spec: &NoiseSpec,
    n: usize,
    sample_rate: f64,
) -> Result<Signal> {
    if !(low.is_finite() && high.is_finite()) || low <= 0.0 || high <= low {
        return Err(config(format!(
            "band edges must satisfy 0 < low < high, got [{low}, {high}]"
        )));
    }
    if high >= sample_rate / 2.0 {
        return Err(config(format!(
            "band edge {high} Hz is at or above Nyquist ({} Hz)",
            sample_rate / 2.0
        )));
    }
    let white = gaussian_noise(spec, n, sample_rate)?;
    let mut buf: Vec<Complex64> = fft::forward_real(white.samples());
    for (m, c) in buf.iter_mut().enumerate() {
        let cycles = m.min(n - m) as f64; // magnitude of the signed frequency
        let freq = cycles * sample_rate / n as f64;
        if !(low..=high).contains(&freq) {
            *c = Complex64::default();
        }
    }
    fft::inverse_in_place(&mut buf);
    let scale = 1.0 / n as f64;
    let peak = buf.iter().map(|c| c.re.abs()).fold(0.0, f64::max) * scale;
    let residue = buf.iter().map(|c| c.im.abs()).fold(0.0, f64::max) * scale;
    if residue >= 1e-12 * (1.0 + peak) {
        return Err(crate::error::Error::InvalidInput(format!(
            "bandpass synthesis left imaginary residue {residue:e}"
        )));
    }
    Signal::new(buf.into_iter().map(|c| c.re * scale).collect(), sample_rate)
}

const MIX_TRIAL: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX_BATCH: u64 = 0xD1B5_4A32_D192_ED03;

fn splitmix_finalize(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic per-stream seed: two SplitMix64 finalizer rounds over the
/// base seed offset by the trial and batch indices. Trials and batches get
/// independent streams while paired experiments that share (seed, trial,
/// batch) see identical noise.
pub fn trial_seed(base_seed: u64, trial: u64, batch: u64) -> u64 {
    let a =
        splitmix_finalize(base_seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(MIX_TRIAL)));
    splitmix_finalize(a.wrapping_add(batch.wrapping_add(1).wrapping_mul(MIX_BATCH)))
}
