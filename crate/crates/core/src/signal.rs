//! Real-valued, uniformly sampled signals.
//!
//! All estimators in this crate adopt a circular convention: a length-N
//! record is treated as one period of an N-periodic sequence, so every
//! lagged or shifted index is reduced modulo N. This keeps the discrete
//! transform identities exact on finite data instead of asymptotic.

use crate::error::{invalid, Result};

/// A real, uniformly sampled signal.
///
/// Invariants enforced at construction: at least one sample, all samples
/// finite, sample rate finite and strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
    sample_rate: f64,
}

impl Signal {
    pub fn new(samples: Vec<f64>, sample_rate: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(invalid("signal must contain at least one sample"));
        }
        if let Some(i) = samples.iter().position(|x| !x.is_finite()) {
            return Err(invalid(format!("non-finite sample at index {i}")));
        }
        if !sample_rate.is_finite() || sample_rate <= 0.0 {
            return Err(invalid(format!(
                "sample rate must be finite and positive, got {sample_rate}"
            )));
        }
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    /// All-zero signal of length `n`.
    pub fn zeros(n: usize, sample_rate: f64) -> Result<Self> {
        Self::new(vec![0.0; n], sample_rate)
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// Elementwise sum. Lengths and sample rates must match.
    pub fn add(&self, other: &Signal) -> Result<Signal> {
        if self.len() != other.len() {
            return Err(invalid(format!(
                "length mismatch in add: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        if self.sample_rate != other.sample_rate {
            return Err(invalid(format!(
                "sample rate mismatch in add: {} vs {}",
                self.sample_rate, other.sample_rate
            )));
        }
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a + b)
            .collect();
        Signal::new(samples, self.sample_rate)
    }

    /// Scalar product. The factor must be finite.
    pub fn scale(&self, c: f64) -> Result<Signal> {
        if !c.is_finite() {
            return Err(invalid(format!("scale factor must be finite, got {c}")));
        }
        Signal::new(
            self.samples.iter().map(|x| x * c).collect(),
            self.sample_rate,
        )
    }

    /// Circular delay by `shift` samples: output(t) = input((t - shift) mod N).
    pub fn circular_shift(&self, shift: i64) -> Signal {
        let n = self.len() as i64;
        let samples = (0..n)
            .map(|t| self.samples[(t - shift).rem_euclid(n) as usize])
            .collect();
        Signal {
            samples,
            sample_rate: self.sample_rate,
        }
    }

    /// Sample mean.
    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.len() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(Signal::new(vec![], 1.0).is_err());
        assert!(Signal::new(vec![0.0, f64::NAN], 1.0).is_err());
        assert!(Signal::new(vec![0.0, f64::INFINITY], 1.0).is_err());
    }

    #[test]
    fn rejects_bad_sample_rate() {
        assert!(Signal::new(vec![1.0], 0.0).is_err());
        assert!(Signal::new(vec![1.0], -4.0).is_err());
        assert!(Signal::new(vec![1.0], f64::NAN).is_err());
    }

    #[test]
    fn add_requires_matching_shape() {
        let a = Signal::new(vec![1.0, 2.0], 4.0).unwrap();
        let b = Signal::new(vec![1.0, 2.0, 3.0], 4.0).unwrap();
        let c = Signal::new(vec![1.0, 2.0], 8.0).unwrap();
        assert!(a.add(&b).is_err());
        assert!(a.add(&c).is_err());
        let z = Signal::zeros(2, 4.0).unwrap();
        assert_eq!(a.add(&z).unwrap(), a);
    }

    #[test]
    fn scale_by_zero_gives_zero_signal() {
        let a = Signal::new(vec![1.0, -2.0, 3.5], 1.0).unwrap();
        assert_eq!(a.scale(0.0).unwrap(), Signal::zeros(3, 1.0).unwrap());
        assert!(a.scale(f64::NAN).is_err());
    }

    #[test]
    fn shift_is_circular_delay() {
        let a = Signal::new(vec![1.0, 2.0, 3.0, 4.0], 1.0).unwrap();
        let s = a.circular_shift(1);
        assert_eq!(s.samples(), &[4.0, 1.0, 2.0, 3.0]);
        let back = s.circular_shift(-1);
        assert_eq!(back, a);
        assert_eq!(a.circular_shift(4), a);
    }
}
