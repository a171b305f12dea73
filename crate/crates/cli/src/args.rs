//! Shared flag types and value parsers.

use clap::ValueEnum;
use fracspec_core::{DetrendKind, InterpMode, ToneSpec, WindowKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowArg {
    Rect,
    Hann,
}

impl From<WindowArg> for WindowKind {
    fn from(w: WindowArg) -> Self {
        match w {
            WindowArg::Rect => WindowKind::Rectangular,
            WindowArg::Hann => WindowKind::Hann,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InterpArg {
    Nearest,
    Linear,
}

impl From<InterpArg> for InterpMode {
    fn from(i: InterpArg) -> Self {
        match i {
            InterpArg::Nearest => InterpMode::Nearest,
            InterpArg::Linear => InterpMode::Linear,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetrendArg {
    None,
    Mean,
}

impl From<DetrendArg> for DetrendKind {
    fn from(d: DetrendArg) -> Self {
        match d {
            DetrendArg::None => DetrendKind::None,
            DetrendArg::Mean => DetrendKind::RemoveMean,
        }
    }
}

/// `f[:amp[:phase]]`, amplitude defaulting to 1 and phase to 0.
pub fn parse_tone(text: &str) -> Result<ToneSpec, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.is_empty() || parts.len() > 3 {
        return Err(format!("expected freq[:amp[:phase]], got `{text}`"));
    }
    let field = |i: usize, name: &str, default: f64| -> Result<f64, String> {
        match parts.get(i) {
            None => Ok(default),
            Some(s) => s
                .trim()
                .parse()
                .map_err(|e| format!("bad {name} in `{text}`: {e}")),
        }
    };
    Ok(ToneSpec {
        frequency: field(0, "frequency", 0.0)?,
        amplitude: field(1, "amplitude", 1.0)?,
        phase: field(2, "phase", 0.0)?,
    })
}

/// `lo:hi` band edges in hertz.
pub fn parse_band(text: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{text}`"))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad band edge `{lo}`: {e}"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad band edge `{hi}`: {e}"))?;
    Ok((lo, hi))
}

/// `p/q` in lowest terms, q positive.
pub fn parse_rational(text: &str) -> Result<(i64, u64), String> {
    let (p, q) = text
        .split_once('/')
        .ok_or_else(|| format!("expected p/q, got `{text}`"))?;
    let p: i64 = p
        .trim()
        .parse()
        .map_err(|e| format!("bad numerator `{p}`: {e}"))?;
    let q: u64 = q
        .trim()
        .parse()
        .map_err(|e| format!("bad denominator `{q}`: {e}"))?;
    Ok((p, q))
}

/// Comma-separated strictly increasing positive integers.
pub fn parse_counts(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad segment count `{s}`: {e}"))
        })
        .collect()
}
