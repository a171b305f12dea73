//! `fracspec noisestudy`: Monte Carlo suppression curves. Without tones
//! the study measures the decay of the pure-noise estimate with segment
//! count; with tones it tracks the peak contrast of a contaminated signal.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use fracspec_core::{
    contaminated_signal_study, gaussian_null_study, CurvePoint, StudyConfig, SuppressionCurve,
    ToneSpec,
};
use serde::{Deserialize, Serialize};

use crate::args::{parse_counts, parse_tone};
use crate::fail::{usage, CliResult};
use crate::formats::{load_config_file, to_json, write_atomic};

#[derive(Debug, Args)]
pub struct NoiseStudyArgs {
    /// JSON file supplying any flag of this command by name; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Base seed for the trial streams.
    #[arg(long)]
    seed: Option<u64>,
    /// Independent noise records per segment count.
    #[arg(long)]
    trials: Option<usize>,
    /// Strictly increasing segment counts, comma separated (e.g. 4,16,64).
    #[arg(long)]
    segcounts: Option<String>,
    /// Samples per segment (power of two).
    #[arg(long)]
    seglen: Option<usize>,
    /// Noise standard deviation.
    #[arg(long)]
    sigma: Option<f64>,
    /// Fractional parameter of the estimator.
    #[arg(long)]
    k: Option<f64>,
    /// Deterministic tone as freq[:amp[:phase]] (hertz, fs = seglen);
    /// repeatable. Present: contaminated study; absent: pure-noise study.
    #[arg(long = "tone", value_parser = parse_tone)]
    tone: Vec<ToneSpec>,
    /// Grid extent in bins.
    #[arg(long)]
    extent: Option<usize>,
    /// Write the curve as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the curve as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct NoiseStudyFile {
    seed: Option<u64>,
    trials: Option<usize>,
    segcounts: Option<String>,
    seglen: Option<usize>,
    sigma: Option<f64>,
    k: Option<f64>,
    tone: Vec<String>,
    extent: Option<usize>,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct StudyReport<'a> {
    format: &'static str,
    mode: &'static str,
    config: &'a StudyConfig,
    points: &'a [CurvePoint],
    slope_estimate: Option<f64>,
}

fn curve_csv(curve: &SuppressionCurve) -> String {
    let mut out = String::from("segments,mean_abs,peak_contrast\n");
    for p in &curve.points {
        let _ = writeln!(
            out,
            "{},{:.17e},{:.17e}",
            p.segments, p.mean_abs, p.peak_contrast
        );
    }
    out
}

pub fn run(args: NoiseStudyArgs) -> CliResult<u8> {
    let file: NoiseStudyFile = load_config_file(&args.config)?;
    let defaults = StudyConfig::default_null_scenario();
    let segment_counts = match args.segcounts.or(file.segcounts) {
        Some(text) => parse_counts(&text).map_err(usage)?,
        None => defaults.segment_counts.clone(),
    };
    let tones = if args.tone.is_empty() {
        file.tone
            .iter()
            .map(|t| parse_tone(t).map_err(usage))
            .collect::<CliResult<Vec<_>>>()?
    } else {
        args.tone
    };

    let cfg = StudyConfig {
        base_seed: args.seed.or(file.seed).unwrap_or(defaults.base_seed),
        trials: args.trials.or(file.trials).unwrap_or(defaults.trials),
        segment_counts,
        segment_length: args
            .seglen
            .or(file.seglen)
            .unwrap_or(defaults.segment_length),
        sigma: args.sigma.or(file.sigma).unwrap_or(defaults.sigma),
        k: args.k.or(file.k).unwrap_or(defaults.k),
        tones,
        grid_extent: args.extent.or(file.extent).unwrap_or(defaults.grid_extent),
    };

    let (mode, curve) = if cfg.tones.is_empty() {
        ("gaussian_null", gaussian_null_study(&cfg)?)
    } else {
        ("contaminated", contaminated_signal_study(&cfg)?)
    };

    println!(
        "{mode} study: sigma = {}, k = {}, {} trial(s)",
        cfg.sigma, cfg.k, cfg.trials
    );
    for p in &curve.points {
        println!(
            "M = {:>5}: mean |F| = {:.6e}, peak contrast = {:.6e}",
            p.segments, p.mean_abs, p.peak_contrast,
        );
    }
    match curve.slope_estimate {
        Some(s) => println!("log-log slope of mean |F| vs M: {s:.4}"),
        None => println!("log-log slope of mean |F| vs M: n/a"),
    }

    if let Some(out) = args.out.or(file.out) {
        let report = StudyReport {
            format: "fracspec-curve v1",
            mode,
            config: &cfg,
            points: &curve.points,
            slope_estimate: curve.slope_estimate,
        };
        write_atomic(&out, &to_json(&report)?)?;
        println!("wrote {}", out.display());
    }
    if let Some(csv) = args.csv.or(file.csv) {
        write_atomic(&csv, &curve_csv(&curve))?;
        println!("wrote {}", csv.display());
    }
    Ok(0)
}
