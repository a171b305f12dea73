//! `fracspec gen`: synthetic signal files.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use fracspec_core::{
    bandpass_noise, coupled_triple, gaussian_noise, multi_tone, NoiseSpec, Signal, ToneSpec,
};
use serde::Deserialize;

use crate::args::{parse_band, parse_tone};
use crate::fail::{usage, CliResult};
use crate::formats::{load_config_file, write_signal};

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Sum of cosines.
    Tones(TonesArgs),
    /// Quadratically phase-coupled triple at f1, f2, f1+f2.
    Coupled(CoupledArgs),
    /// White Gaussian noise.
    Noise(NoiseArgs),
    /// Gaussian noise masked to a frequency band.
    Bandpass(BandpassArgs),
}

pub fn run(cmd: GenCommand) -> CliResult<u8> {
    let (signal, out) = match cmd {
        GenCommand::Tones(args) => args.build()?,
        GenCommand::Coupled(args) => args.build()?,
        GenCommand::Noise(args) => args.build()?,
        GenCommand::Bandpass(args) => args.build()?,
    };
    emit(&signal, out)
}

fn emit(signal: &Signal, out: Option<PathBuf>) -> CliResult<u8> {
    match out {
        Some(path) => {
            write_signal(&path, signal)?;
            println!(
                "wrote {}: {} samples at {} Hz",
                path.display(),
                signal.len(),
                signal.sample_rate()
            );
        }
        None => {
            print!("{}", crate::formats::signal_text(signal));
        }
    }
    Ok(0)
}

#[derive(Debug, Args)]
pub struct TonesArgs {
    /// JSON file supplying any flag of this command by name; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Number of samples.
    #[arg(long)]
    n: Option<usize>,
    /// Sample rate in hertz.
    #[arg(long)]
    fs: Option<f64>,
    /// Tone as freq[:amp[:phase]]; repeatable.
    #[arg(long = "freq", value_parser = parse_tone)]
    freq: Vec<ToneSpec>,
    /// Output signal file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct TonesFile {
    n: Option<usize>,
    fs: Option<f64>,
    freq: Vec<String>,
    out: Option<PathBuf>,
}

impl TonesArgs {
    fn build(self) -> CliResult<(Signal, Option<PathBuf>)> {
        let file: TonesFile = load_config_file(&self.config)?;
        let n = self.n.or(file.n).ok_or_else(|| usage("--n is required"))?;
        let fs = self.fs.or(file.fs).unwrap_or(1.0);
        let tones = if self.freq.is_empty() {
            file.freq
                .iter()
                .map(|t| parse_tone(t).map_err(usage))
                .collect::<CliResult<Vec<_>>>()?
        } else {
            self.freq
        };
        Ok((multi_tone(&tones, n, fs)?, self.out.or(file.out)))
    }
}

#[derive(Debug, Args)]
pub struct CoupledArgs {
    /// JSON file supplying any flag of this command by name; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// First frequency in hertz.
    #[arg(long)]
    f1: Option<f64>,
    /// Second frequency in hertz; a third tone appears at f1+f2.
    #[arg(long)]
    f2: Option<f64>,
    /// Phase of the first tone in radians.
    #[arg(long)]
    phase1: Option<f64>,
    /// Phase of the second tone in radians.
    #[arg(long)]
    phase2: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    fs: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct CoupledFile {
    f1: Option<f64>,
    f2: Option<f64>,
    phase1: Option<f64>,
    phase2: Option<f64>,
    n: Option<usize>,
    fs: Option<f64>,
    out: Option<PathBuf>,
}

impl CoupledArgs {
    fn build(self) -> CliResult<(Signal, Option<PathBuf>)> {
        let file: CoupledFile = load_config_file(&self.config)?;
        let f1 = self
            .f1
            .or(file.f1)
            .ok_or_else(|| usage("--f1 is required"))?;
        let f2 = self
            .f2
            .or(file.f2)
            .ok_or_else(|| usage("--f2 is required"))?;
        let n = self.n.or(file.n).ok_or_else(|| usage("--n is required"))?;
        let fs = self.fs.or(file.fs).unwrap_or(1.0);
        let phases = (
            self.phase1.or(file.phase1).unwrap_or(0.0),
            self.phase2.or(file.phase2).unwrap_or(0.0),
        );
        Ok((
            coupled_triple(f1, f2, n, fs, phases)?,
            self.out.or(file.out),
        ))
    }
}

#[derive(Debug, Args)]
pub struct NoiseArgs {
    /// JSON file supplying any flag of this command by name; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Standard deviation.
    #[arg(long)]
    sigma: Option<f64>,
    /// Generator seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    fs: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct NoiseFile {
    sigma: Option<f64>,
    seed: Option<u64>,
    n: Option<usize>,
    fs: Option<f64>,
    out: Option<PathBuf>,
}

impl NoiseArgs {
    fn build(self) -> CliResult<(Signal, Option<PathBuf>)> {
        let file: NoiseFile = load_config_file(&self.config)?;
        let sigma = self
            .sigma
            .or(file.sigma)
            .ok_or_else(|| usage("--sigma is required"))?;
        let n = self.n.or(file.n).ok_or_else(|| usage("--n is required"))?;
        let fs = self.fs.or(file.fs).unwrap_or(1.0);
        let seed = self.seed.or(file.seed).unwrap_or(0);
        let spec = NoiseSpec { sigma, seed };
        Ok((gaussian_noise(&spec, n, fs)?, self.out.or(file.out)))
    }
}

#[derive(Debug, Args)]
pub struct BandpassArgs {
    /// JSON file supplying any flag of this command by name; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Band edges as lo:hi in hertz.
    #[arg(long, value_parser = parse_band)]
    band: Option<(f64, f64)>,
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    fs: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct BandpassFile {
    band: Option<String>,
    sigma: Option<f64>,
    seed: Option<u64>,
    n: Option<usize>,
    fs: Option<f64>,
    out: Option<PathBuf>,
}

impl BandpassArgs {
    fn build(self) -> CliResult<(Signal, Option<PathBuf>)> {
        let file: BandpassFile = load_config_file(&self.config)?;
        let band = match (self.band, file.band) {
            (Some(b), _) => b,
            (None, Some(text)) => parse_band(&text).map_err(usage)?,
            (None, None) => return Err(usage("--band lo:hi is required")),
        };
        let n = self.n.or(file.n).ok_or_else(|| usage("--n is required"))?;
        let fs = self
            .fs
            .or(file.fs)
            .ok_or_else(|| usage("--fs is required"))?;
        let sigma = self.sigma.or(file.sigma).unwrap_or(1.0);
        let seed = self.seed.or(file.seed).unwrap_or(0);
        let spec = NoiseSpec { sigma, seed };
        Ok((
            bandpass_noise(band.0, band.1, &spec, n, fs)?,
            self.out.or(file.out),
        ))
    }
}
