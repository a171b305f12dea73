//! `fracspec verify`: numerically check that the 2D transform of the
//! time-domain fractional cumulant grid reproduces the frequency-domain
//! triple-product grid. Exit 0 iff the discrepancy is below tolerance.

use std::path::PathBuf;

use clap::Args;
use fracspec_core::{gaussian_noise, verify_fourier_pair, NoiseSpec, DEFAULT_VERIFY_CAP};
use serde::Deserialize;

use crate::args::parse_rational;
use crate::fail::{usage, CliResult};
use crate::formats::{load_config_file, read_signal};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON file supplying any flag of this command by name; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Input signal file; omitted: verify a generated random vector.
    #[arg(long = "in", conflicts_with_all = ["n", "seed", "fs"])]
    input: Option<PathBuf>,
    /// Length of the generated random vector.
    #[arg(long)]
    n: Option<usize>,
    /// Seed of the generated random vector.
    #[arg(long)]
    seed: Option<u64>,
    /// Sample rate of the generated random vector.
    #[arg(long)]
    fs: Option<f64>,
    /// Fractional parameter as p/q.
    #[arg(long, value_parser = parse_rational)]
    rational: Option<(i64, u64)>,
    /// Pass threshold on the relative discrepancy.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct VerifyFile {
    #[serde(rename = "in")]
    input: Option<PathBuf>,
    n: Option<usize>,
    seed: Option<u64>,
    fs: Option<f64>,
    rational: Option<String>,
    tol: Option<f64>,
}

pub fn run(args: VerifyArgs) -> CliResult<u8> {
    let file: VerifyFile = load_config_file(&args.config)?;
    let (p, q) = match (args.rational, file.rational) {
        (Some(r), _) => r,
        (None, Some(text)) => parse_rational(&text).map_err(usage)?,
        (None, None) => (1, 1),
    };
    let tol = args.tol.or(file.tol).unwrap_or(1e-9);

    let signal = match args.input.or(file.input) {
        Some(path) => read_signal(&path)?,
        None => {
            let n = args.n.or(file.n).unwrap_or(32);
            let seed = args.seed.or(file.seed).unwrap_or(0);
            let fs = args.fs.or(file.fs).unwrap_or(1.0);
            gaussian_noise(&NoiseSpec { sigma: 1.0, seed }, n, fs)?
        }
    };
    if signal.len() > DEFAULT_VERIFY_CAP {
        return Err(usage(format!(
            "record length {} exceeds the brute-force cap {DEFAULT_VERIFY_CAP}; reduce --n or shorten the input",
            signal.len()
        )));
    }

    let discrepancy = verify_fourier_pair(&signal, p, q)?;
    let pass = discrepancy < tol;
    println!(
        "k = {p}/{q}, N = {}: discrepancy = {discrepancy:.6e} (tolerance {tol:e}): {}",
        signal.len(),
        if pass { "PASS" } else { "FAIL" },
    );
    Ok(if pass { 0 } else { 1 })
}
