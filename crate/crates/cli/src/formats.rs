//! Stable file formats.
//!
//! Signals: CSV with the header `# fracspec-signal v1, sample_rate=<hz>`
//! and one sample per line, printed with 18 significant digits so the
//! write/read round trip is exact to the last representable digit.
//!
//! Grids: a CSV matrix of magnitudes (row = u, column = v) plus a JSON
//! sidecar at `<out>.json` carrying everything needed to reproduce the
//! computation from the source signal; complex values are included on
//! request as (re, im) pairs.
//!
//! All files are written atomically (temp file in the target directory,
//! then rename).

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use fracspec_core::{BifrequencyGrid, EstimatorConfig, Signal};
use serde::Serialize;

use crate::fail::{run_error, usage, CliResult};

pub const SIGNAL_HEADER: &str = "# fracspec-signal v1, sample_rate=";

pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| run_error(format!("{}: cannot create temp file: {e}", dir.display())))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| run_error(format!("{}: write failed: {e}", path.display())))?;
    tmp.persist(path)
        .map_err(|e| run_error(format!("{}: rename failed: {e}", path.display())))?;
    Ok(())
}

pub fn signal_text(signal: &Signal) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{SIGNAL_HEADER}{}", signal.sample_rate());
    for s in signal.samples() {
        let _ = writeln!(out, "{s:.17e}");
    }
    out
}

pub fn write_signal(path: &Path, signal: &Signal) -> CliResult<()> {
    write_atomic(path, &signal_text(signal))
}

pub fn read_signal(path: &Path) -> CliResult<Signal> {
    let text =
        std::fs::read_to_string(path).map_err(|e| run_error(format!("{}: {e}", path.display())))?;
    let mut lines = text.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| run_error(format!("{}: empty file", path.display())))?;
    let rate_text = header.strip_prefix(SIGNAL_HEADER).ok_or_else(|| {
        run_error(format!(
            "{}: line 1: expected header starting with `{SIGNAL_HEADER}`",
            path.display()
        ))
    })?;
    let sample_rate: f64 = rate_text.trim().parse().map_err(|e| {
        run_error(format!(
            "{}: line 1: bad sample rate `{rate_text}`: {e}",
            path.display()
        ))
    })?;

    let mut samples = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line.parse().map_err(|e| {
            run_error(format!(
                "{}: line {}: bad sample `{line}`: {e}",
                path.display(),
                idx + 1
            ))
        })?;
        samples.push(value);
    }
    Ok(Signal::new(samples, sample_rate)?)
}

/// Metadata sufficient to reproduce a grid from its source signal.
#[derive(Debug, Serialize)]
pub struct GridSidecar<'a> {
    pub format: &'static str,
    pub k: f64,
    pub rational_k: Option<(i64, u64)>,
    pub bin_resolution: f64,
    pub grid_extent: usize,
    pub segments_averaged: usize,
    pub estimator: &'a EstimatorConfig,
    pub source: SourceInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values_complex: Option<Vec<Vec<(f64, f64)>>>,
}

#[derive(Debug, Serialize)]
pub struct SourceInfo {
    pub file: String,
    pub samples: usize,
    pub sample_rate: f64,
}

/// Sidecar path for an output file: the same name with `.json` appended,
/// which never collides with the data file itself.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

pub fn write_grid(
    path: &Path,
    grid: &BifrequencyGrid,
    source: SourceInfo,
    include_complex: bool,
) -> CliResult<PathBuf> {
    let mut csv = String::new();
    for row in grid.values.rows() {
        let mut first = true;
        for value in row {
            if !first {
                csv.push(',');
            }
            first = false;
            let _ = write!(csv, "{:.17e}", value.norm());
        }
        csv.push('\n');
    }
    write_atomic(path, &csv)?;

    let values_complex = include_complex.then(|| {
        grid.values
            .rows()
            .into_iter()
            .map(|row| row.iter().map(|c| (c.re, c.im)).collect())
            .collect()
    });
    let sidecar = GridSidecar {
        format: "fracspec-grid v1",
        k: grid.k,
        rational_k: grid.estimator.rational_k,
        bin_resolution: grid.bin_resolution,
        grid_extent: grid.values.nrows(),
        segments_averaged: grid.segments_averaged,
        estimator: &grid.estimator,
        source,
        values_complex,
    };
    let sidecar_file = sidecar_path(path);
    write_atomic(&sidecar_file, &to_json(&sidecar)?)?;
    Ok(sidecar_file)
}

pub fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| run_error(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Loads a JSON config file whose fields mirror the command's flag names.
/// Unknown fields are usage errors so typos do not silently vanish.
pub fn load_config_file<T: serde::de::DeserializeOwned + Default>(
    path: &Option<PathBuf>,
) -> CliResult<T> {
    match path {
        None => Ok(T::default()),
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| usage(format!("{}: invalid config file: {e}", p.display())))
        }
    }
}
