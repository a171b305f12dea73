//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured quantity (visible with --nocapture).
//!
//! Run with `cargo test -p fracspec-cli --test acceptance`.

use std::path::Path;
use std::process::{Command, Output};

use fracspec_core::*;
use ndarray::Array2;

fn random_signal(seed: u64, n: usize) -> Signal {
    gaussian_noise(&NoiseSpec { sigma: 1.0, seed }, n, n as f64).unwrap()
}

fn tone_pair(b1: f64, b2: f64, n: usize) -> Signal {
    multi_tone(
        &[
            ToneSpec {
                frequency: b1,
                amplitude: 1.0,
                phase: 0.0,
            },
            ToneSpec {
                frequency: b2,
                amplitude: 1.0,
                phase: 0.0,
            },
        ],
        n,
        n as f64,
    )
    .unwrap()
}

fn grid_peak(values: &Array2<Complex64>) -> f64 {
    values.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Criterion 1: the 2D transform of the time-domain fractional cumulant
/// grid matches the frequency-domain triple-product grid to better than
/// 1e-9 for 20 fixed-seed random signals, N in {16, 32, 64} and
/// k in {1, 1/2, 3/2, 2, 5/4}.
#[test]
fn c1_fourier_pair_oracle() {
    let rationals: [(i64, u64); 5] = [(1, 1), (1, 2), (3, 2), (2, 1), (5, 4)];
    let mut worst = 0.0f64;
    for seed in 0..20u64 {
        let n = [16, 32, 64][(seed % 3) as usize];
        let x = random_signal(seed, n);
        for (p, q) in rationals {
            let d = verify_fourier_pair(&x, p, q).unwrap();
            assert!(d < 1e-9, "seed {seed}, N {n}, k {p}/{q}: discrepancy {d:e}");
            worst = worst.max(d);
        }
    }
    println!("[PASS] criterion 1: Fourier-pair oracle, worst discrepancy {worst:.3e} < 1e-9");
}

/// Criterion 2: the fractional bispectrum at k = 1 equals the classical
/// bispectrum exactly (bit for bit) on the integer-index path, 100
/// random signals.
#[test]
fn c2_unit_k_reduction_is_exact() {
    for seed in 0..100u64 {
        let x = random_signal(seed, 32);
        let spec = dft_forward(&x);
        let classical = bispectrum_direct(&spec, 16).unwrap();
        let fractional = fractional_bispectrum_direct(&spec, 1.0, 16, InterpMode::Linear).unwrap();
        for (a, b) in fractional.values.iter().zip(classical.values.iter()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits(), "seed {seed}");
            assert_eq!(a.im.to_bits(), b.im.to_bits(), "seed {seed}");
        }
    }
    println!(
        "[PASS] criterion 2: k=1 reduces to the classical bispectrum bit-for-bit (100 signals)"
    );
}

/// Criterion 3: the bispectrum of a single integer-bin tone vanishes off
/// the axes, below 1e-6 x (N/2)^3.
#[test]
fn c3_pure_sinusoid_null() {
    let x = multi_tone(
        &[ToneSpec {
            frequency: 8.0,
            amplitude: 1.0,
            phase: 0.0,
        }],
        64,
        64.0,
    )
    .unwrap();
    let grid = bispectrum_direct(&dft_forward(&x), 32).unwrap();
    let bound = 1e-6 * 32f64.powi(3);
    let mut max_off_axis = 0.0f64;
    for u in 1..32 {
        for v in 1..32 {
            max_off_axis = max_off_axis.max(grid.values[[u, v]].norm());
        }
    }
    assert!(
        max_off_axis < bound,
        "off-axis max {max_off_axis:e} >= {bound:e}"
    );
    println!(
        "[PASS] criterion 3: pure-sinusoid null, off-axis max {max_off_axis:.3e} < {bound:.3e}"
    );
}

/// Criterion 4: tones on bins 8 and 20 are invisible to the classical
/// bispectrum yet give value(8,8) = 32768 at k = 3/2 in exact mode.
#[test]
fn c4_non_harmonic_gap_and_recovery() {
    let x = tone_pair(8.0, 20.0, 64);
    let bound = 1e-6 * 32f64.powi(3);

    let classical = bispectrum_direct(&dft_forward(&x), 32).unwrap();
    let mut max_off_axis = 0.0f64;
    for u in 1..32 {
        for v in 1..32 {
            max_off_axis = max_off_axis.max(classical.values[[u, v]].norm());
        }
    }
    assert!(max_off_axis < bound, "classical leak {max_off_axis:e}");

    let fractional = fractional_bispectrum_exact_rational(&x, 3, 2, 32).unwrap();
    let got = fractional.values[[8, 8]];
    assert!(
        (got - Complex64::new(32768.0, 0.0)).norm() <= 1e-6 * 32768.0,
        "value(8,8) = {got}"
    );
    println!(
        "[PASS] criterion 4: classical blind ({max_off_axis:.3e}) while k=3/2 recovers (8,8) = {:.6e}",
        got.re
    );
}

/// Criterion 5: scanning k over 1.0:2.0:0.05 on 20 Hz + 50 Hz tones at
/// fs = 256 identifies k = 1.50 exactly with the peak at u = 20 Hz.
#[test]
fn c5_k_scan_identification() {
    let x = multi_tone(
        &[
            ToneSpec {
                frequency: 20.0,
                amplitude: 1.0,
                phase: 0.0,
            },
            ToneSpec {
                frequency: 50.0,
                amplitude: 1.0,
                phase: 0.0,
            },
        ],
        256,
        256.0,
    )
    .unwrap();
    let est = estimate_frequency_ratio(&x, (1.0, 2.0, 0.05), &EstimatorConfig::default()).unwrap();
    assert_eq!(est.k_star, 1.5);
    assert_eq!(est.f1_hz, 20.0);
    assert_eq!(est.scan.best_peak.location, (20, 20));
    assert!(est.detected);
    println!(
        "[PASS] criterion 5: k-scan found k* = {} with f1 = {} Hz",
        est.k_star, est.f1_hz
    );
}

/// Criterion 6: pure-noise grid-mean |F| strictly decreases over
/// M in {4, 16, 64} with a log-log slope in [-0.7, -0.3].
#[test]
fn c6_gaussian_null_decay() {
    let curve = gaussian_null_study(&StudyConfig::default_null_scenario()).unwrap();
    let means: Vec<f64> = curve.points.iter().map(|p| p.mean_abs).collect();
    assert_eq!(curve.points.len(), 3);
    assert!(
        means[0] > means[1] && means[1] > means[2],
        "not decreasing: {means:?}"
    );
    let slope = curve
        .slope_estimate
        .expect("slope defined for positive data");
    assert!(
        (-0.7..=-0.3).contains(&slope),
        "slope {slope} outside [-0.7, -0.3]"
    );
    println!(
        "[PASS] criterion 6: Gaussian null decay, means {:.3e} > {:.3e} > {:.3e}, slope {slope:.3}",
        means[0], means[1], means[2]
    );
}

/// Criterion 7: with two tones buried in sigma = 1 noise, the peak
/// contrast at M = 64 segments exceeds the contrast at M = 4.
#[test]
fn c7_noise_suppression_on_contaminated_signal() {
    let curve = contaminated_signal_study(&StudyConfig::default_contaminated_scenario()).unwrap();
    let by_m: Vec<(usize, f64)> = curve
        .points
        .iter()
        .map(|p| (p.segments, p.peak_contrast))
        .collect();
    let c4 = by_m.iter().find(|(m, _)| *m == 4).unwrap().1;
    let c64 = by_m.iter().find(|(m, _)| *m == 64).unwrap().1;
    assert!(c64 > c4, "contrast(64) = {c64} <= contrast(4) = {c4}");
    println!("[PASS] criterion 7: contaminated contrast grows, {c4:.3e} (M=4) -> {c64:.3e} (M=64)");
}

/// Criterion 8: symmetry and scaling suite.
#[test]
fn c8_symmetry_and_scaling_suite() {
    // (u,v) <-> (v,u) symmetry of the classical grid, 1e-9 relative.
    for x in [random_signal(8, 32), tone_pair(3.0, 7.0, 32)] {
        let grid = bispectrum_direct(&dft_forward(&x), 16).unwrap();
        let peak = grid_peak(&grid.values).max(1e-30);
        for u in 0..16 {
            for v in 0..16 {
                let d = (grid.values[[u, v]] - grid.values[[v, u]]).norm();
                assert!(d <= 1e-9 * peak, "swap symmetry ({u},{v}): {d:e}");
            }
        }
    }

    // Conjugate symmetry F(N-u, N-v) = conj F(u, v) on full grids, 1e-9.
    let x = random_signal(17, 32);
    let n = 32;
    let interp = fractional_bispectrum_full(&dft_forward(&x), 1.7, InterpMode::Linear).unwrap();
    let rational = fractional_bispectrum_full_rational(&x, 3, 2).unwrap();
    for grid in [&interp, &rational] {
        let peak = grid_peak(grid).max(1e-30);
        for u in 0..n {
            for v in 0..n {
                let mirror = grid[[(n - u) % n, (n - v) % n]];
                let d = (mirror - grid[[u, v]].conj()).norm();
                assert!(d <= 1e-9 * peak, "conjugate symmetry ({u},{v}): {d:e}");
            }
        }
    }

    // Cubic scaling, 1e-12: pointwise for a power-of-two factor, and
    // relative to the grid peak for a general factor.
    let base = fractional_bispectrum_exact_rational(&x, 3, 2, 16).unwrap();
    let doubled = fractional_bispectrum_exact_rational(&x.scale(2.0).unwrap(), 3, 2, 16).unwrap();
    for (a, b) in doubled.values.iter().zip(base.values.iter()) {
        let want = b * 8.0;
        assert!(
            (a - want).norm() <= 1e-12 * want.norm(),
            "a^3 scaling (a=2)"
        );
    }
    let a = 1.7f64;
    let scaled = fractional_bispectrum_exact_rational(&x.scale(a).unwrap(), 3, 2, 16).unwrap();
    let peak = grid_peak(&scaled.values);
    for (got, b) in scaled.values.iter().zip(base.values.iter()) {
        let want = b * a.powi(3);
        assert!((got - want).norm() <= 1e-12 * peak, "a^3 scaling (a=1.7)");
    }

    // |F| invariance under circular shift, 1e-9 relative to the peak:
    // exact-rational two-tone grid and classical grid of a random signal.
    let pair = tone_pair(8.0, 20.0, 64);
    let shifted = pair.circular_shift(11);
    let f0 = fractional_bispectrum_exact_rational(&pair, 3, 2, 32).unwrap();
    let f1 = fractional_bispectrum_exact_rational(&shifted, 3, 2, 32).unwrap();
    let peak = grid_peak(&f0.values);
    for (a, b) in f1.values.iter().zip(f0.values.iter()) {
        assert!(
            (a.norm() - b.norm()).abs() <= 1e-9 * peak,
            "shift invariance (rational)"
        );
    }
    let c0 = bispectrum_direct(&dft_forward(&x), 16).unwrap();
    let c1 = bispectrum_direct(&dft_forward(&x.circular_shift(5)), 16).unwrap();
    let peak = grid_peak(&c0.values);
    for (a, b) in c1.values.iter().zip(c0.values.iter()) {
        assert!(
            (a.norm() - b.norm()).abs() <= 1e-9 * peak,
            "shift invariance (classical)"
        );
    }

    // k-scan argmax is untouched by positive scaling and circular shifts.
    let cfg = EstimatorConfig::default();
    let ks = [1.0, 1.25, 1.5, 1.75, 2.0];
    let reference = k_scan(&pair, &ks, &cfg, 32).unwrap();
    assert_eq!(reference.best_k, 1.5);
    for variant in [pair.scale(3.0).unwrap(), pair.circular_shift(11)] {
        let scan = k_scan(&variant, &ks, &cfg, 32).unwrap();
        assert_eq!(scan.best_k, reference.best_k, "argmax moved");
        assert_eq!(scan.best_peak.location, reference.best_peak.location);
    }

    println!("[PASS] criterion 8: symmetry, conjugate symmetry, cubic scaling, shift invariance, argmax invariance");
}

/// Criterion 9: every CLI command repeated with identical flags produces
/// byte-identical stdout and output files.
#[test]
fn c9_cli_determinism() {
    let binary = env!("CARGO_BIN_EXE_fracspec");
    let run = |dir: &Path, args: &[&str]| -> Output {
        let out = Command::new(binary)
            .args(args)
            .current_dir(dir)
            .output()
            .expect("binary runs");
        assert!(
            out.status.code().is_some(),
            "command terminated abnormally: {args:?}"
        );
        out
    };

    let commands: Vec<Vec<&str>> = vec![
        vec![
            "gen",
            "tones",
            "--n",
            "64",
            "--fs",
            "64",
            "--freq",
            "8:1:0",
            "--freq",
            "20:1:0.5",
            "--out",
            "tones.csv",
        ],
        vec![
            "gen",
            "coupled",
            "--f1",
            "8",
            "--f2",
            "12",
            "--n",
            "64",
            "--fs",
            "64",
            "--phase1",
            "0.3",
            "--out",
            "coupled.csv",
        ],
        vec![
            "gen",
            "noise",
            "--sigma",
            "1",
            "--seed",
            "9",
            "--n",
            "512",
            "--out",
            "noise.csv",
        ],
        vec![
            "gen", "bandpass", "--band", "20:30", "--sigma", "1", "--seed", "4", "--n", "256",
            "--fs", "128", "--out", "band.csv",
        ],
        vec![
            "analyze",
            "--in",
            "tones.csv",
            "--k",
            "1.5",
            "--interp",
            "linear",
            "--out",
            "grid-linear.csv",
        ],
        vec![
            "analyze",
            "--in",
            "tones.csv",
            "--rational",
            "3/2",
            "--complex",
            "--out",
            "grid-exact.csv",
        ],
        vec![
            "kscan",
            "--in",
            "tones.csv",
            "--kmin",
            "1.0",
            "--kmax",
            "2.0",
            "--kstep",
            "0.25",
            "--out",
            "scan.json",
        ],
        vec!["verify", "--n", "32", "--seed", "7", "--rational", "3/2"],
        vec![
            "noisestudy",
            "--trials",
            "4",
            "--segcounts",
            "4,16",
            "--seglen",
            "64",
            "--extent",
            "16",
            "--seed",
            "3",
            "--out",
            "curve.json",
            "--csv",
            "curve.csv",
        ],
    ];
    let outputs = [
        "tones.csv",
        "coupled.csv",
        "noise.csv",
        "band.csv",
        "grid-linear.csv",
        "grid-linear.csv.json",
        "grid-exact.csv",
        "grid-exact.csv.json",
        "scan.json",
        "curve.json",
        "curve.csv",
    ];

    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for args in &commands {
        let a = run(dir_a.path(), args);
        let b = run(dir_b.path(), args);
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "stdout differs for {args:?}");
    }
    for name in outputs {
        let a = std::fs::read(dir_a.path().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "output file {name} differs between runs");
    }
    println!(
        "[PASS] criterion 9: {} commands and {} output files byte-identical across repeated runs",
        commands.len(),
        outputs.len()
    );
}
