//! Property tests for the estimator invariants: reductions, symmetries,
//! scaling laws, and the transform-pair identity on random inputs.

mod common;

use common::{grid_peak, max_rel_to_peak};
use fracspec_core::*;
use proptest::prelude::*;

fn signal_strategy(min_len: usize, max_len: usize) -> impl Strategy<Value = Signal> {
    prop::collection::vec(-1.0f64..1.0, min_len..=max_len)
        .prop_map(|samples| Signal::new(samples, 1.0).unwrap())
}

proptest! {
    #[test]
    fn spectrum_of_real_signal_is_hermitian(x in signal_strategy(2, 64)) {
        let spec = dft_forward(&x);
        let peak = spec.coefficients().iter().map(|c| c.norm()).fold(0.0, f64::max);
        prop_assert!(spec.hermitian_deviation() <= 1e-9 * peak.max(1e-30));
    }

    #[test]
    fn unit_k_reduction_is_bitwise(x in signal_strategy(8, 64)) {
        let spec = dft_forward(&x);
        let extent = x.len() / 2;
        let classical = bispectrum_direct(&spec, extent).unwrap();
        let fractional =
            fractional_bispectrum_direct(&spec, 1.0, extent, InterpMode::Linear).unwrap();
        prop_assert_eq!(classical.values, fractional.values);
    }

    #[test]
    fn classical_grid_is_symmetric_in_u_v(x in signal_strategy(8, 48)) {
        let grid = bispectrum_direct(&dft_forward(&x), x.len() / 2).unwrap();
        for u in 0..grid.values.nrows() {
            for v in 0..u {
                prop_assert_eq!(grid.values[[u, v]], grid.values[[v, u]]);
            }
        }
    }

    #[test]
    fn doubling_the_signal_scales_grids_by_eight(x in signal_strategy(8, 48)) {
        // Power-of-two scaling commutes with rounding, so the law holds to
        // the last bit, well inside the 1e-12 contract.
        let extent = x.len() / 2;
        let base = fractional_bispectrum_exact_rational(&x, 3, 2, extent).unwrap();
        let scaled =
            fractional_bispectrum_exact_rational(&x.scale(2.0).unwrap(), 3, 2, extent).unwrap();
        for (a, b) in scaled.values.iter().zip(base.values.iter()) {
            let want = b * 8.0;
            prop_assert!((a - want).norm() <= 1e-12 * want.norm());
        }
    }

    #[test]
    fn cumulant_scales_cubically(x in signal_strategy(4, 24)) {
        let scaled = x.scale(2.0).unwrap();
        for rho in 0..x.len().min(4) {
            for tau in 0..x.len().min(4) {
                let base = triple_correlation(&x, rho as i64, tau as i64);
                let big = triple_correlation(&scaled, rho as i64, tau as i64);
                prop_assert!((big - 8.0 * base).abs() <= 1e-12 * (8.0 * base).abs());
            }
        }
    }

    #[test]
    fn periodic_index_wraps(x in signal_strategy(4, 32), idx in -64.0f64..64.0) {
        // idx + N rounds in floats, so the wrap is exact only up to the
        // index rounding, not bitwise.
        let spec = dft_forward(&x);
        let n = x.len() as f64;
        let scale = spec.coefficients().iter().map(|c| c.norm()).fold(1.0, f64::max);
        for interp in [InterpMode::Nearest, InterpMode::Linear] {
            let a = spec.value_at(idx, interp).unwrap();
            let b = spec.value_at(idx + n, interp).unwrap();
            prop_assert!((a - b).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn full_grid_has_conjugate_symmetry(x in signal_strategy(6, 24)) {
        let n = x.len();
        let spec = dft_forward(&x);
        let interp_grid = fractional_bispectrum_full(&spec, 1.7, InterpMode::Linear).unwrap();
        let rational_grid = fractional_bispectrum_full_rational(&x, 3, 2).unwrap();
        for grid in [&interp_grid, &rational_grid] {
            let peak = grid_peak(grid).max(1e-30);
            for u in 0..n {
                for v in 0..n {
                    let mirror = grid[[(n - u) % n, (n - v) % n]];
                    let d = (mirror - grid[[u, v]].conj()).norm();
                    prop_assert!(d <= 1e-9 * peak, "({u}, {v}): {d:e}");
                }
            }
        }
    }

    #[test]
    fn shift_preserves_magnitudes_on_integral_indices(
        x in signal_strategy(8, 32),
        shift in -16i64..16,
    ) {
        // On the circular domain a shift factors out of the third term
        // only where u + k*v is integral (here: even v for q = 2); at
        // genuinely fractional indices the wrapped samples acquire a
        // non-unimodular factor and magnitudes need not match pointwise.
        let extent = x.len() / 2;
        let base = fractional_bispectrum_exact_rational(&x, 3, 2, extent).unwrap();
        let moved =
            fractional_bispectrum_exact_rational(&x.circular_shift(shift), 3, 2, extent).unwrap();
        let spec = dft_forward(&x);
        let scale = spec
            .coefficients()
            .iter()
            .map(|c| c.norm())
            .fold(1e-30, f64::max)
            .powi(3);
        for u in 0..extent {
            for v in (0..extent).step_by(2) {
                let d = (moved.values[[u, v]].norm() - base.values[[u, v]].norm()).abs();
                prop_assert!(d <= 1e-9 * scale, "({u}, {v}): {d:e}");
            }
        }
    }

    #[test]
    fn shift_leaves_classical_values_untouched(x in signal_strategy(8, 32), shift in -16i64..16) {
        // At k = 1 the shift phases cancel entirely.
        let extent = x.len() / 2;
        let base = bispectrum_direct(&dft_forward(&x), extent).unwrap();
        let moved = bispectrum_direct(&dft_forward(&x.circular_shift(shift)), extent).unwrap();
        let spec = dft_forward(&x);
        let scale = spec
            .coefficients()
            .iter()
            .map(|c| c.norm())
            .fold(1e-30, f64::max)
            .powi(3);
        for (a, b) in moved.values.iter().zip(base.values.iter()) {
            prop_assert!((a - b).norm() <= 1e-9 * scale);
        }
    }
}

proptest! {
    // The N^3-ish verification is heavier; fewer random cases suffice.
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn transform_pair_identity_holds(
        x in signal_strategy(6, 20),
        pq in prop::sample::select(vec![(1i64, 1u64), (1, 2), (3, 2), (2, 1), (5, 4), (-1, 2)]),
    ) {
        let d = verify_fourier_pair(&x, pq.0, pq.1).unwrap();
        prop_assert!(d < 1e-9, "k = {}/{}: {d:e}", pq.0, pq.1);
    }

    #[test]
    fn averaged_estimate_of_periodic_signal_matches_single_segment(
        seed in 0u64..1000,
        m in 2usize..5,
    ) {
        let seg = multi_tone(
            &[
                ToneSpec { frequency: 3.0, amplitude: 1.0, phase: 0.1 },
                ToneSpec { frequency: 7.0, amplitude: 0.5, phase: (seed % 7) as f64 },
            ],
            32,
            32.0,
        )
        .unwrap();
        let mut long = Vec::new();
        for _ in 0..m {
            long.extend_from_slice(seg.samples());
        }
        let long = Signal::new(long, 32.0).unwrap();
        let cfg = EstimatorConfig { segment_length: 32, ..EstimatorConfig::default() };
        let avg = averaged_fractional_bispectrum(&long, 1.5, &cfg, 16).unwrap();
        let one = averaged_fractional_bispectrum(&seg, 1.5, &cfg, 16).unwrap();
        prop_assert_eq!(avg.segments_averaged, m);
        prop_assert!(max_rel_to_peak(&avg.values, &one.values) <= 1e-9);
    }
}
