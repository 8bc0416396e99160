use std::f64::consts::PI;

use fda_beam::analysis::oracle::{correlation_entry, default_intervals, time_averaged_power};
use fda_beam::analysis::{
    average_power_closed_form, average_power_curve, correlation_matrix, fot_verdict,
    power_components, rayleigh_beamwidth, spatial_exploration, steering_vector, FotVerdict,
};
use fda_beam::{beampattern, ArrayConfig, Model, Support, Target};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_weights(m: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

fn to_matrix(cfg: &ArrayConfig, tgt: &Target, ignore_tau: bool) -> DMatrix<Complex64> {
    let r = correlation_matrix(cfg, tgt, ignore_tau);
    DMatrix::from_row_slice(r.size(), r.size(), r.entries())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn correlation_is_hermitian_psd(
        m in 2usize..=16,
        fo in -500.0..500.0f64,
        seed in any::<u64>(),
        deg in -80.0..80.0f64,
        ignore_tau in any::<bool>(),
    ) {
        let cfg = ArrayConfig::new(m, 5e9, fo, 1e-3)
            .unwrap()
            .with_weights(random_weights(m, seed))
            .unwrap();
        let tgt = Target::from_degrees(3e5, deg).unwrap();
        let r = to_matrix(&cfg, &tgt, ignore_tau);
        let scale = r.norm();
        prop_assert!((&r - r.adjoint()).norm() <= 1e-12 * scale);
        let eig = r.symmetric_eigen();
        let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        prop_assert!(min >= -1e-10 * scale, "min eigenvalue {}", min);
    }

    #[test]
    fn quadratic_form_matches_closed_form(
        m in 2usize..=24,
        fot in -0.5..0.5f64,
        phi in -1.0..1.0f64,
        theta in -1.5..1.5f64,
    ) {
        let cfg = ArrayConfig::new(m, 5e9, fot * 1e3, 1e-3)
            .unwrap()
            .with_initial_phase(phi)
            .unwrap();
        let curve = average_power_curve(&cfg, &[theta])[0];
        let closed = average_power_closed_form(m, cfg.fot(), phi, theta);
        prop_assert!((curve - closed).abs() <= 1e-9 * (m * m) as f64, "{} vs {}", curve, closed);
        if let Some(parts) = power_components(m, cfg.fot(), phi, theta) {
            if cfg.fot().abs() > 1e-3 {
                let total = parts.total(m);
                prop_assert!((total - closed).abs() <= 1e-6 * (m * m) as f64);
            }
        }
    }

    #[test]
    fn se_approximation_error_is_cubic(fot in 0.0..0.1f64) {
        let se = spatial_exploration(fot, 0.0).unwrap();
        let x = 2.0 * fot;
        prop_assert!((se.se_exact_rad - se.se_approx_rad).abs() <= 0.25 * x * x * x + 1e-15);
    }

    #[test]
    fn verdict_is_symmetric(fot in -1.0..1.0f64) {
        prop_assert_eq!(fot_verdict(fot), fot_verdict(-fot));
    }
}

#[test]
fn correlation_entries_match_direct_integration() {
    for ignore_tau in [true, false] {
        let cfg = ArrayConfig::new(6, 5e9, 350.0, 1e-3)
            .unwrap()
            .with_weights(random_weights(6, 7))
            .unwrap();
        let tgt = Target::from_degrees(3e5, 40.0).unwrap();
        let r = correlation_matrix(&cfg, &tgt, ignore_tau);
        let intervals = default_intervals(&cfg);
        for m in 0..6 {
            for n in 0..6 {
                let direct = correlation_entry(&cfg, &tgt, m, n, ignore_tau, intervals);
                let err = (direct - r.get(m, n)).norm();
                assert!(err < 1e-10, "({m},{n}) tau ignored {ignore_tau}: {err}");
            }
        }
    }
}

#[test]
fn average_power_matches_time_average() {
    let cfg = ArrayConfig::new(12, 5e9, 300.0, 1e-3)
        .unwrap()
        .with_initial_phase(0.4)
        .unwrap();
    let intervals = default_intervals(&cfg);
    for i in 0..=30 {
        let theta = -1.5 + 0.1 * i as f64;
        let curve = average_power_curve(&cfg, &[theta])[0];
        let direct = time_averaged_power(&cfg, theta, intervals);
        assert!(
            (curve - direct).abs() < 1e-9 * 144.0,
            "{theta}: {curve} vs {direct}"
        );
    }
}

#[test]
fn par_average_equals_instantaneous_pattern() {
    let cfg = ArrayConfig::new(10, 5e9, 0.0, 1e-3)
        .unwrap()
        .with_weights(random_weights(10, 3))
        .unwrap();
    for i in 0..=20 {
        let theta = -1.4 + 0.14 * i as f64;
        let avg = average_power_curve(&cfg, &[theta])[0];
        let tgt = Target::new(3e5, theta).unwrap();
        let inst = beampattern(&cfg, &tgt, tgt.delay(), Model::Compact, Support::Pulsed).unwrap();
        assert!((avg - inst).abs() < 1e-12 * avg.max(1.0), "{avg} vs {inst}");
    }
}

#[test]
fn quadratic_form_agrees_with_nalgebra() {
    let cfg = ArrayConfig::new(9, 5e9, 120.0, 1e-3)
        .unwrap()
        .with_weights(random_weights(9, 11))
        .unwrap();
    let tgt = Target::from_degrees(3e5, 10.0).unwrap();
    let r = correlation_matrix(&cfg, &tgt, true);
    let dense = to_matrix(&cfg, &tgt, true);
    let a = steering_vector(&cfg, 0.3);
    let av = nalgebra::DVector::from_vec(a.clone());
    let expected = (av.adjoint() * &dense * &av)[(0, 0)];
    assert!(expected.im.abs() < 1e-12);
    assert!((r.quadratic_form(&a) - expected.re).abs() < 1e-12);
}

#[test]
fn rayleigh_null_and_peak_land_on_pattern() {
    for (m, phi) in [(20, 0.0), (16, 0.5), (31, -1.2)] {
        let cfg = ArrayConfig::new(m, 5e9, 0.0, 1e-3)
            .unwrap()
            .with_initial_phase(phi)
            .unwrap();
        let bw = rayleigh_beamwidth(&cfg).unwrap();
        let at = |theta: f64| {
            let tgt = Target::new(3e5, theta).unwrap();
            beampattern(&cfg, &tgt, tgt.delay(), Model::Compact, Support::Pulsed).unwrap()
        };
        let full = (m * m) as f64;
        assert!((at(bw.theta_peak_rad) - full).abs() < 1e-9 * full);
        assert!(at(bw.theta_first_null_rad) < 1e-18 * full);
    }
}

#[test]
fn verdict_thresholds() {
    assert_eq!(fot_verdict(0.2), FotVerdict::Valid);
    assert_eq!(fot_verdict(0.45), FotVerdict::Valid);
    assert_eq!(fot_verdict(0.48), FotVerdict::Marginal);
    assert_eq!(fot_verdict(0.5), FotVerdict::Marginal);
    assert_eq!(fot_verdict(0.5000001), FotVerdict::Violated);
    assert!(spatial_exploration(0.6, 0.0).is_err());
    assert!(spatial_exploration(0.4, PI / 4.0).is_err());
    assert!(spatial_exploration(0.4, -PI / 4.0).is_ok());
}

#[test]
fn plateau_edges_bracket_predicted_edges() {
    use fda_beam::analysis::{average_power, plateau_edges};
    let angles: Vec<f64> = (0..=3600)
        .map(|i| (-PI / 2.0 + PI * i as f64 / 3600.0).clamp(-PI / 2.0, PI / 2.0))
        .collect();
    let step = PI / 3600.0;
    for m in [16, 20, 32] {
        for fot in [0.1, 0.2, 0.3, 0.4, 0.5] {
            let cfg = ArrayConfig::new(m, 5e9, fot * 1e3, 1e-3).unwrap();
            let pattern = average_power(&cfg, &angles).unwrap();
            let (lo, hi) = plateau_edges(&angles, &pattern.power, 3.0).unwrap();
            let tol = 2.0 * step + 0.02;
            let e = pattern.edges;
            assert!(
                (lo - e.theta1_rad).abs() <= tol,
                "M {m} fot {fot}: {lo} vs {}",
                e.theta1_rad
            );
            assert!(
                (hi - e.theta2_rad).abs() <= tol,
                "M {m} fot {fot}: {hi} vs {}",
                e.theta2_rad
            );
        }
    }
}
