use std::f64::consts::PI;

use fda_beam::design::{
    designed_pattern, dwell_time, inverse_taps, measure_shift, predict_shift, region_mask,
    synthesize_weights, wrap_f_theta, DesiredPattern,
};
use fda_beam::{array_factor_compact, beampattern, ArrayConfig, Model, Support, Target};
use proptest::collection::vec;
use proptest::prelude::*;

fn base(fo: f64) -> ArrayConfig {
    ArrayConfig::new(20, 5e9, fo, 1e-3).unwrap()
}

fn mask_and_elements() -> impl Strategy<Value = (Vec<f64>, usize)> {
    (2usize..=48).prop_flat_map(|k| (vec(0.0..1.0f64, k), 1usize..=k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn truncation_energy_is_complex_residual_squared((mask, m) in mask_and_elements()) {
        let k = mask.len();
        let desired = DesiredPattern::from_mask(mask.clone()).unwrap();
        let s = synthesize_weights(&desired, m).unwrap();
        let total = mask.iter().map(|v| v * v).sum::<f64>() / k as f64;
        let kept: f64 = s.weights().iter().map(|w| w.norm_sqr()).sum();
        prop_assert!((kept + s.truncation_energy() - total).abs() <= 1e-12 * total.max(1e-300));
        prop_assert!((s.complex_residual().powi(2) - s.truncation_energy()).abs() <= 1e-12 * total.max(1e-300));
        prop_assert!(s.residual() <= s.complex_residual() + 1e-14);
    }

    #[test]
    fn full_length_synthesis_reproduces_mask(mask in vec(0.0..1.0f64, 2..=40)) {
        let k = mask.len();
        let desired = DesiredPattern::from_mask(mask.clone()).unwrap();
        let cfg = ArrayConfig::new(k, 5e9, 100.0, 1e-3)
            .unwrap()
            .with_weights(synthesize_weights(&desired, k).unwrap().into_weights())
            .unwrap();
        for (i, &d) in mask.iter().enumerate() {
            let tgt = Target::new(3e5, desired.angle_rad(i)).unwrap();
            let af = array_factor_compact(&cfg, &tgt, tgt.delay()).unwrap();
            prop_assert!((af.norm() - d).abs() <= 1e-12);
        }
    }

    #[test]
    fn symmetric_mask_gives_real_weights(half in vec(0.0..1.0f64, 3..=25), m in 1usize..=8) {
        // bin k sits at -0.5 + k/K, so k and K - k mirror each other
        let k_len = 2 * (half.len() - 1);
        let mask: Vec<f64> = (0..k_len).map(|k| half[k.min(k_len - k)]).collect();
        let desired = DesiredPattern::from_mask(mask).unwrap();
        let s = synthesize_weights(&desired, m.min(k_len)).unwrap();
        for w in s.weights() {
            prop_assert!(w.im.abs() <= 1e-14);
        }
    }
}

#[test]
fn impulse_mask_steers_like_progressive_phase() {
    let k_len = 20;
    for k0 in [3, 10, 14] {
        let mut mask = vec![0.0; k_len];
        mask[k0] = 1.0;
        let desired = DesiredPattern::from_mask(mask).unwrap();
        let s = synthesize_weights(&desired, k_len).unwrap();
        let designed = base(0.0)
            .with_weights(s.scaled_to_peak(k_len as f64))
            .unwrap();
        let steered = base(0.0)
            .with_initial_phase(-2.0 * PI * desired.f_theta(k0))
            .unwrap();
        for i in 0..=180 {
            let theta = (-90.0 + i as f64).to_radians().clamp(-PI / 2.0, PI / 2.0);
            let tgt = Target::new(3e5, theta).unwrap();
            let t = tgt.delay();
            let a = beampattern(&designed, &tgt, t, Model::Compact, Support::Pulsed).unwrap();
            let b = beampattern(&steered, &tgt, t, Model::Compact, Support::Pulsed).unwrap();
            assert!(
                (a - b).abs() < 1e-9 * 400.0,
                "k0 {k0} theta {theta}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn centred_taps_are_a_window_of_the_full_sequence() {
    let desired = region_mask(&[(-20.0, 20.0)], 64).unwrap();
    let s = synthesize_weights(&desired, 9).unwrap();
    let taps = inverse_taps(&desired, -4..5);
    assert_eq!(s.tap_offset(), 4);
    assert_eq!(s.weights(), taps.as_slice());
    // a real, even mask gives a real, even tap sequence
    for n in 1..=4 {
        assert!((taps[4 + n] - taps[4 - n]).norm() < 1e-15);
    }
}

#[test]
fn mainlobe_drifts_by_predicted_shift() {
    let bins = 2048;
    let desired = region_mask(&[(-20.0, 20.0)], 256).unwrap();
    let s = synthesize_weights(&desired, 20).unwrap();
    let tgt = Target::new(3e5, 0.0).unwrap();
    let angles: Vec<f64> = (0..bins)
        .map(|j| (2.0 * (-0.5 + j as f64 / bins as f64)).asin())
        .collect();
    for fo in [50.0, 100.0, 300.0] {
        let cfg = base(fo);
        let before = designed_pattern(&s, &cfg, &tgt, 1.0e-3, &angles).unwrap();
        for dt in [0.1e-3, 0.4e-3, 0.9e-3] {
            let after = designed_pattern(&s, &cfg, &tgt, 1.0e-3 + dt, &angles).unwrap();
            let lag = measure_shift(&before.power, &after.power);
            let predicted = wrap_f_theta(predict_shift(&cfg, 1.0e-3 + dt, 1.0e-3));
            let off = wrap_f_theta(lag - predicted).abs() * bins as f64;
            assert!(off <= 1.0, "fo {fo} dt {dt}: {lag} vs {predicted}");
        }
    }
}

fn region_energy(regions: &[(f64, f64)], padded: &[(f64, f64)]) -> f64 {
    let desired = region_mask(regions, 256).unwrap();
    let s = synthesize_weights(&desired, 20).unwrap();
    let tgt = Target::new(3e5, 0.0).unwrap();
    let n = 8001;
    let angles: Vec<f64> = (0..n)
        .map(|i| (-1.0 + 2.0 * i as f64 / (n - 1) as f64).asin())
        .collect();
    let g = designed_pattern(&s, &base(100.0), &tgt, tgt.delay(), &angles).unwrap();
    let (mut inside, mut total) = (0.0, 0.0);
    for (p, theta) in g.power.iter().zip(&angles) {
        total += p;
        let deg = theta.to_degrees();
        if padded.iter().any(|&(lo, hi)| lo <= deg && deg <= hi) {
            inside += p;
        }
    }
    inside / total
}

#[test]
fn designed_energy_stays_in_region() {
    let single = region_energy(&[(-20.0, 20.0)], &[(-22.0, 22.0)]);
    let dual = region_energy(
        &[(-40.0, -20.0), (20.0, 40.0)],
        &[(-42.0, -18.0), (18.0, 42.0)],
    );
    assert!(single > 0.99, "{single}");
    assert!(dual > 0.98, "{dual}");
}

#[test]
fn designed_beam_dwells_longer_than_uniform() {
    let desired = region_mask(&[(-20.0, 20.0)], 256).unwrap();
    let s = synthesize_weights(&desired, 20).unwrap();
    let cfg = base(100.0);
    let tgt = Target::new(3e5, 0.0).unwrap();
    let designed = dwell_time(&s.scaled_to_peak(20.0), &cfg, &tgt, 0.0, 3.0).unwrap();
    let uniform = dwell_time(cfg.weights(), &cfg, &tgt, 0.0, 3.0).unwrap();
    assert!(designed > 4.0 * uniform, "{designed} vs {uniform}");
    assert!(designed <= cfg.pulse_s());
}

#[test]
fn mask_bins_follow_sine_grid() {
    let d = region_mask(&[(30.0, -30.0)], 40).unwrap();
    for k in 0..40 {
        let deg = d.angle_rad(k).to_degrees();
        let inside = (-30.0..=30.0).contains(&deg);
        assert_eq!(d.mask()[k] == 1.0, inside, "bin {k} at {deg}");
    }
    assert!(region_mask(&[], 40).is_err());
    assert!(region_mask(&[(-100.0, 0.0)], 40).is_err());
    assert!(DesiredPattern::from_mask(vec![1.0]).is_err());
    assert!(DesiredPattern::from_mask(vec![1.0, f64::NAN]).is_err());
}
