use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{beampattern, ArrayConfig, Model, Support, Target};

// t-sweep resolution for dwell measurements
const DWELL_SEGMENTS: usize = 4000;

/// Shift in `f_theta` of the compact pattern between `t_o` and `t`: `-f_o (t - t_o)`.
pub fn predict_shift(config: &ArrayConfig, t: f64, t_o: f64) -> f64 {
    0.0 - config.offset_hz() * (t - t_o)
}

/// Maps `f` into the grid period `[-0.5, 0.5)`.
pub fn wrap_f_theta(f: f64) -> f64 {
    (f + 0.5).rem_euclid(1.0) - 0.5
}

/// Where a feature at `theta` lands after a shift of `delta` in `f_theta`,
/// wrapping around endfire.
pub fn shifted_angle(theta: f64, delta: f64) -> f64 {
    (2.0 * wrap_f_theta(0.5 * theta.sin() + delta)).asin()
}

/// Circular lag (in units of `f_theta`) that best aligns `after` with `before`.
///
/// Both slices sample one full period of `f_theta` on the same uniform grid.
/// The integer peak of the cross-correlation is refined with a parabola
/// through its neighbours.
pub fn measure_shift(before: &[f64], after: &[f64]) -> f64 {
    let n = before.len();
    assert_eq!(n, after.len(), "patterns must share a grid");
    if n == 0 {
        return 0.0;
    }
    let corr: Vec<f64> = (0..n)
        .map(|lag| (0..n).map(|i| before[i] * after[(i + lag) % n]).sum())
        .collect();
    let (best, _) =
        corr.iter().enumerate().fold(
            (0, f64::NEG_INFINITY),
            |acc, (i, &c)| if c > acc.1 { (i, c) } else { acc },
        );
    let (l, c, r) = (corr[(best + n - 1) % n], corr[best], corr[(best + 1) % n]);
    let denom = l - 2.0 * c + r;
    let frac = if denom < 0.0 {
        0.5 * (l - r) / denom
    } else {
        0.0
    };
    wrap_f_theta((best as f64 + frac) / n as f64)
}

/// Time during `[t_o, t_o + T]` that the compact beampattern at `theta` stays
/// within `threshold_db` of its largest value over that window.
///
/// `weights` replace the configured ones; the crossings of the threshold are
/// located by linear interpolation between sweep samples.
pub fn dwell_time(
    weights: &[Complex64],
    config: &ArrayConfig,
    target: &Target,
    theta: f64,
    threshold_db: f64,
) -> Result<f64> {
    let cfg = config.clone().with_weights(weights.to_vec())?;
    let point = Target::new(target.range_m(), theta)?;
    let t_o = point.delay();
    let pulse = cfg.pulse_s();
    let samples = (0..=DWELL_SEGMENTS)
        .map(|i| {
            let t = t_o + pulse * i as f64 / DWELL_SEGMENTS as f64;
            beampattern(&cfg, &point, t, Model::Compact, Support::Pulsed)
        })
        .collect::<Result<Vec<f64>>>()?;
    let peak = samples.iter().copied().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Err(Error::NeverIlluminated);
    }
    let level = peak * 10f64.powf(-threshold_db.abs() / 10.0);
    let mut covered = 0.0;
    for pair in samples.windows(2) {
        let (a, b) = (pair[0] - level, pair[1] - level);
        covered += match (a >= 0.0, b >= 0.0) {
            (true, true) => 1.0,
            (false, false) => 0.0,
            (true, false) => a / (a - b),
            (false, true) => b / (b - a),
        };
    }
    Ok(covered / DWELL_SEGMENTS as f64 * pulse)
}
