//! Brute-force numerical references for the closed forms.
//!
//! Nothing here goes through the correlation matrix: average power is the
//! time average of `|r(t)|^2` over one pulse, integrated with composite
//! Simpson on a uniform grid.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::model::{ArrayConfig, Target, SPEED_OF_LIGHT};

/// Composite Simpson rule with `intervals` (rounded up to even) subintervals.
pub fn simpson<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, intervals: usize) -> f64 {
    let n = (intervals.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * f(a + h * i as f64);
    }
    acc * h / 3.0
}

/// Simpson subinterval count that resolves the fastest beat `M f_o` with
/// 10^4 points per cycle.
pub fn default_intervals(config: &ArrayConfig) -> usize {
    let cycles = (config.fot().abs() * config.m_antennas() as f64).max(1.0);
    ((cycles * 1e4).ceil() as usize + 1) & !1
}

/// `(1/T) integral_{t_o}^{t_o+T} |r(t)|^2 dt` with path delays ignored,
/// `r(t) = sum w_m exp(-j 2 pi m [f_o (t - t_o) + sin(theta)/2])`.
pub fn time_averaged_power(config: &ArrayConfig, theta: f64, intervals: usize) -> f64 {
    let w = config.weights();
    let fo = config.offset_hz();
    let half_sin = 0.5 * theta.sin();
    let integrand = |s: f64| {
        let step = Complex64::from_polar(1.0, -2.0 * PI * (fo * s + half_sin));
        let mut z = Complex64::new(1.0, 0.0);
        let mut r = Complex64::new(0.0, 0.0);
        for wm in w {
            r += wm * z;
            z *= step;
        }
        r.norm_sqr()
    };
    simpson(integrand, 0.0, config.pulse_s(), intervals) / config.pulse_s()
}

/// One correlation-matrix entry by direct integration of `s_m s_n^*` over
/// the two pulses' overlap, using the same waveform definition as the
/// closed form (`tau` dropped when `ignore_tau`).
pub fn correlation_entry(
    config: &ArrayConfig,
    target: &Target,
    m: usize,
    n: usize,
    ignore_tau: bool,
    intervals: usize,
) -> Complex64 {
    let tau = if ignore_tau {
        0.0
    } else {
        config.spacing_m() * target.angle_rad().sin() / SPEED_OF_LIGHT
    };
    let (tm, tn) = (m as f64 * tau, n as f64 * tau);
    let fo = config.offset_hz();
    let w = config.weights();
    let t = config.pulse_s();
    let (lo, hi) = ((-tm).max(-tn), (-tm).min(-tn) + t);
    if hi <= lo {
        return Complex64::new(0.0, 0.0);
    }
    let wave = |k: usize, tk: f64, s: f64| {
        w[k] * Complex64::from_polar(1.0, -2.0 * PI * k as f64 * fo * (s + tk))
    };
    let product = |s: f64| wave(m, tm, s) * wave(n, tn, s).conj();
    let re = simpson(|s| product(s).re, lo, hi, intervals);
    let im = simpson(|s| product(s).im, lo, hi, intervals);
    Complex64::new(re, im) / t
}
