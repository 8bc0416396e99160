use std::f64::consts::PI;
use std::ops::Range;

use num_complex::Complex64;

use super::timing::{classify_state, steady_window};
use super::{ArrayConfig, Model, Support, Target, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

/// Array factor and power at one `(t, R_o, theta)` point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSample {
    pub time_s: f64,
    pub target: Target,
    pub af: Complex64,
    pub power: f64,
}

impl BeamSample {
    pub fn evaluate(config: &ArrayConfig, target: Target, t: f64) -> Self {
        let af = array_factor(config, &target, t);
        Self {
            time_s: t,
            target,
            af,
            power: af.norm_sqr(),
        }
    }
}

/// Exact array factor over the elements active at `t`.
///
/// `Phi_m = m (f_o (t - t_o) + f_c d sin(theta) / c + m f_o d sin(theta) / c)` and the
/// result is `sum w_m exp(-j 2 pi Phi_m)` over the elements whose pulse overlaps
/// the target. Zero outside `[t_o - tau_{M-1}, t_o + T]`.
pub fn array_factor(config: &ArrayConfig, target: &Target, t: f64) -> Complex64 {
    let state = classify_state(config, target, t);
    subarray_factor(config, state.active, target, t)
}

/// Exact-phase sum over an explicit element range, ignoring pulse timing.
pub fn subarray_factor(
    config: &ArrayConfig,
    elements: Range<usize>,
    target: &Target,
    t: f64,
) -> Complex64 {
    let sin_theta = target.angle_rad().sin();
    let linear = config.offset_hz() * (t - target.delay())
        + config.carrier_hz() * config.spacing_m() * sin_theta / SPEED_OF_LIGHT;
    let quad = config.offset_hz() * config.spacing_m() * sin_theta / SPEED_OF_LIGHT;
    let weights = config.weights();
    let mut sum = Complex64::new(0.0, 0.0);
    for m in elements.take_while(|&m| m < weights.len()) {
        let mf = m as f64;
        let phi = mf * (linear + mf * quad);
        sum += weights[m] * cis(-2.0 * PI * phi.rem_euclid(1.0));
    }
    sum
}

/// `sum w_m exp(-j 2 pi m [f_o (t - R_o/c) + sin(theta)/2])` with no time support.
///
/// Requires `d = lambda / 2` so that `f_c d / c = 1/2`.
pub fn array_factor_compact(config: &ArrayConfig, target: &Target, t: f64) -> Result<Complex64> {
    config.require_half_wavelength()?;
    Ok(compact_sum(
        config.weights(),
        config.offset_hz() * (t - target.delay()) + 0.5 * target.angle_rad().sin(),
    ))
}

/// `sum w_m exp(-j 2 pi f m)`: the DFT of the weights at normalized spatial frequency `f`.
pub(crate) fn compact_sum(weights: &[Complex64], f_theta: f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for (m, w) in weights.iter().enumerate() {
        let phase = (m as f64 * f_theta).rem_euclid(1.0);
        sum += w * cis(-2.0 * PI * phase);
    }
    sum
}

/// Complex array factor under the chosen model and support.
///
/// The pulsed compact model ignores path differences, so its support is the
/// reference window `[t_o, t_o + T]`.
pub fn model_factor(
    config: &ArrayConfig,
    target: &Target,
    t: f64,
    model: Model,
    support: Support,
) -> Result<Complex64> {
    match (model, support) {
        (Model::Exact, Support::Pulsed) => Ok(array_factor(config, target, t)),
        (Model::Exact, Support::ContinuousWave) => {
            Ok(subarray_factor(config, 0..config.m_antennas(), target, t))
        }
        (Model::Compact, support) => {
            let t_o = target.delay();
            if support == Support::Pulsed && !(t_o <= t && t <= t_o + config.pulse_s()) {
                config.require_half_wavelength()?;
                return Ok(Complex64::new(0.0, 0.0));
            }
            array_factor_compact(config, target, t)
        }
    }
}

/// Beampattern `B = |AF|^2`.
pub fn beampattern(
    config: &ArrayConfig,
    target: &Target,
    t: f64,
    model: Model,
    support: Support,
) -> Result<f64> {
    model_factor(config, target, t, model, support).map(|af| af.norm_sqr())
}

/// Steady-state beampattern; errors when `t` is outside the window where all
/// `M` elements illuminate the target.
pub fn steady_state_beampattern(config: &ArrayConfig, target: &Target, t: f64) -> Result<f64> {
    match steady_window(config, target) {
        Some((start, end)) if start <= t && t <= end => {
            Ok(subarray_factor(config, 0..config.m_antennas(), target, t).norm_sqr())
        }
        Some((start, end)) => Err(Error::OutsideSteadyWindow { t, start, end }),
        None => Err(Error::OutsideSteadyWindow {
            t,
            start: f64::NAN,
            end: f64::NAN,
        }),
    }
}

#[inline]
fn cis(phase: f64) -> Complex64 {
    let (s, c) = phase.sin_cos();
    Complex64::new(c, s)
}
