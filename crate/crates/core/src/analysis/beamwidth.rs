use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::ArrayConfig;

/// Peak, first null and Rayleigh beamwidth of the steady-state pattern at `t = t_o`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamwidthReport {
    pub theta_first_null_rad: f64,
    pub theta_peak_rad: f64,
    /// `theta_1N - theta_max`.
    pub bw_exact_rad: f64,
    /// `2/M + phi_o^2 / (M pi^2)`.
    pub bw_approx_rad: f64,
}

/// Closed-form Rayleigh beamwidth for progressive-phase weights `exp(-j m phi_o)`.
pub fn rayleigh_beamwidth(config: &ArrayConfig) -> Result<BeamwidthReport> {
    let m = config.m_antennas() as f64;
    let phi = config.initial_phase_rad();
    let theta_first_null_rad = checked_asin("first null", 2.0 / m - phi / PI)?;
    let theta_peak_rad = checked_asin("peak", -phi / PI)?;
    Ok(BeamwidthReport {
        theta_first_null_rad,
        theta_peak_rad,
        bw_exact_rad: theta_first_null_rad - theta_peak_rad,
        bw_approx_rad: 2.0 / m + phi * phi / (m * PI * PI),
    })
}

pub(crate) fn checked_asin(what: &'static str, value: f64) -> Result<f64> {
    if (-1.0..=1.0).contains(&value) {
        Ok(value.asin())
    } else {
        Err(Error::ArcsineDomain { what, value })
    }
}

/// Locates the global peak of a sampled pattern and the first local minimum to
/// its right. Returns `(peak_angle, null_angle)`; `None` if the pattern keeps
/// falling to the end of the grid.
pub fn measure_peak_to_null(angles: &[f64], power: &[f64]) -> Option<(f64, f64)> {
    let (peak, _) = power
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, &p)| {
            if p > best.1 {
                (i, p)
            } else {
                best
            }
        });
    let mut i = peak;
    while i + 1 < power.len() && power[i + 1] <= power[i] {
        i += 1;
    }
    (i + 1 < power.len()).then(|| (angles[peak], angles[i]))
}
