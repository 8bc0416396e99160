//! Pulse-averaged transmit power `P(theta) = a(theta)^H R a(theta)` and the
//! spatial exploration (SE) it reveals.
//!
//! Over one pulse the instantaneous beam slides across the `sin(theta)` axis,
//! so the averaged pattern is a plateau whose edges sit where the
//! `P1_1`/`P1_2` sub-terms cross zero:
//! `sin(theta_1) = -(2 f_o T + phi_o / pi)` and `sin(theta_2) = -phi_o / pi`.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::beamwidth::checked_asin;
use super::correlation::{correlation_matrix, sinc, steering_vector};
use crate::error::{Error, Result};
use crate::model::{ArrayConfig, Target};

/// Sampled average pattern with its predicted plateau edges.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragePattern {
    pub angles_rad: Vec<f64>,
    pub power: Vec<f64>,
    pub edges: SpatialExploration,
}

/// Plateau edges and width, in both the angle and `sin(theta)` domains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialExploration {
    pub theta1_rad: f64,
    pub theta2_rad: f64,
    pub sin_theta1: f64,
    pub sin_theta2: f64,
    /// `theta_2 - theta_1`.
    pub se_exact_rad: f64,
    /// `2 f_o T + (2 phi_o / pi) (f_o T)^2`.
    pub se_approx_rad: f64,
}

/// Closed-form SE for progressive-phase weights. Fails when
/// `|2 f_o T + phi_o / pi| > 1`, which is where the `f_o T` bound breaks.
pub fn spatial_exploration(fot: f64, phi_o: f64) -> Result<SpatialExploration> {
    let sin_theta1 = -(2.0 * fot + phi_o / PI);
    let sin_theta2 = 0.0 - phi_o / PI;
    let theta1_rad = checked_asin("theta_1", sin_theta1)?;
    let theta2_rad = checked_asin("theta_2", sin_theta2)?;
    Ok(SpatialExploration {
        theta1_rad,
        theta2_rad,
        sin_theta1,
        sin_theta2,
        se_exact_rad: theta2_rad - theta1_rad,
        se_approx_rad: 2.0 * fot + 2.0 * phi_o / PI * fot * fot,
    })
}

/// Average power through the path-delay-free correlation matrix plus the
/// closed-form plateau edges.
pub fn average_power(config: &ArrayConfig, angles_rad: &[f64]) -> Result<AveragePattern> {
    let edges = spatial_exploration(config.fot(), config.initial_phase_rad())?;
    Ok(AveragePattern {
        angles_rad: angles_rad.to_vec(),
        power: average_power_curve(config, angles_rad),
        edges,
    })
}

/// `a^H R a` at each angle, for arbitrary weights. Never fails, so it also
/// serves configurations that violate the `f_o T` bound.
pub fn average_power_curve(config: &ArrayConfig, angles_rad: &[f64]) -> Vec<f64> {
    // with tau ignored the matrix does not depend on the target
    let anchor = Target::new(0.0, 0.0).expect("origin is a valid target");
    let r = correlation_matrix(config, &anchor, true);
    angles_rad
        .par_iter()
        .map(|&theta| r.quadratic_form(&steering_vector(config, theta)))
        .collect()
}

/// Double sum collapsed onto lag `n`:
/// `N + 2 sum_{n=1}^{N-1} (N - n) sin(n gamma) cos(n kappa) / (n gamma)`,
/// `gamma = pi f_o T`, `kappa = 2 pi f_theta + pi f_o T + phi_o`, `f_theta = sin(theta)/2`.
///
/// Holds for progressive-phase weights `exp(-j m phi_o)` only.
pub fn average_power_closed_form(m_antennas: usize, fot: f64, phi_o: f64, theta: f64) -> f64 {
    let n_total = m_antennas as f64;
    let gamma = PI * fot;
    let kappa = PI * theta.sin() + gamma + phi_o;
    let mut p = n_total;
    for n in 1..m_antennas {
        let nf = n as f64;
        p += 2.0 * (n_total - nf) * sinc(nf * gamma) * (nf * kappa).cos();
    }
    p
}

/// Sub-terms of `P = N + (N / gamma) P1 - (1 / gamma) P2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerComponents {
    pub p1: f64,
    pub p1_1: f64,
    pub p1_2: f64,
    pub p2: f64,
    pub p2_1: f64,
    pub p2_2: f64,
    pub gamma: f64,
}

impl PowerComponents {
    /// Reassembles `P` from the decomposition.
    pub fn total(&self, m_antennas: usize) -> f64 {
        let n = m_antennas as f64;
        n + n / self.gamma * self.p1 - self.p2 / self.gamma
    }
}

/// `P1`/`P2` decomposition; `None` when `f_o T = 0` (the split divides by `gamma`).
pub fn power_components(
    m_antennas: usize,
    fot: f64,
    phi_o: f64,
    theta: f64,
) -> Option<PowerComponents> {
    let gamma = PI * fot;
    if gamma == 0.0 {
        return None;
    }
    let kappa = PI * theta.sin() + gamma + phi_o;
    let (mut p1_1, mut p1_2, mut p2_1, mut p2_2) = (0.0, 0.0, 0.0, 0.0);
    for n in 1..m_antennas {
        let nf = n as f64;
        let plus = (nf * (gamma + kappa)).sin();
        let minus = (nf * (gamma - kappa)).sin();
        p1_1 += plus / nf;
        p1_2 += minus / nf;
        p2_1 += plus;
        p2_2 += minus;
    }
    Some(PowerComponents {
        p1: p1_1 + p1_2,
        p1_1,
        p1_2,
        p2: p2_1 + p2_2,
        p2_1,
        p2_2,
        gamma,
    })
}

/// Angular width of the contiguous region around the peak that stays within
/// `threshold_db` of the peak level.
pub fn measure_se_empirical(pattern: &AveragePattern, threshold_db: f64) -> Result<f64> {
    let (lo, hi) = plateau_edges(&pattern.angles_rad, &pattern.power, threshold_db)?;
    Ok(hi - lo)
}

/// Edges of the above-threshold region containing the peak, linearly
/// interpolated between samples. A region reaching the end of the grid takes
/// the last sample as its edge.
pub fn plateau_edges(angles: &[f64], power: &[f64], threshold_db: f64) -> Result<(f64, f64)> {
    const MIN_SAMPLES: usize = 3;
    let (peak, peak_p) = power
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, &p)| {
            if p > best.1 {
                (i, p)
            } else {
                best
            }
        });
    if peak_p.is_nan() || peak_p <= 0.0 || angles.len() != power.len() {
        return Err(Error::PlateauNotFound { min: MIN_SAMPLES });
    }
    let level = peak_p * 10f64.powf(-threshold_db.abs() / 10.0);

    let mut left = peak;
    while left > 0 && power[left - 1] >= level {
        left -= 1;
    }
    let mut right = peak;
    while right + 1 < power.len() && power[right + 1] >= level {
        right += 1;
    }
    if right - left + 1 < MIN_SAMPLES {
        return Err(Error::PlateauNotFound { min: MIN_SAMPLES });
    }

    let cross = |inside: usize, outside: usize| {
        let (pi, po) = (power[inside], power[outside]);
        let frac = if pi == po {
            0.0
        } else {
            (pi - level) / (pi - po)
        };
        angles[inside] + frac * (angles[outside] - angles[inside])
    };
    let lo = if left == 0 {
        angles[0]
    } else {
        cross(left, left - 1)
    };
    let hi = if right + 1 == power.len() {
        angles[right]
    } else {
        cross(right, right + 1)
    };
    Ok((lo.min(hi), lo.max(hi)))
}
