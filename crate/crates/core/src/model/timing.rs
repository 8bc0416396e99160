use std::ops::Range;

use super::{ArrayConfig, Target, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

/// Interval of the beampattern response at a given instant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateKind {
    NotIlluminated,
    Transient1,
    Steady,
    Transient2,
    Expired,
}

/// Which elements currently illuminate the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeamState {
    pub kind: StateKind,
    pub active_antennas: usize,
    /// Indices of the active elements. Arrival times are monotone in `m`, so the set is contiguous.
    pub active: Range<usize>,
}

/// Arrival time at the target of the leading edge of element `m`'s pulse,
/// `(R_o - m d sin(theta)) / c`.
pub fn element_delay(config: &ArrayConfig, target: &Target, m: usize) -> Result<f64> {
    if m >= config.m_antennas() {
        return Err(Error::ElementIndex {
            index: m,
            count: config.m_antennas(),
        });
    }
    Ok(arrival(config, target, m))
}

pub(crate) fn arrival(config: &ArrayConfig, target: &Target, m: usize) -> f64 {
    (target.range_m() - m as f64 * config.spacing_m() * target.angle_rad().sin()) / SPEED_OF_LIGHT
}

/// Earliest and latest pulse arrival over all elements.
fn arrival_span(config: &ArrayConfig, target: &Target) -> (f64, f64) {
    let a0 = arrival(config, target, 0);
    let last = arrival(config, target, config.m_antennas() - 1);
    (a0.min(last), a0.max(last))
}

/// Counts the elements whose pulse overlaps the target at `t` and names the interval.
///
/// Element `m` is active on the closed interval `[a_m, a_m + T]`.
pub fn classify_state(config: &ArrayConfig, target: &Target, t: f64) -> BeamState {
    let pulse = config.pulse_s();
    let mut first = None;
    let mut last = 0;
    for m in 0..config.m_antennas() {
        let a = arrival(config, target, m);
        if a <= t && t <= a + pulse {
            first.get_or_insert(m);
            last = m;
        }
    }
    let active = match first {
        Some(f) => f..last + 1,
        None => 0..0,
    };
    let count = active.len();
    let (first_arrival, last_arrival) = arrival_span(config, target);

    let kind = if count == config.m_antennas() {
        StateKind::Steady
    } else if count == 0 && t < first_arrival {
        StateKind::NotIlluminated
    } else if count == 0 && t > last_arrival + pulse {
        StateKind::Expired
    } else if t < last_arrival {
        StateKind::Transient1
    } else {
        StateKind::Transient2
    };

    BeamState {
        kind,
        active_antennas: count,
        active,
    }
}

/// Steady-state interval `[latest arrival, earliest expiry]`; `None` when the
/// pulse is shorter than the arrival spread and all elements never overlap.
///
/// For `theta > 0` this is `[t_o, t_o - tau_{M-1}(theta) + T]`.
pub fn steady_window(config: &ArrayConfig, target: &Target) -> Option<(f64, f64)> {
    let (first, last) = arrival_span(config, target);
    let end = first + config.pulse_s();
    (last <= end).then_some((last, end))
}
