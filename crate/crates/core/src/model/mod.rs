//! Signal model of a pulsed frequency-diverse array.
//!
//! Element `m` of a uniform linear array transmits a pulse of length `T` at
//! carrier `f_c + m f_o`. The path from element `m` to a far-field target at
//! range `R_o` and angle `theta` is `R_o - m d sin(theta)`, so each element's
//! pulse reaches the target at its own instant. The array factor only sums the
//! elements whose pulse currently overlaps the target, which produces the
//! transient / steady / transient sequence of beampatterns.

mod grid;
pub(crate) mod pattern;
mod timing;

pub use grid::{sweep, Axis, AxisKind, BeamGrid, FixedPoint};
pub use pattern::{
    array_factor, array_factor_compact, beampattern, model_factor, steady_state_beampattern,
    subarray_factor, BeamSample,
};
pub use timing::{classify_state, element_delay, steady_window, BeamState, StateKind};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Propagation speed used throughout, in m/s.
///
/// The round value keeps `R_o = 300 km` at exactly `t_o = 1 ms`.
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Relative tolerance on `d = lambda / 2` accepted by the compact model.
pub const HALF_WAVELENGTH_RTOL: f64 = 1e-9;

/// Which array-factor expression to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Model {
    /// Full phase including the `m^2 f_o d sin(theta) / c` term and per-element arrival times.
    #[default]
    Exact,
    /// Quadratic term dropped, `f_c d / c = 1/2`, path-difference delays ignored.
    Compact,
}

/// Time support of the transmitted waveform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Support {
    /// Each element radiates for `T` seconds.
    #[default]
    Pulsed,
    /// No support window: every element contributes at every instant.
    ContinuousWave,
}

/// Geometry and waveform of the transmit array.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayConfig {
    m_antennas: usize,
    spacing_m: f64,
    carrier_hz: f64,
    offset_hz: f64,
    pulse_s: f64,
    initial_phase_rad: f64,
    weights: Vec<Complex64>,
}

impl ArrayConfig {
    /// Half-wavelength array with zero initial phase (uniform weights).
    pub fn new(m_antennas: usize, carrier_hz: f64, offset_hz: f64, pulse_s: f64) -> Result<Self> {
        if m_antennas == 0 {
            return Err(Error::NoElements);
        }
        positive("carrier_hz", carrier_hz)?;
        positive("pulse_s", pulse_s)?;
        finite("offset_hz", offset_hz)?;
        Ok(Self {
            m_antennas,
            spacing_m: half_wavelength(carrier_hz),
            carrier_hz,
            offset_hz,
            pulse_s,
            initial_phase_rad: 0.0,
            weights: progressive_weights(m_antennas, 0.0),
        })
    }

    pub fn with_spacing(mut self, spacing_m: f64) -> Result<Self> {
        positive("spacing_m", spacing_m)?;
        self.spacing_m = spacing_m;
        Ok(self)
    }

    pub fn with_offset(mut self, offset_hz: f64) -> Result<Self> {
        finite("offset_hz", offset_hz)?;
        self.offset_hz = offset_hz;
        Ok(self)
    }

    pub fn with_pulse(mut self, pulse_s: f64) -> Result<Self> {
        positive("pulse_s", pulse_s)?;
        self.pulse_s = pulse_s;
        Ok(self)
    }

    /// Sets `phi_o` and replaces the weights with `w_m = exp(-j m phi_o)`.
    pub fn with_initial_phase(mut self, phi_o: f64) -> Result<Self> {
        finite("initial_phase_rad", phi_o)?;
        self.initial_phase_rad = phi_o;
        self.weights = progressive_weights(self.m_antennas, phi_o);
        Ok(self)
    }

    /// Installs arbitrary complex weights, one per element.
    pub fn with_weights(mut self, weights: Vec<Complex64>) -> Result<Self> {
        if weights.len() != self.m_antennas {
            return Err(Error::WeightCount {
                expected: self.m_antennas,
                got: weights.len(),
            });
        }
        if let Some(w) = weights
            .iter()
            .find(|w| !(w.re.is_finite() && w.im.is_finite()))
        {
            return Err(Error::NotFinite {
                name: "weight",
                value: if w.re.is_finite() { w.im } else { w.re },
            });
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn m_antennas(&self) -> usize {
        self.m_antennas
    }

    pub fn spacing_m(&self) -> f64 {
        self.spacing_m
    }

    pub fn carrier_hz(&self) -> f64 {
        self.carrier_hz
    }

    pub fn offset_hz(&self) -> f64 {
        self.offset_hz
    }

    pub fn pulse_s(&self) -> f64 {
        self.pulse_s
    }

    pub fn initial_phase_rad(&self) -> f64 {
        self.initial_phase_rad
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    /// `f_o T`, the product that sets the spatial exploration of the average pattern.
    pub fn fot(&self) -> f64 {
        self.offset_hz * self.pulse_s
    }

    pub fn wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.carrier_hz
    }

    pub fn is_half_wavelength(&self) -> bool {
        let expected = half_wavelength(self.carrier_hz);
        ((self.spacing_m - expected) / expected).abs() <= HALF_WAVELENGTH_RTOL
    }

    pub(crate) fn require_half_wavelength(&self) -> Result<()> {
        if self.is_half_wavelength() {
            Ok(())
        } else {
            Err(Error::SpacingNotHalfWavelength {
                spacing: self.spacing_m,
                expected: half_wavelength(self.carrier_hz),
            })
        }
    }
}

/// Far-field point illuminated by the array.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Target {
    range_m: f64,
    angle_rad: f64,
}

impl Target {
    pub fn new(range_m: f64, angle_rad: f64) -> Result<Self> {
        if !(range_m.is_finite() && range_m >= 0.0) {
            return Err(Error::InvalidRange(range_m));
        }
        if angle_rad.is_nan() || angle_rad.abs() > std::f64::consts::FRAC_PI_2 {
            return Err(Error::AngleOutOfRange(angle_rad));
        }
        Ok(Self { range_m, angle_rad })
    }

    pub fn from_degrees(range_m: f64, angle_deg: f64) -> Result<Self> {
        Self::new(range_m, angle_deg.to_radians())
    }

    pub fn range_m(&self) -> f64 {
        self.range_m
    }

    pub fn angle_rad(&self) -> f64 {
        self.angle_rad
    }

    /// One-way propagation delay `t_o = R_o / c` of the reference element.
    pub fn delay(&self) -> f64 {
        self.range_m / SPEED_OF_LIGHT
    }
}

pub fn half_wavelength(carrier_hz: f64) -> f64 {
    SPEED_OF_LIGHT / (2.0 * carrier_hz)
}

/// `w_m = exp(-j m phi_o)`.
pub fn progressive_weights(m_antennas: usize, phi_o: f64) -> Vec<Complex64> {
    (0..m_antennas)
        .map(|m| Complex64::from_polar(1.0, -(m as f64) * phi_o))
        .collect()
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositive { name, value })
    }
}

fn finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NotFinite { name, value })
    }
}
