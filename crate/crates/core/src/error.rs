use thiserror::Error;

/// Errors raised by the beampattern model, analysis and design routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("array must have at least one element")]
    NoElements,

    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("element index {index} out of range for {count} elements")]
    ElementIndex { index: usize, count: usize },

    #[error("target range must be finite and non-negative, got {0} m")]
    InvalidRange(f64),

    #[error("target angle {0} rad outside [-pi/2, pi/2]")]
    AngleOutOfRange(f64),

    #[error("compact model needs half-wavelength spacing ({expected} m), got {spacing} m")]
    SpacingNotHalfWavelength { spacing: f64, expected: f64 },

    #[error("t = {t} s outside steady-state window [{start}, {end}]")]
    OutsideSteadyWindow { t: f64, start: f64, end: f64 },

    #[error("sweep axis `{0}` is empty")]
    EmptyAxis(&'static str),

    #[error("sweep axis `{0}` is not strictly monotone")]
    NonMonotoneAxis(&'static str),

    #[error("sweep needs one or two distinct axes, got {0}")]
    AxisCount(usize),

    #[error("arcsine argument {value} for {what} outside [-1, 1]")]
    ArcsineDomain { what: &'static str, value: f64 },

    #[error("no plateau found: region above threshold spans fewer than {min} samples")]
    PlateauNotFound { min: usize },

    #[error("region [{lo}, {hi}] deg outside [-90, 90]")]
    RegionOutOfRange { lo: f64, hi: f64 },

    #[error("no desired regions given")]
    EmptyRegions,

    #[error("design grid has {k} bins, need at least {min}")]
    GridTooSmall { k: usize, min: usize },

    #[error("mask entry {index} is {value}, must be finite and non-negative")]
    InvalidMask { index: usize, value: f64 },

    #[error("point is never illuminated above threshold during the pulse")]
    NeverIlluminated,
}

pub type Result<T> = std::result::Result<T, Error>;
