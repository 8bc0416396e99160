//! Frequency-diverse-array (FDA) radar transmit beampatterns.
//!
//! * [`model`]: pulse timing with per-element path differences, the
//!   instantaneous array factor and beampattern, and grid sweeps.
//! * [`analysis`]: closed-form beamwidth, waveform correlation matrix,
//!   average power and spatial exploration, the `f_o T` bound, and the
//!   time-integration oracle that cross-checks them.
//! * [`design`]: DFT weight synthesis for desired angular regions and the
//!   time drift of the synthesized pattern.
//! * [`cli`]: scenario files, CSV/weights I/O and the command implementations
//!   behind the `fda-beam` binary.

pub mod analysis;
pub mod cli;
pub mod design;
pub mod error;
pub mod model;

pub use error::{Error, Result};
pub use model::{
    array_factor, array_factor_compact, beampattern, classify_state, element_delay, model_factor,
    steady_state_beampattern, sweep, ArrayConfig, Axis, AxisKind, BeamGrid, BeamSample, BeamState,
    FixedPoint, Model, StateKind, Support, Target, SPEED_OF_LIGHT,
};
