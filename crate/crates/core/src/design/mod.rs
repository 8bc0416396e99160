//! Weight synthesis on the normalized spatial-frequency grid.
//!
//! At `t = t_o` the compact array factor is the DFT of the weights evaluated at
//! `f_theta = sin(theta) / 2`, so a desired pattern sampled on a uniform
//! `f_theta` grid inverts to weights directly. For later `t` the pattern
//! slides along `f_theta` at rate `-f_o`.

mod drift;
mod mask;
mod synth;

pub use drift::{dwell_time, measure_shift, predict_shift, shifted_angle, wrap_f_theta};
pub use mask::{region_mask, DesiredPattern};
pub use synth::{designed_pattern, inverse_taps, synthesize_weights, SynthesizedWeights};
