//! Closed-form predictors and their numerical cross-checks.

mod average;
mod beamwidth;
mod bound;
mod correlation;
pub mod oracle;

pub use average::{
    average_power, average_power_closed_form, average_power_curve, measure_se_empirical,
    plateau_edges, power_components, spatial_exploration, AveragePattern, PowerComponents,
    SpatialExploration,
};
pub use beamwidth::{measure_peak_to_null, rayleigh_beamwidth, BeamwidthReport};
pub use bound::{check_fot_bound, fot_verdict, FotVerdict, MARGINAL_FOT, MAX_FOT};
pub use correlation::{correlation_matrix, steering_vector, CorrelationMatrix};
