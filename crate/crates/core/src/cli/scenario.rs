//! Scenario files: TOML with a versioned `schema` key.
//!
//! ```toml
//! schema = "fda-beam/1"
//!
//! [array]
//! m_antennas = 20
//! spacing_m = "half_wavelength"   # or a number in metres
//! carrier_hz = 5e9
//! offset_hz = 100.0
//! pulse_s = 1e-3
//! initial_phase_deg = 0.0
//! # weights_file = "weights.txt"  # overrides the progressive-phase weights
//!
//! [target]
//! range_m = 3e5
//! angle_deg = 30.0
//!
//! [design]
//! regions_deg = [[-20.0, 20.0]]
//! grid_size = 256
//! # times_s = [1e-3, 1.5e-3, 2e-3]
//!
//! [sweep]
//! model = "exact"
//! continuous_wave = false
//! # time_s = 1e-3
//! axes = [{ name = "angle", start = -90.0, stop = 90.0, count = 721 }]
//!
//! [output]
//! stem = "out/pattern"
//! formats = ["csv"]
//! plot_script = false
//! ```
//!
//! Angle axes and angles are in degrees, ranges in metres, times in seconds.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::io::read_weights;
use super::CliError;
use crate::design::{region_mask, DesiredPattern};
use crate::model::{half_wavelength, ArrayConfig, Axis, AxisKind, Model, Target};

pub const SCHEMA: &str = "fda-beam/1";

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub schema: String,
    pub array: ArraySection,
    pub target: TargetSection,
    pub design: Option<DesignSection>,
    #[serde(default)]
    pub sweep: SweepSection,
    #[serde(default)]
    pub output: OutputSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArraySection {
    pub m_antennas: usize,
    pub spacing_m: Option<Spacing>,
    pub carrier_hz: f64,
    pub offset_hz: f64,
    pub pulse_s: f64,
    #[serde(default)]
    pub initial_phase_deg: f64,
    pub weights_file: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Spacing {
    Metres(f64),
    Named(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSection {
    pub range_m: f64,
    pub angle_deg: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignSection {
    pub regions_deg: Vec<(f64, f64)>,
    pub grid_size: usize,
    pub times_s: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    #[serde(default)]
    pub axes: Vec<AxisSection>,
    pub model: Option<ModelName>,
    #[serde(default)]
    pub continuous_wave: bool,
    pub time_s: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSection {
    pub name: AxisName,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisName {
    Time,
    Range,
    Angle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelName {
    Exact,
    Compact,
}

impl From<ModelName> for Model {
    fn from(m: ModelName) -> Self {
        match m {
            ModelName::Exact => Model::Exact,
            ModelName::Compact => Model::Compact,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default = "default_stem")]
    pub stem: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<String>,
    #[serde(default)]
    pub plot_script: bool,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self {
            stem: default_stem(),
            formats: default_formats(),
            plot_script: false,
        }
    }
}

fn default_stem() -> PathBuf {
    PathBuf::from("fda-beam")
}

fn default_formats() -> Vec<String> {
    vec!["csv".to_string()]
}

/// A validated scenario ready to run.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub config: ArrayConfig,
    pub target: Target,
    pub design: Option<Design>,
    pub axes: Vec<Axis>,
    pub model: Option<Model>,
    pub continuous_wave: bool,
    pub time_s: Option<f64>,
    pub stem: PathBuf,
    pub plot_script: bool,
}

#[derive(Debug, Clone)]
pub struct Design {
    pub desired: DesiredPattern,
    pub times_s: Option<Vec<f64>>,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::parse(&text, base)
    }

    /// Parses and validates; relative `weights_file` paths resolve against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self, CliError> {
        let file: ScenarioFile =
            toml::from_str(text).map_err(|e| CliError::Validation(format!("scenario: {e}")))?;
        if file.schema != SCHEMA {
            return Err(CliError::Validation(format!(
                "unsupported schema `{}`, expected `{SCHEMA}`",
                file.schema
            )));
        }
        let a = &file.array;
        let mut config = ArrayConfig::new(a.m_antennas, a.carrier_hz, a.offset_hz, a.pulse_s)?;
        match &a.spacing_m {
            None => {}
            Some(Spacing::Metres(d)) => config = config.with_spacing(*d)?,
            Some(Spacing::Named(s)) if s == "half_wavelength" => {
                config = config.with_spacing(half_wavelength(a.carrier_hz))?
            }
            Some(Spacing::Named(s)) => {
                return Err(CliError::Validation(format!(
                    "spacing_m must be a number or \"half_wavelength\", got \"{s}\""
                )))
            }
        }
        if !a.initial_phase_deg.is_finite() {
            return Err(CliError::Validation(format!(
                "initial_phase_deg must be finite, got {}",
                a.initial_phase_deg
            )));
        }
        config = config.with_initial_phase(a.initial_phase_deg.to_radians())?;
        if let Some(w) = &a.weights_file {
            let path = base.join(w);
            config = config.with_weights(read_weights(&path)?)?;
        }

        let target = Target::from_degrees(file.target.range_m, file.target.angle_deg)?;

        let design = match &file.design {
            None => None,
            Some(d) => {
                let desired = region_mask(&d.regions_deg, d.grid_size)?;
                if d.grid_size < config.m_antennas() {
                    return Err(crate::Error::GridTooSmall {
                        k: d.grid_size,
                        min: config.m_antennas(),
                    }
                    .into());
                }
                if let Some(times) = &d.times_s {
                    check_times(times)?;
                }
                Some(Design {
                    desired,
                    times_s: d.times_s.clone(),
                })
            }
        };

        let s = &file.sweep;
        if s.axes.len() > 2 {
            return Err(CliError::Validation(format!(
                "sweep takes one or two axes, got {}",
                s.axes.len()
            )));
        }
        let axes = s
            .axes
            .iter()
            .map(axis_from)
            .collect::<Result<Vec<_>, _>>()?;
        if axes.len() == 2 && axes[0].kind == axes[1].kind {
            return Err(CliError::Validation("sweep axes must differ".into()));
        }
        if let Some(t) = s.time_s {
            check_times(&[t])?;
        }

        Ok(Scenario {
            config,
            target,
            design,
            axes,
            model: s.model.map(Model::from),
            continuous_wave: s.continuous_wave,
            time_s: s.time_s,
            stem: file.output.stem.clone(),
            plot_script: file.output.plot_script,
        })
        .and_then(|sc| {
            for f in &file.output.formats {
                if f != "csv" {
                    return Err(CliError::Validation(format!(
                        "unsupported output format `{f}`"
                    )));
                }
            }
            Ok(sc)
        })
    }
}

fn check_times(times: &[f64]) -> Result<(), CliError> {
    match times.iter().find(|t| !t.is_finite()) {
        Some(t) => Err(CliError::Validation(format!("time {t} s is not finite"))),
        None if times.is_empty() => Err(CliError::Validation("times_s is empty".into())),
        None => Ok(()),
    }
}

fn axis_from(a: &AxisSection) -> Result<Axis, CliError> {
    let (kind, scale) = match a.name {
        AxisName::Time => (AxisKind::Time, 1.0),
        AxisName::Range => (AxisKind::Range, 1.0),
        AxisName::Angle => (AxisKind::Angle, std::f64::consts::PI / 180.0),
    };
    if a.count == 0 {
        return Err(crate::Error::EmptyAxis(kind.name()).into());
    }
    if a.count > 1 && a.start == a.stop {
        return Err(crate::Error::NonMonotoneAxis(kind.name()).into());
    }
    let axis = Axis::linspace(kind, a.start * scale, a.stop * scale, a.count);
    axis.validate()?;
    if kind == AxisKind::Angle {
        // endpoints given as +-90 deg can overshoot pi/2 by one ulp after scaling
        let clamped = axis
            .values
            .iter()
            .map(|v| v.clamp(-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2))
            .collect();
        return Ok(Axis::new(kind, clamped));
    }
    Ok(axis)
}
