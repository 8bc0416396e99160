use rayon::prelude::*;

use super::pattern::model_factor;
use super::{ArrayConfig, Model, Support, Target};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisKind {
    /// Observation instant, seconds.
    Time,
    /// Target range, meters.
    Range,
    /// Target angle, radians.
    Angle,
}

impl AxisKind {
    pub fn name(self) -> &'static str {
        match self {
            AxisKind::Time => "time",
            AxisKind::Range => "range",
            AxisKind::Angle => "angle",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub kind: AxisKind,
    pub values: Vec<f64>,
}

impl Axis {
    pub fn new(kind: AxisKind, values: Vec<f64>) -> Self {
        Self { kind, values }
    }

    /// `count` evenly spaced samples from `start` to `stop` inclusive.
    pub fn linspace(kind: AxisKind, start: f64, stop: f64, count: usize) -> Self {
        let values = match count {
            0 => Vec::new(),
            1 => vec![start],
            n => {
                let step = (stop - start) / (n - 1) as f64;
                (0..n)
                    .map(|i| {
                        if i == n - 1 {
                            stop
                        } else {
                            start + step * i as f64
                        }
                    })
                    .collect()
            }
        };
        Self { kind, values }
    }

    /// Non-empty, finite and strictly monotone.
    pub fn validate(&self) -> Result<()> {
        let name = self.kind.name();
        if self.values.is_empty() {
            return Err(Error::EmptyAxis(name));
        }
        if self.values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonMonotoneAxis(name));
        }
        let increasing = self.values.windows(2).all(|w| w[0] < w[1]);
        let decreasing = self.values.windows(2).all(|w| w[0] > w[1]);
        if increasing || decreasing {
            Ok(())
        } else {
            Err(Error::NonMonotoneAxis(name))
        }
    }
}

/// Coordinates held fixed for axes that are not swept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    pub time_s: f64,
    pub range_m: f64,
    pub angle_rad: f64,
}

impl FixedPoint {
    /// The target's own coordinates observed at `t_o`.
    pub fn at_target(target: &Target) -> Self {
        Self {
            time_s: target.delay(),
            range_m: target.range_m(),
            angle_rad: target.angle_rad(),
        }
    }
}

/// Beampattern samples over one or two swept axes, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamGrid {
    pub axes: Vec<Axis>,
    pub power: Vec<f64>,
    pub config: ArrayConfig,
}

impl BeamGrid {
    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.values.len()).collect()
    }

    /// Value at `(row, col)` of a 2-axis grid, or `(i, 0)` of a 1-axis grid.
    pub fn at(&self, row: usize, col: usize) -> f64 {
        let cols = self.axes.get(1).map_or(1, |a| a.values.len());
        self.power[row * cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        let cols = self.axes.get(1).map_or(1, |a| a.values.len());
        &self.power[row * cols..(row + 1) * cols]
    }

    /// Flat index and value of the largest sample (first one on ties).
    pub fn argmax(&self) -> (usize, f64) {
        self.power
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, p)| {
                if p > best.1 {
                    (i, p)
                } else {
                    best
                }
            })
    }

    /// Axis coordinates of a flat index.
    pub fn coords(&self, index: usize) -> Vec<f64> {
        let mut rest = index;
        let mut out = vec![0.0; self.axes.len()];
        for (k, axis) in self.axes.iter().enumerate().rev() {
            let n = axis.values.len();
            out[k] = axis.values[rest % n];
            rest /= n;
        }
        out
    }
}

/// Evaluates the beampattern over the cartesian product of `axes`.
///
/// Each cell is independent; the per-cell element sum always runs in ascending
/// `m`, so parallel and sequential evaluation agree bit for bit.
pub fn sweep(
    config: &ArrayConfig,
    axes: &[Axis],
    fixed: FixedPoint,
    model: Model,
    support: Support,
) -> Result<BeamGrid> {
    if axes.is_empty() || axes.len() > 2 || (axes.len() == 2 && axes[0].kind == axes[1].kind) {
        return Err(Error::AxisCount(axes.len()));
    }
    for axis in axes {
        axis.validate()?;
    }
    // validate every coordinate up front so the parallel pass cannot fail midway
    let mut probe = fixed;
    for axis in axes {
        for &v in &axis.values {
            set_coord(&mut probe, axis.kind, v);
            Target::new(probe.range_m, probe.angle_rad)?;
        }
        set_coord(&mut probe, axis.kind, axis.values[0]);
    }
    if model == Model::Compact {
        config.require_half_wavelength()?;
    }
    Target::new(fixed.range_m, fixed.angle_rad)?;

    let cols = axes.get(1).map_or(1, |a| a.values.len());
    let total = axes[0].values.len() * cols;
    let power = (0..total)
        .into_par_iter()
        .map(|i| {
            let mut p = fixed;
            set_coord(&mut p, axes[0].kind, axes[0].values[i / cols]);
            if let Some(second) = axes.get(1) {
                set_coord(&mut p, second.kind, second.values[i % cols]);
            }
            let target = Target::new(p.range_m, p.angle_rad).expect("validated above");
            model_factor(config, &target, p.time_s, model, support)
                .expect("validated above")
                .norm_sqr()
        })
        .collect();

    Ok(BeamGrid {
        axes: axes.to_vec(),
        power,
        config: config.clone(),
    })
}

fn set_coord(p: &mut FixedPoint, kind: AxisKind, v: f64) {
    match kind {
        AxisKind::Time => p.time_s = v,
        AxisKind::Range => p.range_m = v,
        AxisKind::Angle => p.angle_rad = v,
    }
}
