use std::f64::consts::PI;

use num_complex::Complex64;

use super::mask::{bin_frequency, DesiredPattern};
use crate::error::{Error, Result};
use crate::model::pattern::compact_sum;
use crate::model::{
    sweep, ArrayConfig, Axis, AxisKind, BeamGrid, FixedPoint, Model, Support, Target,
};

// floor for the dB-normalized residual so empty mask bins stay finite
const RESIDUAL_DB_FLOOR: f64 = -60.0;

/// Inverse-transform weights plus how well they reproduce the mask.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesizedWeights {
    weights: Vec<Complex64>,
    residual: f64,
    residual_db: f64,
    complex_residual: f64,
    truncation_energy: f64,
    peak_gain: f64,
    tap_offset: usize,
}

impl SynthesizedWeights {
    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<Complex64> {
        self.weights
    }

    /// RMS of `|AF_k| - mask_k` over the design bins at `t = t_o`.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// RMS difference in dB after normalizing both patterns to their own peak
    /// (floored at -60 dB).
    pub fn residual_db(&self) -> f64 {
        self.residual_db
    }

    /// RMS of `AF_k - mask_k exp(-j 2 pi f_k c)` where `c` is the tap offset.
    /// Its square equals `truncation_energy`.
    pub fn complex_residual(&self) -> f64 {
        self.complex_residual
    }

    /// Energy of the `K - M` inverse-transform taps that were dropped.
    pub fn truncation_energy(&self) -> f64 {
        self.truncation_energy
    }

    /// Largest `|AF_k|` on the design grid.
    pub fn peak_gain(&self) -> f64 {
        self.peak_gain
    }

    /// Element index holding tap zero (`floor(M / 2)`).
    pub fn tap_offset(&self) -> usize {
        self.tap_offset
    }

    /// Weights rescaled so the design-grid peak of `|AF|` equals `peak`.
    pub fn scaled_to_peak(&self, peak: f64) -> Vec<Complex64> {
        if self.peak_gain == 0.0 {
            return self.weights.clone();
        }
        let s = peak / self.peak_gain;
        self.weights.iter().map(|w| w * s).collect()
    }
}

/// Inverse DFT of the mask, `tap(n) = (1/K) sum_k mask_k exp(j 2 pi f_k n)`.
pub fn inverse_taps(desired: &DesiredPattern, taps: std::ops::Range<i64>) -> Vec<Complex64> {
    let k_len = desired.grid_size();
    let mask = desired.mask();
    taps.map(|n| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &a) in mask.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let phase = (bin_frequency(k, k_len) * n as f64).rem_euclid(1.0);
            acc += Complex64::from_polar(a, 2.0 * PI * phase);
        }
        acc / k_len as f64
    })
    .collect()
}

/// `M` weights from the inverse transform of the mask.
///
/// Taps `n = -floor(M/2) ..= M - 1 - floor(M/2)` go to elements `0..M`, so
/// the window straddles the mainlobe of the tap sequence. At `t = t_o` the
/// array factor on bin `k` is then `mask_k` times the linear phase
/// `exp(-j 2 pi f_k floor(M/2))`; `|AF|` is unaffected.
pub fn synthesize_weights(
    desired: &DesiredPattern,
    m_antennas: usize,
) -> Result<SynthesizedWeights> {
    if m_antennas == 0 {
        return Err(Error::NoElements);
    }
    let k_len = desired.grid_size();
    if k_len < m_antennas {
        return Err(Error::GridTooSmall {
            k: k_len,
            min: m_antennas,
        });
    }
    let offset = m_antennas / 2;
    let first = -(offset as i64);
    let weights = inverse_taps(desired, first..first + m_antennas as i64);
    let dropped = inverse_taps(desired, first + m_antennas as i64..first + k_len as i64);
    let truncation_energy = dropped.iter().map(|t| t.norm_sqr()).sum();

    let mask = desired.mask();
    let achieved: Vec<Complex64> = (0..k_len)
        .map(|k| compact_sum(&weights, bin_frequency(k, k_len)))
        .collect();

    let mut sq = 0.0;
    let mut csq = 0.0;
    for (k, af) in achieved.iter().enumerate() {
        sq += (af.norm() - mask[k]).powi(2);
        let phase = (bin_frequency(k, k_len) * offset as f64).rem_euclid(1.0);
        let target = Complex64::from_polar(mask[k], -2.0 * PI * phase);
        csq += (af - target).norm_sqr();
    }
    let peak_gain = achieved.iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mask_peak = mask.iter().copied().fold(0.0, f64::max);
    let to_db = |v: f64, peak: f64| {
        if peak == 0.0 || v == 0.0 {
            RESIDUAL_DB_FLOOR
        } else {
            (20.0 * (v / peak).log10()).max(RESIDUAL_DB_FLOOR)
        }
    };
    let db_sq: f64 = achieved
        .iter()
        .zip(mask)
        .map(|(af, &d)| (to_db(af.norm(), peak_gain) - to_db(d, mask_peak)).powi(2))
        .sum();

    Ok(SynthesizedWeights {
        weights,
        residual: (sq / k_len as f64).sqrt(),
        residual_db: (db_sq / k_len as f64).sqrt(),
        complex_residual: (csq / k_len as f64).sqrt(),
        truncation_energy,
        peak_gain,
        tap_offset: offset,
    })
}

/// Compact pulsed beampattern of the designed weights over `angles_rad` at time `t`.
pub fn designed_pattern(
    weights: &SynthesizedWeights,
    config: &ArrayConfig,
    target: &Target,
    t: f64,
    angles_rad: &[f64],
) -> Result<BeamGrid> {
    let cfg = config.clone().with_weights(weights.weights().to_vec())?;
    let axis = Axis::new(AxisKind::Angle, angles_rad.to_vec());
    let fixed = FixedPoint {
        time_s: t,
        ..FixedPoint::at_target(target)
    };
    sweep(&cfg, &[axis], fixed, Model::Compact, Support::Pulsed)
}
