use std::f64::consts::PI;

use num_complex::Complex64;

use crate::model::{ArrayConfig, Target, SPEED_OF_LIGHT};

/// Correlation matrix of the transmitted waveforms,
/// `R(m, n) = (1/T) integral s_m(t) s_n(t)^* dt`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    size: usize,
    entries: Vec<Complex64>,
}

impl CorrelationMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.entries[m * self.size + n]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `a^H R a`.
    pub fn quadratic_form(&self, a: &[Complex64]) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..self.size {
            let row: Complex64 = self.entries[m * self.size..(m + 1) * self.size]
                .iter()
                .zip(a)
                .map(|(r, x)| r * x)
                .sum();
            acc += a[m].conj() * row;
        }
        acc.re
    }
}

/// `sin(x) / x` with the removable singularity filled in.
pub(crate) fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Builds `R` for the configured weights.
///
/// Element `m`'s waveform at the target is `w_m exp(-j 2 pi m f_o (t - t_o + tau_m))`,
/// present on `[t_o - tau_m, t_o - tau_m + T]`. With `ignore_tau` the path
/// delays are dropped and each entry reduces to
/// `w_m w_n^* exp(j pi eta T) sinc(pi eta T)`, `eta = f_o (n - m)`; otherwise the
/// integral runs over the actual overlap of the two pulses.
pub fn correlation_matrix(
    config: &ArrayConfig,
    target: &Target,
    ignore_tau: bool,
) -> CorrelationMatrix {
    let size = config.m_antennas();
    let pulse = config.pulse_s();
    let fo = config.offset_hz();
    let w = config.weights();
    let tau_unit = if ignore_tau {
        0.0
    } else {
        config.spacing_m() * target.angle_rad().sin() / SPEED_OF_LIGHT
    };

    let mut entries = Vec::with_capacity(size * size);
    for m in 0..size {
        for n in 0..size {
            let weight = w[m] * w[n].conj();
            if m == n {
                entries.push(weight);
                continue;
            }
            let (tau_m, tau_n) = (m as f64 * tau_unit, n as f64 * tau_unit);
            // overlap of the two pulses, relative to t_o
            let lo = (-tau_m).max(-tau_n);
            let hi = (-tau_m).min(-tau_n) + pulse;
            let len = hi - lo;
            if len <= 0.0 {
                entries.push(Complex64::new(0.0, 0.0));
                continue;
            }
            let eta = fo * (n as f64 - m as f64);
            let offset =
                Complex64::from_polar(1.0, -2.0 * PI * fo * (m as f64 * tau_m - n as f64 * tau_n));
            let integral =
                Complex64::from_polar(len / pulse * sinc(PI * eta * len), PI * eta * (hi + lo));
            entries.push(weight * offset * integral);
        }
    }
    CorrelationMatrix { size, entries }
}

/// `a(theta)_m = exp(j 2 pi m f_c d sin(theta) / c)`, i.e. `exp(j m pi sin(theta))` at half-wavelength spacing.
pub fn steering_vector(config: &ArrayConfig, theta: f64) -> Vec<Complex64> {
    let step = config.carrier_hz() * config.spacing_m() * theta.sin() / SPEED_OF_LIGHT;
    (0..config.m_antennas())
        .map(|m| Complex64::from_polar(1.0, 2.0 * PI * (m as f64 * step).rem_euclid(1.0)))
        .collect()
}
