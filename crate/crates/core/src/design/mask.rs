use crate::error::{Error, Result};

/// Desired `|AF|` on a uniform grid of normalized spatial frequency
/// `f_theta = sin(theta) / 2`, bins `f_k = -0.5 + k / K`, `k = 0..K`.
///
/// The grid is half-open, so `theta = +90 deg` aliases onto the `-90 deg` bin.
#[derive(Debug, Clone, PartialEq)]
pub struct DesiredPattern {
    mask: Vec<f64>,
    regions_deg: Vec<(f64, f64)>,
}

impl DesiredPattern {
    /// Arbitrary non-negative mask, one value per bin.
    pub fn from_mask(mask: Vec<f64>) -> Result<Self> {
        if mask.len() < 2 {
            return Err(Error::GridTooSmall {
                k: mask.len(),
                min: 2,
            });
        }
        if let Some((index, &value)) = mask
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
        {
            return Err(Error::InvalidMask { index, value });
        }
        Ok(Self {
            mask,
            regions_deg: Vec::new(),
        })
    }

    pub fn grid_size(&self) -> usize {
        self.mask.len()
    }

    pub fn mask(&self) -> &[f64] {
        &self.mask
    }

    /// The angular intervals the mask was built from (empty for raw masks).
    pub fn regions_deg(&self) -> &[(f64, f64)] {
        &self.regions_deg
    }

    pub fn f_theta(&self, k: usize) -> f64 {
        bin_frequency(k, self.mask.len())
    }

    pub fn angle_rad(&self, k: usize) -> f64 {
        (2.0 * self.f_theta(k)).asin()
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.mask.len()).map(|k| self.f_theta(k))
    }
}

pub(crate) fn bin_frequency(k: usize, grid_size: usize) -> f64 {
    -0.5 + k as f64 / grid_size as f64
}

/// Binary mask: bin `k` is 1 when `asin(2 f_k)` falls inside any interval.
///
/// Interval endpoints may be given in either order.
pub fn region_mask(regions_deg: &[(f64, f64)], grid_size: usize) -> Result<DesiredPattern> {
    if regions_deg.is_empty() {
        return Err(Error::EmptyRegions);
    }
    if grid_size < 2 {
        return Err(Error::GridTooSmall {
            k: grid_size,
            min: 2,
        });
    }
    let regions: Vec<(f64, f64)> = regions_deg
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    for &(lo, hi) in &regions {
        if !(lo >= -90.0 && hi <= 90.0) {
            return Err(Error::RegionOutOfRange { lo, hi });
        }
    }
    let mask = (0..grid_size)
        .map(|k| {
            let theta = (2.0 * bin_frequency(k, grid_size)).asin().to_degrees();
            let inside = regions.iter().any(|&(lo, hi)| lo <= theta && theta <= hi);
            if inside {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    Ok(DesiredPattern {
        mask,
        regions_deg: regions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_region_block() {
        let d = region_mask(&[(-20.0, 20.0)], 64).unwrap();
        let edge = 20f64.to_radians().sin() / 2.0;
        assert!((edge - 0.1710).abs() < 1e-4);
        for (k, f) in d.frequencies().enumerate() {
            let expected = if f.abs() <= edge { 1.0 } else { 0.0 };
            assert_eq!(d.mask()[k], expected, "bin {k} f {f}");
        }
        let ones: Vec<usize> = (0..64).filter(|&k| d.mask()[k] == 1.0).collect();
        assert_eq!(ones.len(), ones.last().unwrap() - ones[0] + 1, "contiguous");
    }

    #[test]
    fn dual_region_symmetric() {
        let d = region_mask(&[(-20.0, -40.0), (20.0, 40.0)], 64).unwrap();
        assert_eq!(d.regions_deg(), &[(-40.0, -20.0), (20.0, 40.0)]);
        // f_k and f_{K-k} mirror each other
        for k in 1..64 {
            assert_eq!(d.mask()[k], d.mask()[64 - k]);
        }
        assert_eq!(d.mask()[32], 0.0);
        let blocks = (1..64).filter(|&k| d.mask()[k] != d.mask()[k - 1]).count();
        assert_eq!(blocks, 4);
    }

    #[test]
    fn full_range_all_ones() {
        let d = region_mask(&[(-90.0, 90.0)], 32).unwrap();
        assert!(d.mask().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(region_mask(&[], 16), Err(Error::EmptyRegions));
        assert!(matches!(
            region_mask(&[(-95.0, 0.0)], 16),
            Err(Error::RegionOutOfRange { .. })
        ));
        assert!(matches!(
            region_mask(&[(0.0, 10.0)], 1),
            Err(Error::GridTooSmall { .. })
        ));
        assert!(matches!(
            DesiredPattern::from_mask(vec![1.0, -0.5]),
            Err(Error::InvalidMask { index: 1, .. })
        ));
    }
}
