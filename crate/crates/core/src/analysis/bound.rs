use crate::model::ArrayConfig;

/// Above this `|f_o T|` the bound still holds but the left plateau edge is
/// close to endfire.
pub const MARGINAL_FOT: f64 = 0.45;
/// `|f_o T| <= 0.5` keeps `theta_1` inside the visible region.
pub const MAX_FOT: f64 = 0.5;

// absorbs rounding in products like 500 Hz * 1 ms
const BOUND_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FotVerdict {
    Valid,
    Marginal,
    Violated,
}

impl FotVerdict {
    /// True for both `Valid` and `Marginal`.
    pub fn satisfies_bound(self) -> bool {
        self != FotVerdict::Violated
    }

    pub fn label(self) -> &'static str {
        match self {
            FotVerdict::Valid => "VALID",
            FotVerdict::Marginal => "MARGINAL",
            FotVerdict::Violated => "VIOLATED",
        }
    }
}

pub fn check_fot_bound(config: &ArrayConfig) -> FotVerdict {
    fot_verdict(config.fot())
}

pub fn fot_verdict(fot: f64) -> FotVerdict {
    let x = fot.abs();
    if x <= MARGINAL_FOT {
        FotVerdict::Valid
    } else if x <= MAX_FOT + BOUND_SLACK {
        FotVerdict::Marginal
    } else {
        FotVerdict::Violated
    }
}
