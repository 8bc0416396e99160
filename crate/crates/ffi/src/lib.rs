//! C ABI over `fda_beam`.
//!
//! Arrays and synthesized weight sets are opaque handles created by
//! `fda_array_new` / `fda_weights_synthesize` and released with the matching
//! `_free`. Every fallible call returns an `FdaStatus`; on failure
//! `fda_last_error` yields a message for the calling thread. Angles are in
//! radians, ranges in metres, times in seconds.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fda_beam::analysis::{
    average_power_curve, check_fot_bound, rayleigh_beamwidth, spatial_exploration, FotVerdict,
};
use fda_beam::design::{
    dwell_time, predict_shift, region_mask, synthesize_weights, SynthesizedWeights,
};
use fda_beam::{
    classify_state, element_delay, model_factor, ArrayConfig, Model, StateKind, Support, Target,
};
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdaModel {
    Exact = 0,
    Compact = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdaSupport {
    Pulsed = 0,
    ContinuousWave = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdaStateKind {
    NotIlluminated = 0,
    Transient1 = 1,
    Steady = 2,
    Transient2 = 3,
    Expired = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdaVerdict {
    Valid = 0,
    Marginal = 1,
    Violated = 2,
}

/// Active elements are `first .. first + active`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FdaBeamState {
    pub kind: i32,
    pub active: usize,
    pub first: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FdaBeamwidth {
    pub theta_first_null: f64,
    pub theta_peak: f64,
    pub bw_exact: f64,
    pub bw_approx: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FdaSpatialExploration {
    pub theta1: f64,
    pub theta2: f64,
    pub sin_theta1: f64,
    pub sin_theta2: f64,
    pub se_exact: f64,
    pub se_approx: f64,
}

/// Opaque array configuration.
pub struct FdaArray {
    config: ArrayConfig,
}

/// Opaque synthesized weight set.
pub struct FdaWeights {
    inner: SynthesizedWeights,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl std::fmt::Display) {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn guard<F: FnOnce() -> Result<(), (FdaStatus, String)>>(f: F) -> FdaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FdaStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FdaStatus::Panic
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> (FdaStatus, String) {
    (FdaStatus::InvalidArgument, e.to_string())
}

fn null(what: &str) -> (FdaStatus, String) {
    (FdaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn array_ref<'a>(a: *const FdaArray) -> Result<&'a FdaArray, (FdaStatus, String)> {
    a.as_ref().ok_or_else(|| null("array"))
}

unsafe fn array_mut<'a>(a: *mut FdaArray) -> Result<&'a mut FdaArray, (FdaStatus, String)> {
    a.as_mut().ok_or_else(|| null("array"))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (FdaStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(
    p: *const T,
    len: usize,
    what: &str,
) -> Result<&'a [T], (FdaStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn model(m: FdaModel) -> Model {
    match m {
        FdaModel::Exact => Model::Exact,
        FdaModel::Compact => Model::Compact,
    }
}

fn support(s: FdaSupport) -> Support {
    match s {
        FdaSupport::Pulsed => Support::Pulsed,
        FdaSupport::ContinuousWave => Support::ContinuousWave,
    }
}

/// Message for the most recent failure on this thread; empty if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fda_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Half-wavelength array with uniform weights.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn fda_array_new(
    m_antennas: usize,
    carrier_hz: f64,
    offset_hz: f64,
    pulse_s: f64,
    out: *mut *mut FdaArray,
) -> FdaStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let config =
            ArrayConfig::new(m_antennas, carrier_hz, offset_hz, pulse_s).map_err(invalid)?;
        out.write(Box::into_raw(Box::new(FdaArray { config })));
        Ok(())
    })
}

/// # Safety
/// `array` must come from `fda_array_new` and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fda_array_free(array: *mut FdaArray) {
    if !array.is_null() {
        drop(Box::from_raw(array));
    }
}

/// # Safety
/// `array` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fda_array_set_spacing(array: *mut FdaArray, spacing_m: f64) -> FdaStatus {
    guard(|| {
        let a = array_mut(array)?;
        a.config = a.config.clone().with_spacing(spacing_m).map_err(invalid)?;
        Ok(())
    })
}

/// Sets `phi_o` and resets the weights to `exp(-j m phi_o)`.
///
/// # Safety
/// `array` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fda_array_set_initial_phase(
    array: *mut FdaArray,
    phi_o: f64,
) -> FdaStatus {
    guard(|| {
        let a = array_mut(array)?;
        a.config = a
            .config
            .clone()
            .with_initial_phase(phi_o)
            .map_err(invalid)?;
        Ok(())
    })
}

/// # Safety
/// `array` must be a live handle; `re` and `im` must each point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn fda_array_set_weights(
    array: *mut FdaArray,
    re: *const f64,
    im: *const f64,
    len: usize,
) -> FdaStatus {
    guard(|| {
        let a = array_mut(array)?;
        let re = slice(re, len, "re")?;
        let im = slice(im, len, "im")?;
        let w = re
            .iter()
            .zip(im)
            .map(|(&r, &i)| Complex64::new(r, i))
            .collect();
        a.config = a.config.clone().with_weights(w).map_err(invalid)?;
        Ok(())
    })
}

/// # Safety
/// `array` and `weights` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn fda_array_apply_weights(
    array: *mut FdaArray,
    weights: *const FdaWeights,
) -> FdaStatus {
    guard(|| {
        let a = array_mut(array)?;
        let w = weights.as_ref().ok_or_else(|| null("weights"))?;
        a.config = a
            .config
            .clone()
            .with_weights(w.inner.weights().to_vec())
            .map_err(invalid)?;
        Ok(())
    })
}

/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_array_fot(array: *const FdaArray, out: *mut f64) -> FdaStatus {
    guard(|| write(out, array_ref(array)?.config.fot(), "out"))
}

/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_element_delay(
    array: *const FdaArray,
    range_m: f64,
    angle_rad: f64,
    element: usize,
    out: *mut f64,
) -> FdaStatus {
    guard(|| {
        let a = array_ref(array)?;
        let tgt = Target::new(range_m, angle_rad).map_err(invalid)?;
        let d = element_delay(&a.config, &tgt, element).map_err(invalid)?;
        write(out, d, "out")
    })
}

/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_classify_state(
    array: *const FdaArray,
    range_m: f64,
    angle_rad: f64,
    t: f64,
    out: *mut FdaBeamState,
) -> FdaStatus {
    guard(|| {
        let a = array_ref(array)?;
        let tgt = Target::new(range_m, angle_rad).map_err(invalid)?;
        let st = classify_state(&a.config, &tgt, t);
        let kind = match st.kind {
            StateKind::NotIlluminated => FdaStateKind::NotIlluminated,
            StateKind::Transient1 => FdaStateKind::Transient1,
            StateKind::Steady => FdaStateKind::Steady,
            StateKind::Transient2 => FdaStateKind::Transient2,
            StateKind::Expired => FdaStateKind::Expired,
        };
        let state = FdaBeamState {
            kind: kind as i32,
            active: st.active_antennas,
            first: st.active.start,
        };
        write(out, state, "out")
    })
}

/// Complex array factor at `(t, range, angle)`.
///
/// # Safety
/// `array` must be a live handle; `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_array_factor(
    array: *const FdaArray,
    range_m: f64,
    angle_rad: f64,
    t: f64,
    model_sel: FdaModel,
    support_sel: FdaSupport,
    out_re: *mut f64,
    out_im: *mut f64,
) -> FdaStatus {
    guard(|| {
        let a = array_ref(array)?;
        if out_re.is_null() || out_im.is_null() {
            return Err(null("out"));
        }
        let tgt = Target::new(range_m, angle_rad).map_err(invalid)?;
        let af = model_factor(&a.config, &tgt, t, model(model_sel), support(support_sel))
            .map_err(invalid)?;
        out_re.write(af.re);
        out_im.write(af.im);
        Ok(())
    })
}

/// `|AF|^2`.
///
/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_beampattern(
    array: *const FdaArray,
    range_m: f64,
    angle_rad: f64,
    t: f64,
    model_sel: FdaModel,
    support_sel: FdaSupport,
    out: *mut f64,
) -> FdaStatus {
    guard(|| {
        let a = array_ref(array)?;
        let tgt = Target::new(range_m, angle_rad).map_err(invalid)?;
        let af = model_factor(&a.config, &tgt, t, model(model_sel), support(support_sel))
            .map_err(invalid)?;
        write(out, af.norm_sqr(), "out")
    })
}

/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_rayleigh_beamwidth(
    array: *const FdaArray,
    out: *mut FdaBeamwidth,
) -> FdaStatus {
    guard(|| {
        let r = rayleigh_beamwidth(&array_ref(array)?.config).map_err(invalid)?;
        let bw = FdaBeamwidth {
            theta_first_null: r.theta_first_null_rad,
            theta_peak: r.theta_peak_rad,
            bw_exact: r.bw_exact_rad,
            bw_approx: r.bw_approx_rad,
        };
        write(out, bw, "out")
    })
}

/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_fot_verdict(
    array: *const FdaArray,
    out: *mut FdaVerdict,
) -> FdaStatus {
    guard(|| {
        let v = match check_fot_bound(&array_ref(array)?.config) {
            FotVerdict::Valid => FdaVerdict::Valid,
            FotVerdict::Marginal => FdaVerdict::Marginal,
            FotVerdict::Violated => FdaVerdict::Violated,
        };
        write(out, v, "out")
    })
}

/// Time-averaged power `P(theta)` at each of `len` angles.
///
/// # Safety
/// `array` must be a live handle; `angles` readable and `out` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn fda_average_power(
    array: *const FdaArray,
    angles_rad: *const f64,
    len: usize,
    out: *mut f64,
) -> FdaStatus {
    guard(|| {
        let a = array_ref(array)?;
        let angles = slice(angles_rad, len, "angles")?;
        if len > 0 && out.is_null() {
            return Err(null("out"));
        }
        let p = average_power_curve(&a.config, angles);
        ptr::copy_nonoverlapping(p.as_ptr(), out, len);
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fda_spatial_exploration(
    fot: f64,
    phi_o: f64,
    out: *mut FdaSpatialExploration,
) -> FdaStatus {
    guard(|| {
        let se = spatial_exploration(fot, phi_o).map_err(invalid)?;
        let v = FdaSpatialExploration {
            theta1: se.theta1_rad,
            theta2: se.theta2_rad,
            sin_theta1: se.sin_theta1,
            sin_theta2: se.sin_theta2,
            se_exact: se.se_exact_rad,
            se_approx: se.se_approx_rad,
        };
        write(out, v, "out")
    })
}

/// Weights for a region mask. `regions_deg` holds `n_regions` `(lo, hi)`
/// pairs in degrees, flattened.
///
/// # Safety
/// `regions_deg` must point to `2 * n_regions` doubles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn fda_weights_synthesize(
    regions_deg: *const f64,
    n_regions: usize,
    grid_size: usize,
    m_antennas: usize,
    out: *mut *mut FdaWeights,
) -> FdaStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat = slice(regions_deg, 2 * n_regions, "regions")?;
        let regions: Vec<(f64, f64)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let desired = region_mask(&regions, grid_size).map_err(invalid)?;
        let inner = synthesize_weights(&desired, m_antennas).map_err(invalid)?;
        out.write(Box::into_raw(Box::new(FdaWeights { inner })));
        Ok(())
    })
}

/// # Safety
/// `weights` must come from `fda_weights_synthesize` and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fda_weights_free(weights: *mut FdaWeights) {
    if !weights.is_null() {
        drop(Box::from_raw(weights));
    }
}

/// Number of weights; 0 for a null handle.
///
/// # Safety
/// `weights` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fda_weights_len(weights: *const FdaWeights) -> usize {
    weights.as_ref().map_or(0, |w| w.inner.weights().len())
}

/// Copies the weights into `re` / `im`, each of capacity `len`.
///
/// # Safety
/// `weights` must be a live handle; `re` and `im` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn fda_weights_get(
    weights: *const FdaWeights,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> FdaStatus {
    guard(|| {
        let w = weights
            .as_ref()
            .ok_or_else(|| null("weights"))?
            .inner
            .weights();
        if len < w.len() {
            return Err((
                FdaStatus::BufferTooSmall,
                format!("need {} entries, buffer holds {len}", w.len()),
            ));
        }
        if re.is_null() || im.is_null() {
            return Err(null("out"));
        }
        for (i, v) in w.iter().enumerate() {
            re.add(i).write(v.re);
            im.add(i).write(v.im);
        }
        Ok(())
    })
}

/// RMS `|AF|` residual on the design grid and the energy of the dropped taps.
///
/// # Safety
/// `weights` must be a live handle; the out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn fda_weights_residual(
    weights: *const FdaWeights,
    out_residual: *mut f64,
    out_truncation_energy: *mut f64,
) -> FdaStatus {
    guard(|| {
        let w = &weights.as_ref().ok_or_else(|| null("weights"))?.inner;
        write(out_residual, w.residual(), "out_residual")?;
        write(
            out_truncation_energy,
            w.truncation_energy(),
            "out_truncation_energy",
        )
    })
}

/// `-f_o (t - t_o)`.
///
/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_predict_shift(
    array: *const FdaArray,
    t: f64,
    t_o: f64,
    out: *mut f64,
) -> FdaStatus {
    guard(|| write(out, predict_shift(&array_ref(array)?.config, t, t_o), "out"))
}

/// Dwell time at `angle_rad` for the array's current weights.
///
/// # Safety
/// `array` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fda_dwell_time(
    array: *const FdaArray,
    range_m: f64,
    angle_rad: f64,
    threshold_db: f64,
    out: *mut f64,
) -> FdaStatus {
    guard(|| {
        let a = array_ref(array)?;
        let tgt = Target::new(range_m, angle_rad).map_err(invalid)?;
        let d = dwell_time(a.config.weights(), &a.config, &tgt, angle_rad, threshold_db)
            .map_err(invalid)?;
        write(out, d, "out")
    })
}
