#ifndef FDA_BEAM_H
#define FDA_BEAM_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FdaStatus {
  FDA_STATUS_OK = 0,
  FDA_STATUS_NULL_POINTER = 1,
  FDA_STATUS_INVALID_ARGUMENT = 2,
  FDA_STATUS_BUFFER_TOO_SMALL = 3,
  FDA_STATUS_PANIC = 4,
} FdaStatus;

typedef enum FdaModel {
  FDA_MODEL_EXACT = 0,
  FDA_MODEL_COMPACT = 1,
} FdaModel;

typedef enum FdaSupport {
  FDA_SUPPORT_PULSED = 0,
  FDA_SUPPORT_CONTINUOUS_WAVE = 1,
} FdaSupport;

typedef enum FdaVerdict {
  FDA_VERDICT_VALID = 0,
  FDA_VERDICT_MARGINAL = 1,
  FDA_VERDICT_VIOLATED = 2,
} FdaVerdict;

typedef enum FdaStateKind {
  FDA_STATE_KIND_NOT_ILLUMINATED = 0,
  FDA_STATE_KIND_TRANSIENT1 = 1,
  FDA_STATE_KIND_STEADY = 2,
  FDA_STATE_KIND_TRANSIENT2 = 3,
  FDA_STATE_KIND_EXPIRED = 4,
} FdaStateKind;

/**
 * Opaque array configuration.
 */
typedef struct FdaArray FdaArray;

/**
 * Opaque synthesized weight set.
 */
typedef struct FdaWeights FdaWeights;

/**
 * Active elements are `first .. first + active`.
 */
typedef struct FdaBeamState {
  int32_t kind;
  size_t active;
  size_t first;
} FdaBeamState;

typedef struct FdaBeamwidth {
  double theta_first_null;
  double theta_peak;
  double bw_exact;
  double bw_approx;
} FdaBeamwidth;

typedef struct FdaSpatialExploration {
  double theta1;
  double theta2;
  double sin_theta1;
  double sin_theta2;
  double se_exact;
  double se_approx;
} FdaSpatialExploration;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty if none.
 * Valid until the next failing call on the same thread.
 */
const char *fda_last_error(void);

/**
 * Half-wavelength array with uniform weights.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum FdaStatus fda_array_new(size_t m_antennas,
                             double carrier_hz,
                             double offset_hz,
                             double pulse_s,
                             struct FdaArray **out);

/**
 * # Safety
 * `array` must come from `fda_array_new` and not be used afterwards. Null is ignored.
 */
void fda_array_free(struct FdaArray *array);

/**
 * # Safety
 * `array` must be a live handle.
 */
enum FdaStatus fda_array_set_spacing(struct FdaArray *array, double spacing_m);

/**
 * Sets `phi_o` and resets the weights to `exp(-j m phi_o)`.
 *
 * # Safety
 * `array` must be a live handle.
 */
enum FdaStatus fda_array_set_initial_phase(struct FdaArray *array, double phi_o);

/**
 * # Safety
 * `array` must be a live handle; `re` and `im` must each point to `len` doubles.
 */
enum FdaStatus fda_array_set_weights(struct FdaArray *array,
                                     const double *re,
                                     const double *im,
                                     size_t len);

/**
 * # Safety
 * `array` and `weights` must be live handles.
 */
enum FdaStatus fda_array_apply_weights(struct FdaArray *array, const struct FdaWeights *weights);

/**
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_array_fot(const struct FdaArray *array, double *out);

/**
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_element_delay(const struct FdaArray *array,
                                 double range_m,
                                 double angle_rad,
                                 size_t element,
                                 double *out);

/**
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_classify_state(const struct FdaArray *array,
                                  double range_m,
                                  double angle_rad,
                                  double t,
                                  struct FdaBeamState *out);

/**
 * Complex array factor at `(t, range, angle)`.
 *
 * # Safety
 * `array` must be a live handle; `out_re` and `out_im` writable.
 */
enum FdaStatus fda_array_factor(const struct FdaArray *array,
                                double range_m,
                                double angle_rad,
                                double t,
                                enum FdaModel model_sel,
                                enum FdaSupport support_sel,
                                double *out_re,
                                double *out_im);

/**
 * `|AF|^2`.
 *
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_beampattern(const struct FdaArray *array,
                               double range_m,
                               double angle_rad,
                               double t,
                               enum FdaModel model_sel,
                               enum FdaSupport support_sel,
                               double *out);

/**
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_rayleigh_beamwidth(const struct FdaArray *array, struct FdaBeamwidth *out);

/**
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_fot_verdict(const struct FdaArray *array, enum FdaVerdict *out);

/**
 * Time-averaged power `P(theta)` at each of `len` angles.
 *
 * # Safety
 * `array` must be a live handle; `angles` readable and `out` writable for `len` doubles.
 */
enum FdaStatus fda_average_power(const struct FdaArray *array,
                                 const double *angles_rad,
                                 size_t len,
                                 double *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FdaStatus fda_spatial_exploration(double fot, double phi_o, struct FdaSpatialExploration *out);

/**
 * Weights for a region mask. `regions_deg` holds `n_regions` `(lo, hi)`
 * pairs in degrees, flattened.
 *
 * # Safety
 * `regions_deg` must point to `2 * n_regions` doubles and `out` be writable.
 */
enum FdaStatus fda_weights_synthesize(const double *regions_deg,
                                      size_t n_regions,
                                      size_t grid_size,
                                      size_t m_antennas,
                                      struct FdaWeights **out);

/**
 * # Safety
 * `weights` must come from `fda_weights_synthesize` and not be used afterwards. Null is ignored.
 */
void fda_weights_free(struct FdaWeights *weights);

/**
 * Number of weights; 0 for a null handle.
 *
 * # Safety
 * `weights` must be a live handle or null.
 */
size_t fda_weights_len(const struct FdaWeights *weights);

/**
 * Copies the weights into `re` / `im`, each of capacity `len`.
 *
 * # Safety
 * `weights` must be a live handle; `re` and `im` writable for `len` doubles.
 */
enum FdaStatus fda_weights_get(const struct FdaWeights *weights,
                               double *re,
                               double *im,
                               size_t len);

/**
 * RMS `|AF|` residual on the design grid and the energy of the dropped taps.
 *
 * # Safety
 * `weights` must be a live handle; the out pointers writable.
 */
enum FdaStatus fda_weights_residual(const struct FdaWeights *weights,
                                    double *out_residual,
                                    double *out_truncation_energy);

/**
 * `-f_o (t - t_o)`.
 *
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_predict_shift(const struct FdaArray *array, double t, double t_o, double *out);

/**
 * Dwell time at `angle_rad` for the array's current weights.
 *
 * # Safety
 * `array` must be a live handle and `out` writable.
 */
enum FdaStatus fda_dwell_time(const struct FdaArray *array,
                              double range_m,
                              double angle_rad,
                              double threshold_db,
                              double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FDA_BEAM_H */
