/* C interface to the fluorospec library. */

#ifndef FLUOROSPEC_H
#define FLUOROSPEC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every FFI call.
typedef enum FluoroStatus {
  // Success.
  FLUORO_STATUS_OK = 0,
  // A required pointer argument was null.
  FLUORO_STATUS_NULL_ARGUMENT = 1,
  // A structurally invalid argument (node counts, buffer sizes, ...).
  FLUORO_STATUS_INVALID_ARGUMENT = 2,
  // A parameter outside the mathematical domain of the operation.
  FLUORO_STATUS_DOMAIN_ERROR = 3,
} FluoroStatus;

// Opaque handle bundling the dot and drive parameters.
typedef struct FluoroParams FluoroParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static name for a status code, e.g. for error messages in bindings.
const char *fluoro_status_name(enum FluoroStatus status);

// Creates a parameter handle from the pump rate `gamma_p`.
//
// On success writes a handle to `out`; release it with
// [`fluoro_params_free`].
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
enum FluoroStatus fluoro_params_new(double gamma_s,
                                    double gamma_p,
                                    double delta_as,
                                    double omega_f,
                                    double phi,
                                    struct FluoroParams **out);

// Creates a parameter handle from the stationary inversion `d0` in [-1, 1).
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
enum FluoroStatus fluoro_params_new_from_inversion(double gamma_s,
                                                   double d0,
                                                   double delta_as,
                                                   double omega_f,
                                                   double phi,
                                                   struct FluoroParams **out);

// Releases a handle created by one of the constructors. Null is a no-op.
//
// # Safety
// `params` must be a pointer previously returned by a constructor and not
// yet freed.
void fluoro_params_free(struct FluoroParams *params);

// Reads the derived quantities off a handle: stationary inversion `d0`,
// total inversion relaxation rate and modulation index. Out-pointers may be
// null to skip a value.
//
// # Safety
// `params` must be a live handle; non-null out pointers must be writable.
enum FluoroStatus fluoro_params_derived(const struct FluoroParams *params,
                                        double *d0,
                                        double *gamma_big_d,
                                        double *modulation_index);

// Time-dependent physical spectrum at elapsed time `t` and detuning
// `detuning`, behind a filter of width `gamma_filter > 0`. Writes the value
// and, when the pointers are non-null, its diagonal/non-diagonal split.
//
// # Safety
// `params` must be a live handle; `value` must be writable; `diag_part` and
// `nondiag_part` must each be null or writable.
enum FluoroStatus fluoro_physical_spectrum(const struct FluoroParams *params,
                                           double gamma_filter,
                                           double t,
                                           double detuning,
                                           double eps_trunc,
                                           double *value,
                                           double *diag_part,
                                           double *nondiag_part);

// Large-time periodic attractor of the spectrum.
//
// # Safety
// `params` must be a live handle; `value` must be writable.
enum FluoroStatus fluoro_stationary_spectrum(const struct FluoroParams *params,
                                             double gamma_filter,
                                             double t,
                                             double detuning,
                                             double eps_trunc,
                                             double *value);

// Stationary spectrum at perfect frequency resolution.
//
// # Safety
// `params` must be a live handle; `value` must be writable.
enum FluoroStatus fluoro_perfect_resolution_spectrum(const struct FluoroParams *params,
                                                     double detuning,
                                                     double eps_trunc,
                                                     double *value);

// Single-peak spectrum of a static symmetry-violating field; uses the
// handle's `delta_as` as the peak position.
//
// # Safety
// `params` must be a live handle; `value` must be writable.
enum FluoroStatus fluoro_static_field_spectrum(const struct FluoroParams *params,
                                               double detuning,
                                               double *value);

// Brute-force quadrature of the defining spectrum integral with `n` Simpson
// panels per axis (`n` even, `n >= 64`).
//
// # Safety
// `params` must be a live handle; `value` must be writable.
enum FluoroStatus fluoro_quadrature_spectrum(const struct FluoroParams *params,
                                             double gamma_filter,
                                             double t,
                                             double detuning,
                                             uintptr_t n,
                                             double *value);

// Integer-order Bessel function of the first kind.
//
// # Safety
// `value` must be writable.
enum FluoroStatus fluoro_bessel_j(int order, double x, double *value);

// Full-spectrum scan over the Cartesian product of caller-supplied grids.
//
// `out_values` receives `n_t * n_detuning` samples in row-major order (`t`
// outer, detuning inner); `out_diag` and `out_nondiag` may be null or
// buffers of the same length. Grids must be strictly increasing.
//
// # Safety
// `params` must be a live handle; `t_values` and `detuning_values` must
// point to `n_t` and `n_detuning` readable doubles; `out_values` (and any
// non-null optional buffer) must have room for `n_t * n_detuning` doubles.
enum FluoroStatus fluoro_scan_full(const struct FluoroParams *params,
                                   double gamma_filter,
                                   const double *t_values,
                                   uintptr_t n_t,
                                   const double *detuning_values,
                                   uintptr_t n_detuning,
                                   double eps_trunc,
                                   double *out_values,
                                   double *out_diag,
                                   double *out_nondiag);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLUOROSPEC_H */
