//! C ABI for the fluorospec library.
//!
//! The surface is a small set of `extern "C"` functions around an opaque
//! parameter handle. Every function returns a [`FluoroStatus`] code and
//! writes results through out-pointers; no function panics across the FFI
//! boundary. The header `include/fluorospec.h` is generated by cbindgen at
//! build time.
//!
//! Handles are immutable after construction, so they may be shared freely
//! across threads; evaluation functions take `const` handles and are safe to
//! call concurrently.

use fluorospec::{limits, oracle, spectrum};
use fluorospec::{DotParams, DriveParams, FilterSettings};
use std::os::raw::{c_char, c_double, c_int};

/// Status codes returned by every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluoroStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A structurally invalid argument (node counts, buffer sizes, ...).
    InvalidArgument = 2,
    /// A parameter outside the mathematical domain of the operation.
    DomainError = 3,
}

/// Static name for a status code, e.g. for error messages in bindings.
#[no_mangle]
pub extern "C" fn fluoro_status_name(status: FluoroStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        FluoroStatus::Ok => b"ok\0",
        FluoroStatus::NullArgument => b"null argument\0",
        FluoroStatus::InvalidArgument => b"invalid argument\0",
        FluoroStatus::DomainError => b"domain error\0",
    };
    name.as_ptr() as *const c_char
}

/// Opaque handle bundling the dot and drive parameters.
pub struct FluoroParams {
    dot: DotParams,
    drive: DriveParams,
}

fn status_of(e: &fluorospec::Error) -> FluoroStatus {
    match e {
        fluorospec::Error::Domain(_) => FluoroStatus::DomainError,
        fluorospec::Error::InvalidArgument(_) => FluoroStatus::InvalidArgument,
        fluorospec::Error::ScanPoint { source, .. } => status_of(source),
    }
}

unsafe fn write_out<T>(ptr: *mut T, value: T) {
    if !ptr.is_null() {
        ptr.write(value);
    }
}

fn new_params(
    dot: Result<DotParams, fluorospec::Error>,
    delta_as: c_double,
    omega_f: c_double,
    phi: c_double,
    out: *mut *mut FluoroParams,
) -> FluoroStatus {
    if out.is_null() {
        return FluoroStatus::NullArgument;
    }
    let dot = match dot {
        Ok(d) => d,
        Err(e) => return status_of(&e),
    };
    let drive = match DriveParams::new(delta_as, omega_f, phi) {
        Ok(d) => d,
        Err(e) => return status_of(&e),
    };
    let handle = Box::new(FluoroParams { dot, drive });
    unsafe { out.write(Box::into_raw(handle)) };
    FluoroStatus::Ok
}

/// Creates a parameter handle from the pump rate `gamma_p`.
///
/// On success writes a handle to `out`; release it with
/// [`fluoro_params_free`].
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn fluoro_params_new(
    gamma_s: c_double,
    gamma_p: c_double,
    delta_as: c_double,
    omega_f: c_double,
    phi: c_double,
    out: *mut *mut FluoroParams,
) -> FluoroStatus {
    new_params(
        DotParams::from_rates(gamma_s, gamma_p),
        delta_as,
        omega_f,
        phi,
        out,
    )
}

/// Creates a parameter handle from the stationary inversion `d0` in [-1, 1).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn fluoro_params_new_from_inversion(
    gamma_s: c_double,
    d0: c_double,
    delta_as: c_double,
    omega_f: c_double,
    phi: c_double,
    out: *mut *mut FluoroParams,
) -> FluoroStatus {
    new_params(
        DotParams::from_inversion(gamma_s, d0),
        delta_as,
        omega_f,
        phi,
        out,
    )
}

/// Releases a handle created by one of the constructors. Null is a no-op.
///
/// # Safety
/// `params` must be a pointer previously returned by a constructor and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn fluoro_params_free(params: *mut FluoroParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Reads the derived quantities off a handle: stationary inversion `d0`,
/// total inversion relaxation rate and modulation index. Out-pointers may be
/// null to skip a value.
///
/// # Safety
/// `params` must be a live handle; non-null out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_params_derived(
    params: *const FluoroParams,
    d0: *mut c_double,
    gamma_big_d: *mut c_double,
    modulation_index: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    write_out(d0, p.dot.d0);
    write_out(gamma_big_d, p.dot.gamma_big_d);
    write_out(modulation_index, p.drive.m);
    FluoroStatus::Ok
}

/// Time-dependent physical spectrum at elapsed time `t` and detuning
/// `detuning`, behind a filter of width `gamma_filter > 0`. Writes the value
/// and, when the pointers are non-null, its diagonal/non-diagonal split.
///
/// # Safety
/// `params` must be a live handle; `value` must be writable; `diag_part` and
/// `nondiag_part` must each be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_physical_spectrum(
    params: *const FluoroParams,
    gamma_filter: c_double,
    t: c_double,
    detuning: c_double,
    eps_trunc: c_double,
    value: *mut c_double,
    diag_part: *mut c_double,
    nondiag_part: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    if value.is_null() {
        return FluoroStatus::NullArgument;
    }
    let filter = match FilterSettings::new(gamma_filter, detuning) {
        Ok(f) => f,
        Err(e) => return status_of(&e),
    };
    match spectrum::physical_spectrum(&p.dot, &p.drive, &filter, t, eps_trunc) {
        Ok(point) => {
            value.write(point.value);
            write_out(diag_part, point.diag_part);
            write_out(nondiag_part, point.nondiag_part);
            FluoroStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Large-time periodic attractor of the spectrum.
///
/// # Safety
/// `params` must be a live handle; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_stationary_spectrum(
    params: *const FluoroParams,
    gamma_filter: c_double,
    t: c_double,
    detuning: c_double,
    eps_trunc: c_double,
    value: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    if value.is_null() {
        return FluoroStatus::NullArgument;
    }
    let filter = match FilterSettings::new(gamma_filter, detuning) {
        Ok(f) => f,
        Err(e) => return status_of(&e),
    };
    match limits::stationary_spectrum(&p.dot, &p.drive, &filter, t, eps_trunc) {
        Ok(v) => {
            value.write(v);
            FluoroStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Stationary spectrum at perfect frequency resolution.
///
/// # Safety
/// `params` must be a live handle; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_perfect_resolution_spectrum(
    params: *const FluoroParams,
    detuning: c_double,
    eps_trunc: c_double,
    value: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    if value.is_null() {
        return FluoroStatus::NullArgument;
    }
    match limits::perfect_resolution_spectrum(&p.dot, &p.drive, detuning, eps_trunc) {
        Ok(v) => {
            value.write(v);
            FluoroStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Single-peak spectrum of a static symmetry-violating field; uses the
/// handle's `delta_as` as the peak position.
///
/// # Safety
/// `params` must be a live handle; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_static_field_spectrum(
    params: *const FluoroParams,
    detuning: c_double,
    value: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    if value.is_null() {
        return FluoroStatus::NullArgument;
    }
    value.write(limits::static_field_spectrum(
        &p.dot,
        p.drive.delta_as,
        detuning,
    ));
    FluoroStatus::Ok
}

/// Brute-force quadrature of the defining spectrum integral with `n` Simpson
/// panels per axis (`n` even, `n >= 64`).
///
/// # Safety
/// `params` must be a live handle; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_quadrature_spectrum(
    params: *const FluoroParams,
    gamma_filter: c_double,
    t: c_double,
    detuning: c_double,
    n: usize,
    value: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    if value.is_null() {
        return FluoroStatus::NullArgument;
    }
    let filter = match FilterSettings::new(gamma_filter, detuning) {
        Ok(f) => f,
        Err(e) => return status_of(&e),
    };
    match oracle::quadrature_spectrum(&p.dot, &p.drive, &filter, t, n) {
        Ok(v) => {
            value.write(v);
            FluoroStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Integer-order Bessel function of the first kind.
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fluoro_bessel_j(
    order: c_int,
    x: c_double,
    value: *mut c_double,
) -> FluoroStatus {
    if value.is_null() {
        return FluoroStatus::NullArgument;
    }
    match fluorospec::numerics::bessel_j(order, x) {
        Ok(v) => {
            value.write(v);
            FluoroStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Full-spectrum scan over the Cartesian product of caller-supplied grids.
///
/// `out_values` receives `n_t * n_detuning` samples in row-major order (`t`
/// outer, detuning inner); `out_diag` and `out_nondiag` may be null or
/// buffers of the same length. Grids must be strictly increasing.
///
/// # Safety
/// `params` must be a live handle; `t_values` and `detuning_values` must
/// point to `n_t` and `n_detuning` readable doubles; `out_values` (and any
/// non-null optional buffer) must have room for `n_t * n_detuning` doubles.
#[no_mangle]
pub unsafe extern "C" fn fluoro_scan_full(
    params: *const FluoroParams,
    gamma_filter: c_double,
    t_values: *const c_double,
    n_t: usize,
    detuning_values: *const c_double,
    n_detuning: usize,
    eps_trunc: c_double,
    out_values: *mut c_double,
    out_diag: *mut c_double,
    out_nondiag: *mut c_double,
) -> FluoroStatus {
    let Some(p) = params.as_ref() else {
        return FluoroStatus::NullArgument;
    };
    if t_values.is_null() || detuning_values.is_null() || out_values.is_null() {
        return FluoroStatus::NullArgument;
    }
    if n_t == 0 || n_detuning == 0 || n_t.checked_mul(n_detuning).is_none() {
        return FluoroStatus::InvalidArgument;
    }
    let t_grid = std::slice::from_raw_parts(t_values, n_t);
    let detuning_grid = std::slice::from_raw_parts(detuning_values, n_detuning);
    match spectrum::spectrum_scan(
        &p.dot,
        &p.drive,
        gamma_filter,
        t_grid,
        detuning_grid,
        eps_trunc,
    ) {
        Ok(scan) => {
            for (i, point) in scan.values.iter().enumerate() {
                out_values.add(i).write(point.value);
                if !out_diag.is_null() {
                    out_diag.add(i).write(point.diag_part);
                }
                if !out_nondiag.is_null() {
                    out_nondiag.add(i).write(point.nondiag_part);
                }
            }
            FluoroStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
