//! The four analytic limiting spectra, used both as user-facing outputs and
//! as asymptotic cross-checks on the full closed form.
//!
//! * [`stationary_spectrum`]: the `t -> infinity` attractor: a Lorentzian
//!   comb of half-width `gamma_s + Gamma/2` plus an undamped oscillatory
//!   term with the drive period `2 pi / omega_f`. The formula keeps its
//!   periodic `t`-dependence; it is the asymptotic *orbit*, not a constant.
//! * [`perfect_resolution_spectrum`]: the subsequent `Gamma -> 0` limit: a
//!   pure comb of half-width `gamma_s` weighted by `J_k^2(m)`.
//! * [`static_field_spectrum`]: the drive frozen at `omega_f = 0` from the
//!   outset: a single Lorentzian centred at `delta_as`.
//! * [`narrow_filter_finite_t`]: `Gamma -> 0` at finite `t`: identically 0.

use crate::error::{Error, Result};
use crate::model::{DotParams, DriveParams, FilterSettings};
use crate::numerics::{bessel_table, BesselTable};
use crate::spectrum::validate_inputs;
use num_complex::Complex64;

/// Tags for the four limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    Stationary,
    PerfectResolution,
    StaticField,
    NarrowFilterFiniteT,
}

/// Large-time limit of the physical spectrum (still periodic in `t`):
///
/// ```text
/// (d0+1)/(2 pi) sum_k J_k^2(m) (gamma_s + Gamma/2) / ((gamma_s + Gamma/2)^2 + (Delta - k omega_f)^2)
/// + Gamma/(2 pi) (d0+1) Re sum_{k != p} e^{i(p-k)(omega_f t + phi)} J_k J_p / (C_p B_kp)
/// ```
///
/// Implemented independently of [`crate::spectrum::physical_spectrum`] (the
/// transient terms are dropped analytically, not thresholded), so agreement
/// between the two at large `Gamma t` is a genuine cross-check.
pub fn stationary_spectrum(
    p: &DotParams,
    d: &DriveParams,
    f: &FilterSettings,
    t: f64,
    eps_trunc: f64,
) -> Result<f64> {
    validate_inputs(p, d)?;
    if !(f.gamma_filter.is_finite() && f.gamma_filter > 0.0) {
        return Err(Error::domain(format!(
            "stationary_spectrum requires gamma_filter > 0, got {}",
            f.gamma_filter
        )));
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::domain(format!("t must be >= 0, got {t}")));
    }
    let table = bessel_table(d.m, eps_trunc)?;
    let (diag, nondiag) = stationary_parts(p, d, f.gamma_filter, t, f.detuning, &table);
    Ok(diag + nondiag)
}

/// Diagonal (comb) and non-diagonal (oscillatory) parts of the stationary
/// spectrum; inputs assumed validated.
pub(crate) fn stationary_parts(
    p: &DotParams,
    d: &DriveParams,
    gamma_filter: f64,
    t: f64,
    detuning: f64,
    table: &BesselTable,
) -> (f64, f64) {
    let g = gamma_filter;
    let kk = table.max_order();
    let n = (2 * kk + 1) as usize;
    let off = kk as usize;

    let mut jw = vec![0.0; n];
    let mut inv_c = vec![Complex64::default(); n];
    let width = p.gamma_s + 0.5 * g;
    let mut diag = 0.0;
    for i in 0..n {
        let k = i as i32 - kk;
        jw[i] = table.get(k);
        let x = detuning - k as f64 * d.omega_f;
        inv_c[i] = 1.0 / Complex64::new(width, -x);
        diag += jw[i] * jw[i] * width / (width * width + x * x);
    }
    diag *= (p.d0 + 1.0) / (2.0 * std::f64::consts::PI);

    let nj = (4 * kk + 1) as usize;
    let phase_over_b: Vec<Complex64> = (0..nj)
        .map(|j| {
            let diff = (j as i32 - 2 * kk) as f64;
            let phase = Complex64::new(0.0, diff * (d.omega_f * t + d.phi)).exp();
            phase / Complex64::new(g, diff * d.omega_f)
        })
        .collect();

    let mut osc = Complex64::default();
    for ik in 0..n {
        let jk = jw[ik];
        if jk == 0.0 {
            continue;
        }
        for ip in 0..n {
            if ip == ik {
                continue;
            }
            let j = ip + 2 * off - ik;
            osc += (jk * jw[ip]) * phase_over_b[j] * inv_c[ip];
        }
    }
    let nondiag = g / (2.0 * std::f64::consts::PI) * (p.d0 + 1.0) * osc.re;
    (diag, nondiag)
}

/// The `Gamma -> 0` limit of the stationary spectrum: a comb of Lorentzians
/// of half-width `gamma_s` at `Delta = k omega_f`, weighted by `J_k^2(m)`.
pub fn perfect_resolution_spectrum(
    p: &DotParams,
    d: &DriveParams,
    detuning: f64,
    eps_trunc: f64,
) -> Result<f64> {
    validate_inputs(p, d)?;
    if !detuning.is_finite() {
        return Err(Error::domain("detuning must be finite".to_string()));
    }
    let table = bessel_table(d.m, eps_trunc)?;
    Ok(perfect_resolution_with_table(p, d, detuning, &table))
}

pub(crate) fn perfect_resolution_with_table(
    p: &DotParams,
    d: &DriveParams,
    detuning: f64,
    table: &BesselTable,
) -> f64 {
    let gs = p.gamma_s;
    let mut sum = 0.0;
    for k in -table.max_order()..=table.max_order() {
        let jk = table.get(k);
        let x = detuning - k as f64 * d.omega_f;
        sum += jk * jk * gs / (gs * gs + x * x);
    }
    (p.d0 + 1.0) / (2.0 * std::f64::consts::PI) * sum
}

/// Spectrum when the low-frequency field is static from the outset: a single
/// Lorentzian of half-width `gamma_s` centred at `detuning = delta_as`.
pub fn static_field_spectrum(p: &DotParams, delta_as: f64, detuning: f64) -> f64 {
    let gs = p.gamma_s;
    let x = detuning - delta_as;
    (p.d0 + 1.0) / (2.0 * std::f64::consts::PI) * gs / (gs * gs + x * x)
}

/// `lim_{Gamma -> 0} S(t, omega, Gamma) = 0` at any finite elapsed time.
pub fn narrow_filter_finite_t(_p: &DotParams, _d: &DriveParams, _t: f64) -> f64 {
    0.0
}
