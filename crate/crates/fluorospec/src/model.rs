//! Physical parameters of the dot, drive, and filter, the population
//! inversion solution, and the analytic two-time dipole correlation function.
//!
//! Conventions: `gamma_s` is the transverse relaxation rate, `gamma_p` the
//! incoherent pump rate, and `gamma_big_d = 2 gamma_s + gamma_p` the total
//! inversion relaxation rate. The stationary inversion is
//! `d0 = (tau_d - tau_p) / (tau_d + tau_p)` with `tau_d = 1/(2 gamma_s)` and
//! `tau_p = 1/gamma_p`, so `d0 = -1` corresponds to no pumping at all and
//! `d0 -> 1` requires an infinite pump rate.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Dissipation and pumping rates of the two-level dot, along with the
/// derived stationary inversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DotParams {
    /// Transverse (dipole) relaxation rate `gamma_s > 0`.
    pub gamma_s: f64,
    /// Incoherent pump rate `gamma_p >= 0`.
    pub gamma_p: f64,
    /// Stationary population inversion, in [-1, 1).
    pub d0: f64,
    /// Total inversion relaxation rate `2 gamma_s + gamma_p`.
    pub gamma_big_d: f64,
}

impl DotParams {
    /// Construct from the two rates; `d0` and `gamma_big_d` are derived.
    pub fn from_rates(gamma_s: f64, gamma_p: f64) -> Result<Self> {
        if !(gamma_s.is_finite() && gamma_s > 0.0) {
            return Err(Error::domain(format!("gamma_s must be > 0, got {gamma_s}")));
        }
        if !(gamma_p.is_finite() && gamma_p >= 0.0) {
            return Err(Error::domain(format!(
                "gamma_p must be >= 0, got {gamma_p}"
            )));
        }
        // d0 = (tau_d - tau_p)/(tau_d + tau_p) = (gamma_p - 2 gamma_s)/(gamma_p + 2 gamma_s)
        let d0 = (gamma_p - 2.0 * gamma_s) / (gamma_p + 2.0 * gamma_s);
        Ok(DotParams {
            gamma_s,
            gamma_p,
            d0,
            gamma_big_d: 2.0 * gamma_s + gamma_p,
        })
    }

    /// Construct from the stationary inversion instead of the pump rate.
    ///
    /// `d0 = 1` would require an infinite pump rate and is rejected;
    /// `d0 = -1` maps to `gamma_p = 0`.
    pub fn from_inversion(gamma_s: f64, d0: f64) -> Result<Self> {
        if !(gamma_s.is_finite() && gamma_s > 0.0) {
            return Err(Error::domain(format!("gamma_s must be > 0, got {gamma_s}")));
        }
        if !d0.is_finite() || !(-1.0..1.0).contains(&d0) {
            return Err(Error::domain(format!("d0 must lie in [-1, 1), got {d0}")));
        }
        let gamma_p = 2.0 * gamma_s * (1.0 + d0) / (1.0 - d0);
        Ok(DotParams {
            gamma_s,
            gamma_p,
            d0,
            gamma_big_d: 2.0 * gamma_s + gamma_p,
        })
    }
}

/// Low-frequency drive: symmetry-violation coupling `delta_as`, angular
/// frequency `omega_f`, and initial phase `phi` (radians, unwrapped).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveParams {
    pub delta_as: f64,
    pub omega_f: f64,
    pub phi: f64,
    /// Modulation index `delta_as / omega_f`; the dimensionless argument of
    /// every Bessel weight in the sideband series.
    pub m: f64,
}

impl DriveParams {
    /// `omega_f` must be positive; the static-field case `omega_f = 0` is
    /// served by `limits::static_field_spectrum` instead.
    pub fn new(delta_as: f64, omega_f: f64, phi: f64) -> Result<Self> {
        if !(delta_as.is_finite() && phi.is_finite()) {
            return Err(Error::domain("drive parameters must be finite".to_string()));
        }
        if !(omega_f.is_finite() && omega_f > 0.0) {
            return Err(Error::domain(format!("omega_f must be > 0, got {omega_f}")));
        }
        Ok(DriveParams {
            delta_as,
            omega_f,
            phi,
            m: delta_as / omega_f,
        })
    }
}

/// Fabry-Perot filter: full transmission-peak width `gamma_filter` and
/// detuning `detuning = omega - omega_0` of the filter line centre above the
/// dot transition frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FilterSettings {
    pub gamma_filter: f64,
    pub detuning: f64,
}

impl FilterSettings {
    pub fn new(gamma_filter: f64, detuning: f64) -> Result<Self> {
        if !(gamma_filter.is_finite() && gamma_filter >= 0.0) {
            return Err(Error::domain(format!(
                "gamma_filter must be >= 0, got {gamma_filter}"
            )));
        }
        if !detuning.is_finite() {
            return Err(Error::domain(format!(
                "detuning must be finite, got {detuning}"
            )));
        }
        Ok(FilterSettings {
            gamma_filter,
            detuning,
        })
    }
}

/// Population inversion at time `t` from initial value `d_init`:
/// `(d_init - d0) e^{-gamma_big_d t} + d0`.
pub fn population_inversion(p: &DotParams, d_init: f64, t: f64) -> Result<f64> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::domain(format!("t must be >= 0, got {t}")));
    }
    if !(-1.0..=1.0).contains(&d_init) {
        return Err(Error::domain(format!(
            "d_init must lie in [-1, 1], got {d_init}"
        )));
    }
    Ok((d_init - p.d0) * (-p.gamma_big_d * t).exp() + p.d0)
}

/// Two-time dipole correlation of the stationary, pumped dot a time `t`
/// after the drive switch-on, at lag `tau`:
///
/// `(d0+1)/2 * exp(-gamma_s tau - i m sin(omega_f (t+tau) + phi))
///           * exp(+i m sin(omega_f t + phi))`.
///
/// The dot is assumed to have been pumped to stationarity before `t = 0`,
/// so the inversion is `d0` throughout.
pub fn correlation(p: &DotParams, d: &DriveParams, t: f64, tau: f64) -> Result<Complex64> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::domain(format!("t must be >= 0, got {t}")));
    }
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(Error::domain(format!("tau must be >= 0, got {tau}")));
    }
    Ok(correlation_value(p, d, t, tau))
}

/// Unchecked core of [`correlation`]; the oracle quadratures call this in
/// their inner loops after validating once.
#[inline]
pub(crate) fn correlation_value(p: &DotParams, d: &DriveParams, t: f64, tau: f64) -> Complex64 {
    let amp = 0.5 * (p.d0 + 1.0) * (-p.gamma_s * tau).exp();
    let phase = d.m * (d.omega_f * t + d.phi).sin() - d.m * (d.omega_f * (t + tau) + d.phi).sin();
    amp * Complex64::new(0.0, phase).exp()
}
