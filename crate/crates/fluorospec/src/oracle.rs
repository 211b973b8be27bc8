//! Independent brute-force validators for the closed-form spectrum.
//!
//! Nothing here shares code with the series evaluator: the spectrum is
//! integrated directly from its defining photodetector integral, and the
//! correlation function is re-derived by integrating the regression ODE.
//! Agreement between these paths and the [`crate::spectrum`] /
//! [`crate::model`] closed forms is what the acceptance suite certifies.

use crate::error::{Error, Result};
use crate::model::{correlation_value, DotParams, DriveParams, FilterSettings};
use crate::numerics::{integrate_1d, rk4_step};
use crate::spectrum::validate_inputs;
use num_complex::Complex64;
use rayon::prelude::*;

/// Outcome of one closed-form vs oracle comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub closed_form: f64,
    pub oracle_value: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub quadrature_nodes: usize,
}

impl OracleReport {
    /// `abs_err = |closed - oracle|`, `rel_err = abs_err / max(|oracle|, 1e-12)`.
    pub fn new(closed_form: f64, oracle_value: f64, quadrature_nodes: usize) -> Self {
        let abs_err = (closed_form - oracle_value).abs();
        OracleReport {
            closed_form,
            oracle_value,
            abs_err,
            rel_err: abs_err / oracle_value.abs().max(1e-12),
            quadrature_nodes,
        }
    }
}

/// Whether `n` Simpson panels resolve the drive oscillation over `[0, t]`
/// (`n >= 8 omega_f t / pi`). Comparisons made below this resolution should
/// carry a warning.
pub fn oscillation_resolved(d: &DriveParams, t: f64, n: usize) -> bool {
    n as f64 >= 8.0 * d.omega_f * t / std::f64::consts::PI
}

/// The physical spectrum straight from its defining integral,
///
/// `S = Gamma/pi Re int_0^t dt1 e^{-Gamma (t - t1)}
///        int_0^{t - t1} dtau e^{(Gamma/2 + i Delta) tau} corr(t1, tau)`,
///
/// by nested composite Simpson with `n` outer and `n` inner panels. Outer
/// strips are evaluated concurrently; the outer sum runs in ascending node
/// order, so the result is deterministic.
pub fn quadrature_spectrum(
    p: &DotParams,
    d: &DriveParams,
    f: &FilterSettings,
    t: f64,
    n: usize,
) -> Result<f64> {
    validate_inputs(p, d)?;
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain(format!("t must be > 0, got {t}")));
    }
    if !(f.gamma_filter.is_finite() && f.gamma_filter >= 0.0) || !f.detuning.is_finite() {
        return Err(Error::domain("invalid filter settings".to_string()));
    }
    if n < 64 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "node count must be even and >= 64, got {n}"
        )));
    }
    let g = f.gamma_filter;
    let h = t / n as f64;

    let strips: Vec<Complex64> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let t1 = i as f64 * h;
            // e^{(G/2 + i Delta) tau} corr(t1, tau), with the exponentials
            // fused: one real decay and one phase per node
            let pref = 0.5 * (p.d0 + 1.0);
            let rate = 0.5 * g - p.gamma_s;
            let phase1 = d.m * (d.omega_f * t1 + d.phi).sin();
            let inner = integrate_1d(
                |tau| {
                    let theta =
                        f.detuning * tau + phase1 - d.m * (d.omega_f * (t1 + tau) + d.phi).sin();
                    let (s, c) = theta.sin_cos();
                    (pref * (rate * tau).exp()) * Complex64::new(c, s)
                },
                0.0,
                t - t1,
                n,
            )
            .expect("inner interval is valid by construction");
            (-g * (t - t1)).exp() * inner
        })
        .collect();

    let mut total = strips[0] + strips[n];
    for (i, s) in strips.iter().enumerate().take(n).skip(1) {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        total += w * s;
    }
    total *= h / 3.0;
    Ok(g / std::f64::consts::PI * total.re)
}

/// Integrates the regression ODE
/// `d corr / d tau = -(gamma_s + i delta_as cos(omega_f (t + tau) + phi)) corr`
/// from `corr(0) = (d0 + 1)/2` with `steps` RK4 steps over `[0, tau_max]`,
/// comparing against the analytic correlation at every grid point.
///
/// The returned report carries the worst grid point: `abs_err` and `rel_err`
/// measure the complex deviation `|ode - closed|` there, while `closed_form`
/// and `oracle_value` record the real parts of the two trajectories at that
/// point.
pub fn regression_ode_check(
    p: &DotParams,
    d: &DriveParams,
    t: f64,
    tau_max: f64,
    steps: usize,
) -> OracleReport {
    assert!(steps >= 100, "regression check needs at least 100 steps");
    assert!(t >= 0.0 && tau_max > 0.0);
    let rhs = |tau: f64, y: Complex64| {
        -Complex64::new(
            p.gamma_s,
            d.delta_as * (d.omega_f * (t + tau) + d.phi).cos(),
        ) * y
    };
    let h = tau_max / steps as f64;
    let mut y = Complex64::new(0.5 * (p.d0 + 1.0), 0.0);
    let mut worst = OracleReport::new(y.re, y.re, steps);
    let mut worst_rel = -1.0;
    for i in 0..steps {
        y = rk4_step(&rhs, i as f64 * h, y, h);
        let tau = (i + 1) as f64 * h;
        let closed = correlation_value(p, d, t, tau);
        let abs_err = (y - closed).norm();
        let rel_err = abs_err / closed.norm().max(1e-12);
        if rel_err > worst_rel {
            worst_rel = rel_err;
            worst = OracleReport {
                closed_form: closed.re,
                oracle_value: y.re,
                abs_err,
                rel_err,
                quadrature_nodes: steps,
            };
        }
    }
    worst
}

/// The finite-integration-time spectrum definition,
///
/// `S(omega, T) = 1/(pi T) Re int_0^T dt' int_0^{T - t'} dtau
///                 corr(t', tau) e^{i Delta tau}`,
///
/// by nested composite Simpson with `n` panels on each axis. The `tau`
/// integrand decays like `e^{-gamma_s tau}`, so the inner range is clipped
/// at `40 / gamma_s`, below the integrand's 1e-17 floor.
pub fn finite_time_stationary_spectrum(
    p: &DotParams,
    d: &DriveParams,
    detuning: f64,
    big_t: f64,
    n: usize,
) -> Result<f64> {
    validate_inputs(p, d)?;
    if !(big_t.is_finite() && big_t > 0.0) {
        return Err(Error::domain(format!("T must be > 0, got {big_t}")));
    }
    if !detuning.is_finite() {
        return Err(Error::domain("detuning must be finite".to_string()));
    }
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "node count must be even and >= 2, got {n}"
        )));
    }
    let tau_cut = 40.0 / p.gamma_s;
    let h = big_t / n as f64;

    let strips: Vec<Complex64> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let tp = i as f64 * h;
            let pref = 0.5 * (p.d0 + 1.0);
            let phase1 = d.m * (d.omega_f * tp + d.phi).sin();
            integrate_1d(
                |tau| {
                    let theta =
                        detuning * tau + phase1 - d.m * (d.omega_f * (tp + tau) + d.phi).sin();
                    let (s, c) = theta.sin_cos();
                    (pref * (-p.gamma_s * tau).exp()) * Complex64::new(c, s)
                },
                0.0,
                (big_t - tp).min(tau_cut),
                n,
            )
            .expect("inner interval is valid by construction")
        })
        .collect();

    let mut total = strips[0] + strips[n];
    for (i, s) in strips.iter().enumerate().take(n).skip(1) {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        total += w * s;
    }
    total *= h / 3.0;
    Ok(total.re / (std::f64::consts::PI * big_t))
}
