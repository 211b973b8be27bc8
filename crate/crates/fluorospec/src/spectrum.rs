//! Closed-form evaluation of the time-dependent physical spectrum
//! `S(t, omega, Gamma)` through its double Bessel series.
//!
//! Writing `m = delta_as / omega_f`, `Delta = omega - omega_0`, and
//!
//! ```text
//! A_k  = Gamma/2 - gamma_s + i (Delta - k omega_f)
//! B_kp = Gamma + i (p - k) omega_f
//! C_p  = Gamma/2 + gamma_s + i (p omega_f - Delta)      (B_kp = A_k + C_p)
//! ```
//!
//! the spectrum is
//!
//! ```text
//! S = Gamma/(2 pi) (d0 + 1) Re sum_{k,p} e^{i(p-k)phi} J_k(m) J_p(m)
//!       e^{-Gamma t} [ (e^{B_kp t} - e^{A_k t})/(A_k C_p)
//!                    - (e^{B_kp t} - 1)/(A_k B_kp) ]
//! ```
//!
//! truncated at the order `K` where the Bessel weights have absorbed all but
//! `eps_trunc` of the total mass. The `k = p` subsum is reported separately
//! (`diag_part`) from the `k != p` remainder (`nondiag_part`).
//!
//! Everything is evaluated in the damped form, with `e^{-Gamma t}` folded
//! into each exponential, so no intermediate overflows for large `Gamma t`:
//! `e^{-Gamma t} e^{B_kp t} = e^{i (p-k) omega_f t}` is unimodular and
//! `e^{-Gamma t} e^{A_k t} = e^{(A_k - Gamma) t}` decays.
//!
//! `A_k` vanishes exactly on the parameter set `Gamma = 2 gamma_s`,
//! `Delta = k omega_f`; the bracket has a removable singularity there and is
//! evaluated from its first-order expansion in `A_k` inside a small disk.

use crate::error::{Error, Result};
use crate::model::{DotParams, DriveParams, FilterSettings};
use crate::numerics::{bessel_table, BesselTable};
use crate::scan::{ScanKind, ScanParams, SpectrumScan};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// The three series coefficients attached to one `(k, p)` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesCoefficients {
    pub k: i32,
    pub p: i32,
    pub a_k: Complex64,
    pub b_kp: Complex64,
    pub c_p: Complex64,
}

impl SeriesCoefficients {
    pub fn new(
        dot: &DotParams,
        drive: &DriveParams,
        filter: &FilterSettings,
        k: i32,
        p: i32,
    ) -> Self {
        let g = filter.gamma_filter;
        let wf = drive.omega_f;
        let delta = filter.detuning;
        let a_k = Complex64::new(0.5 * g - dot.gamma_s, delta - k as f64 * wf);
        let c_p = Complex64::new(0.5 * g + dot.gamma_s, p as f64 * wf - delta);
        let b_kp = Complex64::new(g, (p - k) as f64 * wf);
        debug_assert!((b_kp - (a_k + c_p)).norm() <= 1e-12 * (1.0 + b_kp.norm()));
        SeriesCoefficients {
            k,
            p,
            a_k,
            b_kp,
            c_p,
        }
    }
}

/// One evaluated spectrum sample. `value = diag_part + nondiag_part` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub t: f64,
    pub detuning: f64,
    pub value: f64,
    pub diag_part: f64,
    pub nondiag_part: f64,
}

/// The bracket of one series term, including the overall `e^{-Gamma t}`
/// damping:
///
/// `e^{-Gamma t} [ (e^{B t} - e^{A t})/(A C) - (e^{B t} - 1)/(A B) ]`.
///
/// Near `A = 0` (within `1e-6 max(gamma_s, Gamma)`) the removable
/// singularity is crossed on its first-order expansion in `A`.
pub fn bracket_term(coef: &SeriesCoefficients, t: f64, gamma_filter: f64) -> Complex64 {
    let a = coef.a_k;
    let c = coef.c_p;
    // gamma_s is recoverable from the coefficients: Re(C - A) = 2 gamma_s
    let gamma_s = 0.5 * (c.re - a.re);
    let eps_sing = 1e-6 * gamma_s.max(gamma_filter);
    let damp = (-gamma_filter * t).exp();
    if a.norm() < eps_sing {
        bracket_series_expansion(a, c, t, gamma_filter, damp)
    } else {
        let osc = Complex64::new(0.0, (coef.b_kp.im) * t).exp();
        let dec = ((a - gamma_filter) * t).exp();
        bracket_direct(a, coef.b_kp, c, osc, dec, damp)
    }
}

/// Damped direct form: `(osc - dec)/(A C) - (osc - damp)/(A B)` where
/// `osc = e^{(B - Gamma) t}`, `dec = e^{(A - Gamma) t}`, `damp = e^{-Gamma t}`.
#[inline]
fn bracket_direct(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    osc: Complex64,
    dec: Complex64,
    damp: f64,
) -> Complex64 {
    (osc - dec) / (a * c) - (osc - damp) / (a * b)
}

/// First-order expansion around the removable singularity `A = 0`
/// (`B = A + C`), already damped by `e^{-Gamma t}`:
///
/// `M1/C^2 + A (M2/(2 C^2) - M1/C^3)` with
/// `M1 = e^{(C-Gamma)t} - e^{-Gamma t}(1 + C t)` and
/// `M2 = 2t e^{(C-Gamma)t} - e^{-Gamma t}(2t + C t^2)`.
///
/// Relative error is O(|A t|^2).
#[inline]
fn bracket_series_expansion(
    a: Complex64,
    c: Complex64,
    t: f64,
    gamma_filter: f64,
    damp: f64,
) -> Complex64 {
    let e = ((c - gamma_filter) * t).exp();
    let m1 = e - damp * (1.0 + c * t);
    let m2 = 2.0 * t * e - damp * (2.0 * t + c * t * t);
    let c2 = c * c;
    m1 / c2 + a * (m2 / (2.0 * c2) - m1 / (c2 * c))
}

/// The time-dependent physical spectrum at elapsed time `t` and filter
/// settings `f`, truncating the Bessel series at weight tolerance
/// `eps_trunc`.
///
/// `f.gamma_filter` must be strictly positive here; the `Gamma -> 0` limit
/// is [`crate::limits::narrow_filter_finite_t`].
pub fn physical_spectrum(
    p: &DotParams,
    d: &DriveParams,
    f: &FilterSettings,
    t: f64,
    eps_trunc: f64,
) -> Result<SpectrumPoint> {
    validate_inputs(p, d)?;
    if !(f.gamma_filter.is_finite() && f.gamma_filter > 0.0) {
        return Err(Error::domain(format!(
            "physical_spectrum requires gamma_filter > 0, got {}",
            f.gamma_filter
        )));
    }
    if !f.detuning.is_finite() {
        return Err(Error::domain("detuning must be finite".to_string()));
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::domain(format!("t must be >= 0, got {t}")));
    }
    let table = bessel_table(d.m, eps_trunc)?;
    Ok(physical_spectrum_with_table(
        p,
        d,
        f.gamma_filter,
        t,
        f.detuning,
        &table,
    ))
}

/// Core evaluator over a prebuilt Bessel table; inputs assumed validated.
///
/// Terms are accumulated in a fixed order (k ascending outer, p ascending
/// inner), so the result is bitwise reproducible.
pub(crate) fn physical_spectrum_with_table(
    p: &DotParams,
    d: &DriveParams,
    gamma_filter: f64,
    t: f64,
    detuning: f64,
    table: &BesselTable,
) -> SpectrumPoint {
    let g = gamma_filter;
    let kk = table.max_order();
    let n = (2 * kk + 1) as usize;
    let off = kk as usize;
    let eps_sing = 1e-6 * p.gamma_s.max(g);
    let damp = (-g * t).exp();

    // per-order caches; index i maps to order i - K
    let mut jw = vec![0.0; n];
    let mut a = vec![Complex64::default(); n];
    let mut dec = vec![Complex64::default(); n];
    let mut c = vec![Complex64::default(); n];
    for i in 0..n {
        let k = i as i32 - kk;
        jw[i] = table.get(k);
        let ak = Complex64::new(0.5 * g - p.gamma_s, detuning - k as f64 * d.omega_f);
        a[i] = ak;
        dec[i] = ((ak - g) * t).exp();
        c[i] = Complex64::new(0.5 * g + p.gamma_s, k as f64 * d.omega_f - detuning);
    }
    // per-difference caches; index j maps to p - k = j - 2K
    let nj = (4 * kk + 1) as usize;
    let mut b = vec![Complex64::default(); nj];
    let mut osc = vec![Complex64::default(); nj];
    let mut phase = vec![Complex64::default(); nj];
    for j in 0..nj {
        let diff = (j as i32 - 2 * kk) as f64;
        b[j] = Complex64::new(g, diff * d.omega_f);
        osc[j] = Complex64::new(0.0, diff * d.omega_f * t).exp();
        phase[j] = Complex64::new(0.0, diff * d.phi).exp();
    }

    let mut diag = Complex64::default();
    let mut nondiag = Complex64::default();
    for ik in 0..n {
        let jk = jw[ik];
        if jk == 0.0 {
            continue;
        }
        let ak = a[ik];
        let singular = ak.norm() < eps_sing;
        let deck = dec[ik];
        for ip in 0..n {
            let j = ip + 2 * off - ik;
            let bracket = if singular {
                bracket_series_expansion(ak, c[ip], t, g, damp)
            } else {
                bracket_direct(ak, b[j], c[ip], osc[j], deck, damp)
            };
            let term = phase[j] * (jk * jw[ip]) * bracket;
            if ik == ip {
                diag += term;
            } else {
                nondiag += term;
            }
        }
    }

    let pref = g / (2.0 * std::f64::consts::PI) * (p.d0 + 1.0);
    let diag_part = pref * diag.re;
    let nondiag_part = pref * nondiag.re;
    SpectrumPoint {
        t,
        detuning,
        value: diag_part + nondiag_part,
        diag_part,
        nondiag_part,
    }
}

/// Evaluates [`physical_spectrum`] over the Cartesian product of the two
/// grids. Points are computed concurrently but assembled row-major (`t`
/// outer, detuning inner), so the output is identical regardless of the
/// execution schedule.
pub fn spectrum_scan(
    p: &DotParams,
    d: &DriveParams,
    gamma_filter: f64,
    t_grid: &[f64],
    detuning_grid: &[f64],
    eps_trunc: f64,
) -> Result<SpectrumScan> {
    validate_inputs(p, d)?;
    if !(gamma_filter.is_finite() && gamma_filter > 0.0) {
        return Err(Error::domain(format!(
            "spectrum_scan requires gamma_filter > 0, got {gamma_filter}"
        )));
    }
    validate_grid("t grid", t_grid)?;
    validate_grid("detuning grid", detuning_grid)?;
    if let Some(&t) = t_grid.iter().find(|&&t| t < 0.0) {
        return Err(Error::ScanPoint {
            t,
            detuning: detuning_grid[0],
            source: Box::new(Error::domain("t must be >= 0")),
        });
    }
    let table = bessel_table(d.m, eps_trunc)?;

    let nd = detuning_grid.len();
    let values: Vec<SpectrumPoint> = (0..t_grid.len() * nd)
        .into_par_iter()
        .map(|idx| {
            let t = t_grid[idx / nd];
            let detuning = detuning_grid[idx % nd];
            physical_spectrum_with_table(p, d, gamma_filter, t, detuning, &table)
        })
        .collect();

    Ok(SpectrumScan {
        params: ScanParams::full(p, d, gamma_filter, eps_trunc),
        produced_by: ScanKind::Full,
        t_grid: t_grid.to_vec(),
        detuning_grid: detuning_grid.to_vec(),
        values,
    })
}

pub(crate) fn validate_inputs(p: &DotParams, d: &DriveParams) -> Result<()> {
    if !(p.gamma_s.is_finite() && p.gamma_s > 0.0)
        || !p.gamma_p.is_finite()
        || !p.d0.is_finite()
        || !(-1.0..=1.0).contains(&p.d0)
    {
        return Err(Error::domain(format!("invalid dot parameters: {p:?}")));
    }
    if !(d.omega_f.is_finite() && d.omega_f > 0.0)
        || !d.delta_as.is_finite()
        || !d.phi.is_finite()
        || !d.m.is_finite()
    {
        return Err(Error::domain(format!("invalid drive parameters: {d:?}")));
    }
    Ok(())
}

pub(crate) fn validate_grid(name: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::invalid(format!("{name} must be non-empty")));
    }
    if grid.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid(format!("{name} must be finite")));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "{name} must be strictly increasing"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits;
    use crate::oracle;

    fn dot() -> DotParams {
        DotParams::from_inversion(1.0, 0.0).unwrap()
    }

    fn drive(delta_as: f64, omega_f: f64, phi: f64) -> DriveParams {
        DriveParams::new(delta_as, omega_f, phi).unwrap()
    }

    #[test]
    fn zero_at_switch_on_exactly() {
        let p = dot();
        let d = drive(10.0, 10.0, 0.3);
        for &delta in &[0.0, 3.7, -12.0] {
            let f = FilterSettings::new(0.1, delta).unwrap();
            let s = physical_spectrum(&p, &d, &f, 0.0, 1e-10).unwrap();
            assert_eq!(s.value, 0.0);
            assert_eq!(s.diag_part, 0.0);
            assert_eq!(s.nondiag_part, 0.0);
        }
    }

    #[test]
    fn zero_without_pumping_exactly() {
        let p = DotParams::from_inversion(1.0, -1.0).unwrap();
        let d = drive(10.0, 10.0, 0.0);
        let f = FilterSettings::new(0.1, 2.0).unwrap();
        let s = physical_spectrum(&p, &d, &f, 5.0, 1e-10).unwrap();
        assert_eq!(s.value, 0.0);
    }

    #[test]
    fn vanishing_drive_reduces_to_single_term() {
        // J_k(0) = delta_k0: only the k = p = 0 term survives
        let p = dot();
        let d = drive(0.0, 10.0, 0.0);
        let f = FilterSettings::new(0.3, 1.5).unwrap();
        let t = 2.0;
        let s = physical_spectrum(&p, &d, &f, t, 1e-10).unwrap();
        assert_eq!(s.nondiag_part, 0.0);

        let coef = SeriesCoefficients::new(&p, &d, &f, 0, 0);
        let bracket = bracket_term(&coef, t, f.gamma_filter);
        let expected = f.gamma_filter / (2.0 * std::f64::consts::PI) * (p.d0 + 1.0) * bracket.re;
        assert!((s.value - expected).abs() <= 1e-12 * expected.abs().max(1e-12));
    }

    #[test]
    fn bracket_zero_at_t_zero() {
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let f = FilterSettings::new(0.1, 5.0).unwrap();
        let coef = SeriesCoefficients::new(&p, &d, &f, 1, 3);
        assert_eq!(
            bracket_term(&coef, 0.0, f.gamma_filter),
            Complex64::default()
        );
        // singular branch too: Gamma = 2 gamma_s, Delta = k omega_f
        let fs = FilterSettings::new(2.0, 10.0).unwrap();
        let coef = SeriesCoefficients::new(&p, &d, &fs, 1, 2);
        assert_eq!(coef.a_k, Complex64::default());
        assert_eq!(
            bracket_term(&coef, 0.0, fs.gamma_filter),
            Complex64::default()
        );
    }

    #[test]
    fn bracket_singular_point_matches_richardson_pair() {
        // A_k = 0 exactly at Gamma = 2 gamma_s, Delta = k omega_f; compare the
        // limit branch against the mean of direct evaluations at A = +-i eps,
        // which cancels the O(A) term and leaves O(eps^2).
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let t = 1.7;
        let f0 = FilterSettings::new(2.0, 10.0).unwrap();
        let exact = SeriesCoefficients::new(&p, &d, &f0, 1, 3);
        assert_eq!(exact.a_k, Complex64::default());
        let at_zero = bracket_term(&exact, t, f0.gamma_filter);

        let eps = 1e-7;
        let fp = FilterSettings::new(2.0, 10.0 + eps).unwrap();
        let fm = FilterSettings::new(2.0, 10.0 - eps).unwrap();
        let plus = SeriesCoefficients::new(&p, &d, &fp, 1, 3);
        let minus = SeriesCoefficients::new(&p, &d, &fm, 1, 3);
        assert!((plus.a_k.norm() - eps).abs() < 1e-3 * eps);
        let mean = 0.5 * (bracket_term(&plus, t, 2.0) + bracket_term(&minus, t, 2.0));
        let rel = (at_zero - mean).norm() / mean.norm();
        assert!(rel < 1e-8, "limit branch vs Richardson pair: rel = {rel:e}");
    }

    #[test]
    fn bracket_branches_agree_at_switchover() {
        // evaluate both branches on the same coefficients just above the
        // singular threshold; the expansion error there is O(|A t|^2)
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let t = 1.3;
        let gamma_filter = 2.0;
        for &offset in &[1.0e-6, 2.0e-6, -1.5e-6] {
            let f = FilterSettings::new(gamma_filter, 10.0 + offset).unwrap();
            let coef = SeriesCoefficients::new(&p, &d, &f, 1, 4);
            let damp = (-gamma_filter * t).exp();
            let osc = Complex64::new(0.0, coef.b_kp.im * t).exp();
            let dec = ((coef.a_k - gamma_filter) * t).exp();
            let direct = bracket_direct(coef.a_k, coef.b_kp, coef.c_p, osc, dec, damp);
            let expanded = bracket_series_expansion(coef.a_k, coef.c_p, t, gamma_filter, damp);
            let rel = (direct - expanded).norm() / direct.norm();
            assert!(rel < 1e-8, "branch mismatch at offset {offset:e}: {rel:e}");
        }
    }

    #[test]
    fn matches_quadrature_oracle_at_spec_point() {
        // gamma_s = 1, d0 = 0, delta_as = 10, omega_f = 10, phi = 0,
        // Gamma = 0.1, t = 100, Delta = 0
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let f = FilterSettings::new(0.1, 0.0).unwrap();
        let s = physical_spectrum(&p, &d, &f, 100.0, 1e-10).unwrap();
        let q = oracle::quadrature_spectrum(&p, &d, &f, 100.0, 8192).unwrap();
        let rel = (s.value - q).abs() / q.abs();
        assert!(
            rel < 1e-6,
            "closed {} vs quadrature {q}: rel {rel:e}",
            s.value
        );
    }

    #[test]
    fn matches_quadrature_oracle_at_large_modulation() {
        // m = 10 with a nonzero phase, sampled near the comb edge
        let p = dot();
        let d = drive(100.0, 10.0, 0.7);
        let f = FilterSettings::new(0.1, 85.0).unwrap();
        let t = 4.0;
        let s = physical_spectrum(&p, &d, &f, t, 1e-12).unwrap();
        let q = oracle::quadrature_spectrum(&p, &d, &f, t, 4096).unwrap();
        let rel = (s.value - q).abs() / q.abs();
        assert!(
            rel < 1e-6,
            "closed {} vs quadrature {q}: rel {rel:e}",
            s.value
        );
    }

    #[test]
    fn diag_part_matches_independent_closed_form() {
        // The k = p subsum collapses to a Lorentzian plus transient per order:
        //   (d0+1)/(2 pi) J_k^2 [ (gamma_s + G/2) / ((gamma_s + G/2)^2 + (Delta - k w)^2)
        //                         + Re ( (e^{-G t} C_k - G e^{-C_k t}) / (A_k C_k) ) ]
        let p = dot();
        let d = drive(7.0, 3.0, 0.9);
        let g = 0.4;
        let t = 2.1;
        let delta = 1.2;
        let f = FilterSettings::new(g, delta).unwrap();
        let s = physical_spectrum(&p, &d, &f, t, 1e-12).unwrap();

        let table = crate::numerics::bessel_table(d.m, 1e-12).unwrap();
        let mut diag = 0.0;
        for k in -table.max_order()..=table.max_order() {
            let jk2 = table.get(k) * table.get(k);
            let w = p.gamma_s + 0.5 * g;
            let x = delta - k as f64 * d.omega_f;
            let lorentz = w / (w * w + x * x);
            let a = Complex64::new(0.5 * g - p.gamma_s, x);
            let c = Complex64::new(0.5 * g + p.gamma_s, -x);
            let transient = (((-g * t).exp() * c - g * (-(c * t)).exp()) / (a * c)).re;
            diag += jk2 * (lorentz + transient);
        }
        diag *= (p.d0 + 1.0) / (2.0 * std::f64::consts::PI);
        assert!(
            (s.diag_part - diag).abs() < 1e-10 * diag.abs().max(1.0),
            "diag {} vs independent {diag}",
            s.diag_part
        );
    }

    #[test]
    fn narrowing_filter_suppresses_the_spectrum() {
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let t = 10.0;
        let grid: Vec<f64> = (-20..=20).map(|i| i as f64).collect();
        let max_over_grid = |g: f64| {
            let f = |delta: f64| {
                let fs = FilterSettings::new(g, delta).unwrap();
                physical_spectrum(&p, &d, &fs, t, 1e-10).unwrap().value
            };
            grid.iter().map(|&x| f(x)).fold(f64::MIN, f64::max)
        };
        let m2 = max_over_grid(1e-2);
        let m3 = max_over_grid(1e-3);
        let m4 = max_over_grid(1e-4);
        assert!(
            m2 > m3 && m3 > m4,
            "expected monotone decrease: {m2} {m3} {m4}"
        );
    }

    #[test]
    fn asymptotic_phase_shift_equivalence() {
        // for Gamma t >> 1 the phase only shifts the time axis
        let p = dot();
        let g = 0.1;
        let t = 450.0;
        let phi = std::f64::consts::FRAC_PI_2;
        let d_phi = drive(10.0, 10.0, phi);
        let d_0 = drive(10.0, 10.0, 0.0);
        for &delta in &[0.0, 5.0, 10.0] {
            let f = FilterSettings::new(g, delta).unwrap();
            let a = physical_spectrum(&p, &d_phi, &f, t, 1e-10).unwrap().value;
            let b = physical_spectrum(&p, &d_0, &f, t + phi / 10.0, 1e-10)
                .unwrap()
                .value;
            assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn scan_matches_pointwise_and_is_deterministic() {
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let f = FilterSettings::new(0.1, -3.0).unwrap();
        let single = spectrum_scan(&p, &d, 0.1, &[2.0], &[-3.0], 1e-10).unwrap();
        assert_eq!(single.values.len(), 1);
        let direct = physical_spectrum(&p, &d, &f, 2.0, 1e-10).unwrap();
        assert_eq!(single.values[0], direct);

        let t_grid = [0.0, 1.0, 2.0];
        let d_grid = [-5.0, 0.0, 5.0, 10.0];
        let a = spectrum_scan(&p, &d, 0.1, &t_grid, &d_grid, 1e-10).unwrap();
        let b = spectrum_scan(&p, &d, 0.1, &t_grid, &d_grid, 1e-10).unwrap();
        assert_eq!(a.values, b.values);
        // row-major, t outer
        assert_eq!(a.point(1, 2).t, 1.0);
        assert_eq!(a.point(1, 2).detuning, 5.0);
        let fs = FilterSettings::new(0.1, -5.0).unwrap();
        assert_eq!(
            *a.point(1, 0),
            physical_spectrum(&p, &d, &fs, 1.0, 1e-10).unwrap()
        );
    }

    #[test]
    fn scan_converges_to_stationary_at_large_t() {
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let g = 0.1;
        let t = 450.0; // Gamma t = 45 > 40
        let f = FilterSettings::new(g, 4.0).unwrap();
        let s = physical_spectrum(&p, &d, &f, t, 1e-10).unwrap().value;
        let stat = limits::stationary_spectrum(&p, &d, &f, t, 1e-10).unwrap();
        assert!((s - stat).abs() <= 1e-6 * stat.abs().max(1e-9));
    }

    #[test]
    fn invalid_inputs_rejected() {
        let p = dot();
        let d = drive(10.0, 10.0, 0.0);
        let f = FilterSettings::new(0.0, 0.0).unwrap();
        assert!(physical_spectrum(&p, &d, &f, 1.0, 1e-10).is_err()); // Gamma = 0
        let f = FilterSettings::new(0.1, 0.0).unwrap();
        assert!(physical_spectrum(&p, &d, &f, -1.0, 1e-10).is_err());
        assert!(physical_spectrum(&p, &d, &f, 1.0, 0.0).is_err());
        assert!(spectrum_scan(&p, &d, 0.1, &[], &[0.0], 1e-10).is_err());
        assert!(spectrum_scan(&p, &d, 0.1, &[0.0, 0.0], &[0.0], 1e-10).is_err());
        assert!(spectrum_scan(&p, &d, 0.1, &[1.0, 0.5], &[0.0], 1e-10).is_err());
    }
}
