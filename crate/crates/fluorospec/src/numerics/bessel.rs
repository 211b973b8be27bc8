//! Integer-order Bessel functions of the first kind.
//!
//! Two evaluation paths, chosen per call:
//!
//! * ascending power series, used for small arguments where the terms never
//!   grow large enough to cancel catastrophically;
//! * Miller's downward recurrence, normalized with the even-order identity
//!   `J_0(x) + 2 * sum_k J_{2k}(x) = 1`, used everywhere else.
//!
//! The downward recurrence fills a whole column `J_0(x) .. J_K(x)` in one
//! pass, which is how [`bessel_table`] builds the coefficient tables for the
//! sideband series. Negative orders and negative arguments are reduced via
//! `J_{-n}(x) = (-1)^n J_n(x)` and `J_n(-x) = (-1)^n J_n(x)`.

use crate::error::{Error, Result};

/// Bessel J values `J_0(m) .. J_K(m)` at a fixed argument, truncated so that
/// the omitted weight `1 - sum_{|k| <= K} J_k(m)^2` is below a tolerance.
///
/// Negative orders are derived on lookup through the parity relation, not
/// stored.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselTable {
    argument: f64,
    values: Vec<f64>,
}

impl BesselTable {
    /// The argument `m` the table was built for.
    pub fn argument(&self) -> f64 {
        self.argument
    }

    /// Largest stored order `K`.
    pub fn max_order(&self) -> i32 {
        (self.values.len() - 1) as i32
    }

    /// `J_k(m)` for any integer `k`; orders beyond `K` return 0 (their
    /// squared weight is below the truncation tolerance by construction).
    #[inline]
    pub fn get(&self, k: i32) -> f64 {
        let a = k.unsigned_abs() as usize;
        match self.values.get(a) {
            Some(&v) if k < 0 && a % 2 == 1 => -v,
            Some(&v) => v,
            None => 0.0,
        }
    }

    /// The stored non-negative orders `J_0(m) ..= J_K(m)`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// `J_order(x)` for any integer order and finite real argument.
///
/// Absolute error stays below 1e-13 for `|x| <= 2000` and
/// `|order| <= |x| + 200`.
pub fn bessel_j(order: i32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!(
            "bessel_j requires finite argument, got {x}"
        )));
    }
    // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
    let mut sign = 1.0;
    let n = order.unsigned_abs() as usize;
    if order < 0 && n % 2 == 1 {
        sign = -sign;
    }
    if x < 0.0 && n % 2 == 1 {
        sign = -sign;
    }
    let ax = x.abs();

    let value = if ax == 0.0 {
        if n == 0 {
            1.0
        } else {
            0.0
        }
    } else if use_series(n, ax) {
        series_jn(n, ax)
    } else {
        let col = miller_column(ax, n);
        col[n]
    };
    Ok(sign * value)
}

/// Builds the truncated table for modulation index `m`: the smallest `K`
/// with `sum_{|k| <= K} J_k(m)^2 >= 1 - eps_trunc`.
pub fn bessel_table(m: f64, eps_trunc: f64) -> Result<BesselTable> {
    if !m.is_finite() {
        return Err(Error::domain(format!(
            "bessel_table requires finite argument, got {m}"
        )));
    }
    if !(eps_trunc > 0.0 && eps_trunc < 1.0) {
        return Err(Error::invalid(format!(
            "eps_trunc must lie in (0, 1), got {eps_trunc}"
        )));
    }
    let ax = m.abs();
    if ax == 0.0 {
        return Ok(BesselTable {
            argument: m,
            values: vec![1.0],
        });
    }

    // Orders past |m| decay superexponentially; this margin covers any
    // eps_trunc down to ~1e-14.
    let mut margin = 25 + (6.0 * ax.cbrt()).ceil() as usize;
    loop {
        let n_max = ax.ceil() as usize + margin;
        let col = miller_column(ax, n_max);
        let mut partial = col[0] * col[0];
        let mut k = 0usize;
        while partial < 1.0 - eps_trunc {
            k += 1;
            if k > n_max {
                break;
            }
            partial += 2.0 * col[k] * col[k];
        }
        if k <= n_max {
            let mut values = col;
            values.truncate(k + 1);
            if m < 0.0 {
                for (i, v) in values.iter_mut().enumerate() {
                    if i % 2 == 1 {
                        *v = -*v;
                    }
                }
            }
            return Ok(BesselTable {
                argument: m,
                values,
            });
        }
        margin *= 2;
    }
}

/// The series is safe when its terms start decaying almost immediately,
/// i.e. for small x outright or whenever the order is at least x.
fn use_series(n: usize, x: f64) -> bool {
    x < 12.0 && (x <= 6.0 || n as f64 >= x)
}

/// Ascending power series J_n(x) = sum_m (-1)^m / (m! (m+n)!) (x/2)^{2m+n},
/// summed until the terms fall below 1e-17 of the running sum.
fn series_jn(n: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    // first term: (x/2)^n / n!
    let mut term = 1.0;
    for i in 1..=n {
        term *= half / i as f64;
        if term == 0.0 {
            return 0.0; // underflow: J_n(x) itself is below f64 range
        }
    }
    let mut sum = term;
    for m in 1..400 {
        term *= -q / (m as f64 * (m + n) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-290) {
            break;
        }
    }
    sum
}

/// Starting order for the downward recurrence: comfortably past the turning
/// point so the contamination from the discarded solution is below 1e-17.
fn miller_start(x: f64, n_max: usize) -> usize {
    let base = (n_max as f64).max(x.ceil());
    n_max.max(x.ceil() as usize) + 40 + (4.0 * base.sqrt()).ceil() as usize
}

/// One Miller pass: returns `J_0(x) ..= J_{n_max}(x)` for `x > 0`.
fn miller_column(x: f64, n_max: usize) -> Vec<f64> {
    let start = miller_start(x, n_max);
    let mut out = vec![0.0; n_max + 1];

    let mut above = 0.0_f64; // J_{nu+1}, unnormalized
    let mut cur = 1e-30_f64; // J_{nu}
    if start <= n_max {
        out[start] = cur;
    }
    // norm accumulates J_0 + 2 * sum_{k >= 1} J_{2k}
    let mut norm = if start.is_multiple_of(2) {
        2.0 * cur
    } else {
        0.0
    };

    for nu in (1..=start).rev() {
        let below = (2.0 * nu as f64 / x) * cur - above;
        above = cur;
        cur = below;
        let order = nu - 1;
        if order <= n_max {
            out[order] = cur;
        }
        if order % 2 == 0 {
            norm += 2.0 * cur;
        }
        // rescale before the growing solution overflows
        if cur.abs() > 1e250 {
            let s = 1e-250;
            cur *= s;
            above *= s;
            norm *= s;
            for v in &mut out {
                *v *= s;
            }
        }
    }
    norm -= cur; // J_0 was added twice

    for v in &mut out {
        *v /= norm;
    }
    out
}
