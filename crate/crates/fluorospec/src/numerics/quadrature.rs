//! Fixed-node composite Simpson quadrature for complex-valued integrands.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Composite Simpson estimate of `int_a^b f(x) dx` with `n` panels
/// (`n` even, `n >= 2`). Error is O((b-a)^5 / n^4) for smooth `f`.
///
/// Nodes are visited in ascending order and accumulated sequentially, so the
/// result is deterministic.
pub fn integrate_1d<F>(f: F, a: f64, b: f64, n: usize) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "Simpson node count must be even and >= 2, got {n}"
        )));
    }
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::invalid(format!(
            "integration interval must be finite with a <= b, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    Ok(sum * (h / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_is_exact() {
        let v = integrate_1d(|_| Complex64::new(1.0, 0.0), 0.0, 1.0, 2).unwrap();
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn complex_exponential() {
        // int_0^pi e^{ix} dx = 2i
        let v = integrate_1d(
            |x| Complex64::new(0.0, x).exp(),
            0.0,
            std::f64::consts::PI,
            256,
        )
        .unwrap();
        assert!((v - Complex64::new(0.0, 2.0)).norm() < 1e-8);
    }

    #[test]
    fn real_decay() {
        // int_0^10 e^{-x} dx = 1 - e^{-10}
        let v = integrate_1d(|x| Complex64::new((-x).exp(), 0.0), 0.0, 10.0, 1024).unwrap();
        assert!((v.re - (1.0 - (-10.0_f64).exp())).abs() < 1e-10);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn fourth_order_convergence() {
        // halving h cuts the error by ~16x on a smooth integrand
        let exact = Complex64::new(0.0, 2.0);
        let f = |x: f64| Complex64::new(0.0, x).exp();
        let e1 = (integrate_1d(f, 0.0, std::f64::consts::PI, 16).unwrap() - exact).norm();
        let e2 = (integrate_1d(f, 0.0, std::f64::consts::PI, 32).unwrap() - exact).norm();
        let ratio = e1 / e2;
        assert!(
            (10.0..25.0).contains(&ratio),
            "expected ~16x error reduction, got {ratio}"
        );
    }

    #[test]
    fn rejects_bad_node_counts_and_intervals() {
        let f = |_: f64| Complex64::new(1.0, 0.0);
        assert!(integrate_1d(f, 0.0, 1.0, 3).is_err());
        assert!(integrate_1d(f, 0.0, 1.0, 0).is_err());
        assert!(integrate_1d(f, 1.0, 0.0, 2).is_err());
        assert_eq!(
            integrate_1d(f, 2.0, 2.0, 2).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }
}
