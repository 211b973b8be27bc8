//! Classical fixed-step fourth-order Runge-Kutta for scalar complex ODEs.

use num_complex::Complex64;

/// Integrates `dy/dt = rhs(t, y)` from `(t0, y0)` to `t1` with `steps` equal
/// steps and returns the terminal value. Global error is O(h^4).
pub fn rk4_solve<F>(rhs: F, y0: Complex64, t0: f64, t1: f64, steps: usize) -> Complex64
where
    F: Fn(f64, Complex64) -> Complex64,
{
    assert!(steps >= 1, "rk4_solve requires at least one step");
    assert!(t1 >= t0, "rk4_solve requires t1 >= t0");
    let h = (t1 - t0) / steps as f64;
    let mut y = y0;
    for i in 0..steps {
        let t = t0 + i as f64 * h;
        y = rk4_step(&rhs, t, y, h);
    }
    y
}

#[inline]
pub(crate) fn rk4_step<F>(rhs: &F, t: f64, y: Complex64, h: f64) -> Complex64
where
    F: Fn(f64, Complex64) -> Complex64,
{
    let k1 = rhs(t, y);
    let k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
    let k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
    let k4 = rhs(t + h, y + h * k3);
    y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}
