//! Self-contained numerical kernels: integer-order Bessel J, composite
//! Simpson quadrature, and fixed-step RK4. All functions are pure.

mod bessel;
mod ode;
mod quadrature;

pub use bessel::{bessel_j, bessel_table, BesselTable};
pub use ode::rk4_solve;
pub use quadrature::integrate_1d;

pub(crate) use ode::rk4_step;
