//! Fluorescence spectra of an incoherently pumped polar two-level quantum dot
//! driven by a low-frequency monochromatic field.
//!
//! The emitter is a two-level system with broken inversion symmetry (unequal
//! permanent dipole moments), pumped incoherently at a rate `gamma_p` and
//! damped transversally at `gamma_s`. Switching on a low-frequency drive at
//! `t = 0` phase-modulates the dipole coherence; the photodetector counting
//! rate behind a Fabry-Perot filter of width `gamma_filter` then defines a
//! time-dependent "physical" spectrum.
//!
//! The crate provides
//!
//! * [`spectrum::physical_spectrum`]: the closed-form double Bessel series
//!   for the time-dependent spectrum, with its diagonal/non-diagonal split,
//! * [`limits`]: the four analytic limiting spectra (stationary, perfect
//!   resolution, static field, narrow filter),
//! * [`oracle`]: brute-force validators (nested quadrature of the defining
//!   integral, Runge-Kutta integration of the regression ODE, and the
//!   finite-integration-time spectrum definition),
//! * [`numerics`]: the self-contained kernels behind all of the above
//!   (integer-order Bessel J, composite Simpson, fixed-step RK4),
//! * [`cli`]: the `fluorospec` command-line front end with figure presets
//!   and CSV/JSON emission.
//!
//! All rates are expressed in units of `gamma_s` by convention; nothing in
//! the library enforces this, but the CLI defaults to `gamma_s = 1`.

pub mod cli;
pub mod error;
pub mod limits;
pub mod model;
pub mod numerics;
pub mod oracle;
pub mod scan;
pub mod spectrum;

pub use error::{Error, Result};
pub use model::{DotParams, DriveParams, FilterSettings};
pub use num_complex::Complex64;
pub use scan::{ScanKind, ScanParams, SpectrumScan};
pub use spectrum::{physical_spectrum, spectrum_scan, SpectrumPoint};
