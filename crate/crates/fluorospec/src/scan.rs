//! Grid-scan container shared by the library and the CLI: a matrix of
//! [`SpectrumPoint`] values over a `(t, detuning)` grid plus the full
//! parameter record that produced it.

use crate::model::{DotParams, DriveParams};
use crate::spectrum::SpectrumPoint;
use serde::{Deserialize, Serialize};

/// Which evaluator produced a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanKind {
    /// Full time-dependent spectrum (double Bessel series).
    #[serde(rename = "full")]
    Full,
    /// Large-time periodic attractor.
    #[serde(rename = "stationary")]
    Stationary,
    /// Stationary spectrum with perfect frequency resolution.
    #[serde(rename = "perfect")]
    Perfect,
    /// Static-field single-peak spectrum.
    #[serde(rename = "static")]
    Static,
    /// Finite-integration-time definition (brute-force quadrature).
    #[serde(rename = "finite-T")]
    FiniteT,
}

impl std::fmt::Display for ScanKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ScanKind::Full => "full",
            ScanKind::Stationary => "stationary",
            ScanKind::Perfect => "perfect",
            ScanKind::Static => "static",
            ScanKind::FiniteT => "finite-T",
        };
        f.write_str(s)
    }
}

/// Complete parameter record attached to a scan. Fields that do not apply
/// to the producing mode (e.g. the filter width in perfect-resolution mode)
/// are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanParams {
    pub gamma_s: f64,
    pub gamma_p: f64,
    pub d0: f64,
    pub gamma_big_d: f64,
    pub delta_as: f64,
    pub omega_f: Option<f64>,
    pub phi: f64,
    /// Modulation index `delta_as / omega_f`.
    pub m: Option<f64>,
    pub gamma_filter: Option<f64>,
    pub eps_trunc: f64,
    /// Simpson node count, for quadrature-produced scans.
    pub quadrature_nodes: Option<usize>,
    /// Preset name when the scan came from a CLI preset.
    pub preset: Option<String>,
}

impl ScanParams {
    pub fn full(p: &DotParams, d: &DriveParams, gamma_filter: f64, eps_trunc: f64) -> Self {
        ScanParams {
            gamma_s: p.gamma_s,
            gamma_p: p.gamma_p,
            d0: p.d0,
            gamma_big_d: p.gamma_big_d,
            delta_as: d.delta_as,
            omega_f: Some(d.omega_f),
            phi: d.phi,
            m: Some(d.m),
            gamma_filter: Some(gamma_filter),
            eps_trunc,
            quadrature_nodes: None,
            preset: None,
        }
    }
}

/// A scan: `values[i_t * detuning_grid.len() + i_d]` holds the point at
/// `(t_grid[i_t], detuning_grid[i_d])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumScan {
    pub params: ScanParams,
    pub produced_by: ScanKind,
    pub t_grid: Vec<f64>,
    pub detuning_grid: Vec<f64>,
    pub values: Vec<SpectrumPoint>,
}

impl SpectrumScan {
    /// Matrix dimensions `(|t_grid|, |detuning_grid|)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.t_grid.len(), self.detuning_grid.len())
    }

    /// The point at row `i_t`, column `i_d` (row-major, `t` outer).
    pub fn point(&self, i_t: usize, i_d: usize) -> &SpectrumPoint {
        &self.values[i_t * self.detuning_grid.len() + i_d]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_lossless() {
        let p = DotParams::from_inversion(1.0, 0.0).unwrap();
        let d = DriveParams::new(10.0, 10.0, 0.123_456_789_012_345).unwrap();
        let scan = SpectrumScan {
            params: ScanParams::full(&p, &d, 0.1, 1e-10),
            produced_by: ScanKind::Full,
            t_grid: vec![0.0, 1.0 / 3.0],
            detuning_grid: vec![-5.0, 5.0],
            values: vec![
                SpectrumPoint {
                    t: 0.0,
                    detuning: -5.0,
                    value: 0.0,
                    diag_part: 0.0,
                    nondiag_part: 0.0,
                },
                SpectrumPoint {
                    t: 0.0,
                    detuning: 5.0,
                    value: 1.234_567_890_123_456_7e-3,
                    diag_part: 1e-3,
                    nondiag_part: 2.345_678_901_234_567e-4,
                },
                SpectrumPoint {
                    t: 1.0 / 3.0,
                    detuning: -5.0,
                    value: f64::MIN_POSITIVE,
                    diag_part: f64::MIN_POSITIVE,
                    nondiag_part: 0.0,
                },
                SpectrumPoint {
                    t: 1.0 / 3.0,
                    detuning: 5.0,
                    value: -7.0e-17,
                    diag_part: 0.0,
                    nondiag_part: -7.0e-17,
                },
            ],
        };
        let text = serde_json::to_string(&scan).unwrap();
        let back: SpectrumScan = serde_json::from_str(&text).unwrap();
        assert_eq!(scan, back);
    }

    #[test]
    fn scan_kind_names() {
        assert_eq!(ScanKind::FiniteT.to_string(), "finite-T");
        assert_eq!(
            serde_json::to_string(&ScanKind::FiniteT).unwrap(),
            "\"finite-T\""
        );
    }
}
