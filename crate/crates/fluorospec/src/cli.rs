//! Command-line front end: figure presets, grid sweeps, oracle verification,
//! CSV/JSON emission.
//!
//! Everything is expressed in units of `gamma_s` (`--gamma-s` defaults to 1).
//! Grids use the `start:step:stop` syntax, stop inclusive. Exit codes:
//! 0 success, 1 usage or parameter error, 2 verification failure, 3 I/O
//! error.

use crate::error::Error;
use crate::limits;
use crate::model::{DotParams, DriveParams, FilterSettings};
use crate::oracle;
use crate::scan::{ScanKind, ScanParams, SpectrumScan};
use crate::spectrum::{self, SpectrumPoint};
use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Full time-dependent spectrum (closed-form Bessel series).
    Full,
    /// Large-time periodic attractor.
    Stationary,
    /// Stationary spectrum at perfect frequency resolution.
    Perfect,
    /// Static-field single-peak spectrum.
    Static,
    /// Finite-integration-time definition, by brute-force quadrature.
    #[value(name = "finite-T", alias = "finite-t")]
    FiniteT,
}

impl Mode {
    fn kind(self) -> ScanKind {
        match self {
            Mode::Full => ScanKind::Full,
            Mode::Stationary => ScanKind::Stationary,
            Mode::Perfect => ScanKind::Perfect,
            Mode::Static => ScanKind::Static,
            Mode::FiniteT => ScanKind::FiniteT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "fluorospec",
    about = "Fluorescence spectra of an incoherently pumped polar quantum dot \
             under low-frequency monochromatic driving",
    disable_help_subcommand = true
)]
struct Args {
    /// Evaluator to run (defaults to the preset's mode, or `full`).
    #[arg(long, value_enum)]
    mode: Option<Mode>,

    /// Transverse relaxation rate (the unit of every other rate).
    #[arg(long, allow_negative_numbers = true)]
    gamma_s: Option<f64>,

    /// Fabry-Perot filter full width.
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,

    /// Symmetry-violation coupling of the drive.
    #[arg(long, allow_negative_numbers = true)]
    delta_as: Option<f64>,

    /// Drive angular frequency (> 0).
    #[arg(long, allow_negative_numbers = true)]
    omega_f: Option<f64>,

    /// Drive initial phase in radians.
    #[arg(long, allow_negative_numbers = true)]
    phi: Option<f64>,

    /// Stationary inversion in [-1, 1); mutually exclusive with --gamma-p.
    #[arg(long, allow_negative_numbers = true)]
    d0: Option<f64>,

    /// Incoherent pump rate; mutually exclusive with --d0.
    #[arg(long, allow_negative_numbers = true)]
    gamma_p: Option<f64>,

    /// Single elapsed time (integration time T in finite-T mode).
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,

    /// Elapsed-time grid `start:step:stop`.
    #[arg(long, allow_hyphen_values = true)]
    t_grid: Option<String>,

    /// Detuning grid `start:step:stop`.
    #[arg(long, allow_hyphen_values = true)]
    detuning_grid: Option<String>,

    /// Bessel-series truncation tolerance.
    #[arg(long, allow_negative_numbers = true)]
    eps_trunc: Option<f64>,

    /// Figure preset (fig1-fig4, fig6-fig11).
    #[arg(long)]
    preset: Option<String>,

    /// Cross-check the scan against the quadrature oracle; exits 2 on
    /// disagreement beyond --tol.
    #[arg(long)]
    verify: bool,

    /// Relative tolerance for --verify.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,

    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

struct Preset {
    name: &'static str,
    mode: Mode,
    gamma: Option<f64>,
    delta_as: f64,
    omega_f: f64,
    phi: f64,
    t_spec: Option<&'static str>,
}

// All presets use gamma_s = 1, d0 = 0 and a 401-point detuning grid over
// [-2 delta_as, 2 delta_as].
const PRESETS: &[Preset] = &[
    Preset {
        name: "fig1",
        mode: Mode::Perfect,
        gamma: None,
        delta_as: 100.0,
        omega_f: 10.0,
        phi: 0.0,
        t_spec: None,
    },
    Preset {
        name: "fig2",
        mode: Mode::Perfect,
        gamma: None,
        delta_as: 10.0,
        omega_f: 10.0,
        phi: 0.0,
        t_spec: None,
    },
    Preset {
        name: "fig3",
        mode: Mode::Perfect,
        gamma: None,
        delta_as: 10.0,
        omega_f: 0.1,
        phi: 0.0,
        t_spec: None,
    },
    Preset {
        name: "fig4",
        mode: Mode::Perfect,
        gamma: None,
        delta_as: 1000.0,
        omega_f: 10.0,
        phi: 0.0,
        t_spec: None,
    },
    Preset {
        name: "fig6",
        mode: Mode::Full,
        gamma: Some(0.1),
        delta_as: 10.0,
        omega_f: 0.1,
        phi: 0.0,
        t_spec: Some("0:1:100"),
    },
    Preset {
        name: "fig7",
        mode: Mode::Full,
        gamma: Some(0.1),
        delta_as: 10.0,
        omega_f: 10.0,
        phi: 0.0,
        t_spec: Some("0:1:100"),
    },
    Preset {
        name: "fig8",
        mode: Mode::Full,
        gamma: Some(0.1),
        delta_as: 10.0,
        omega_f: 10.0,
        phi: 0.0,
        t_spec: Some("0:0.1:1"),
    },
    Preset {
        name: "fig9",
        mode: Mode::Full,
        gamma: Some(0.1),
        delta_as: 10.0,
        omega_f: 10.0,
        phi: std::f64::consts::FRAC_PI_2,
        t_spec: Some("0:0.1:1"),
    },
    Preset {
        name: "fig10",
        mode: Mode::Full,
        gamma: Some(0.1),
        delta_as: 100.0,
        omega_f: 10.0,
        phi: 0.0,
        t_spec: Some("0:0.05:1"),
    },
    Preset {
        name: "fig11",
        mode: Mode::Full,
        gamma: Some(0.1),
        delta_as: 100.0,
        omega_f: 10.0,
        phi: std::f64::consts::FRAC_PI_2,
        t_spec: Some("0:0.05:1"),
    },
];

fn find_preset(name: &str) -> Option<&'static Preset> {
    let canonical = name.strip_prefix("figure").map(|n| format!("fig{n}"));
    let wanted = canonical.as_deref().unwrap_or(name);
    PRESETS.iter().find(|p| p.name == wanted)
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

/// Parses `start:step:stop` (stop inclusive, step > 0).
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid spec must be start:step:stop, got {spec:?}"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad grid number {s:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    let (start, step, stop) = (nums[0], nums[1], nums[2]);
    if !start.is_finite() || !step.is_finite() || !stop.is_finite() {
        return Err(format!("grid spec must be finite, got {spec:?}"));
    }
    if step <= 0.0 {
        return Err(format!("grid step must be > 0, got {step}"));
    }
    if stop < start {
        return Err(format!("grid stop must be >= start, got {spec:?}"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    if count > 2_000_000 {
        return Err(format!("grid has {count} points; refusing"));
    }
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count - 1) as f64;
    (0..count).map(|i| lo + i as f64 * step).collect()
}

struct Resolved {
    mode: Mode,
    dot: DotParams,
    /// None only in static mode.
    drive: Option<DriveParams>,
    delta_as: f64,
    phi: f64,
    gamma_filter: Option<f64>,
    eps_trunc: f64,
    t_grid: Vec<f64>,
    detuning_grid: Vec<f64>,
    preset: Option<String>,
    verify: bool,
    tol: f64,
    out: Option<PathBuf>,
    format: Format,
}

fn resolve(args: Args) -> Result<Resolved, Failure> {
    let preset = match &args.preset {
        Some(name) => Some(find_preset(name).ok_or_else(|| {
            let known: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
            Failure::usage(format!(
                "unknown preset {name:?}; known presets: {}",
                known.join(", ")
            ))
        })?),
        None => None,
    };

    let mode = args.mode.or(preset.map(|p| p.mode)).unwrap_or(Mode::Full);

    let gamma_s = args.gamma_s.unwrap_or(1.0);
    let dot = match (args.d0, args.gamma_p) {
        (Some(_), Some(_)) => {
            return Err(Failure::usage("--d0 and --gamma-p are mutually exclusive"))
        }
        (Some(d0), None) => DotParams::from_inversion(gamma_s, d0)?,
        (None, Some(gp)) => DotParams::from_rates(gamma_s, gp)?,
        (None, None) => DotParams::from_inversion(gamma_s, 0.0)?,
    };

    let delta_as = args.delta_as.or(preset.map(|p| p.delta_as)).unwrap_or(0.0);
    let omega_f = args.omega_f.or(preset.map(|p| p.omega_f)).unwrap_or(1.0);
    let phi = args.phi.or(preset.map(|p| p.phi)).unwrap_or(0.0);
    let eps_trunc = args.eps_trunc.unwrap_or(1e-10);

    let drive = if mode == Mode::Static {
        None
    } else {
        Some(DriveParams::new(delta_as, omega_f, phi)?)
    };

    let gamma_filter = args.gamma.or(preset.and_then(|p| p.gamma));
    match mode {
        Mode::Full | Mode::Stationary => match gamma_filter {
            None => {
                return Err(Failure::usage(format!(
                    "--gamma is required for --mode {}",
                    mode.kind()
                )))
            }
            Some(g) if !(g.is_finite() && g > 0.0) => {
                return Err(Failure::usage(format!(
                    "--gamma must be > 0 for --mode {}, got {g}",
                    mode.kind()
                )))
            }
            _ => {}
        },
        _ => {}
    }

    if args.t.is_some() && args.t_grid.is_some() {
        return Err(Failure::usage("--t and --t-grid are mutually exclusive"));
    }
    let t_grid = if let Some(t) = args.t {
        vec![t]
    } else if let Some(spec) = &args.t_grid {
        parse_grid(spec).map_err(Failure::usage)?
    } else if let Some(spec) = preset.and_then(|p| p.t_spec) {
        parse_grid(spec).map_err(Failure::usage)?
    } else {
        match mode {
            Mode::Full | Mode::Stationary => parse_grid("0:1:100").map_err(Failure::usage)?,
            Mode::Perfect | Mode::Static => vec![0.0],
            Mode::FiniteT => vec![200.0 / gamma_s],
        }
    };

    let detuning_grid = if let Some(spec) = &args.detuning_grid {
        parse_grid(spec).map_err(Failure::usage)?
    } else if preset.is_some() {
        let span = 2.0 * delta_as.abs();
        linspace(-span, span, 401)
    } else {
        let span = 2.0 * delta_as.abs() + 10.0 * gamma_s;
        let count = if mode == Mode::FiniteT { 41 } else { 401 };
        linspace(-span, span, count)
    };

    if args.verify && mode != Mode::Full {
        return Err(Failure::usage("--verify applies to --mode full only"));
    }

    Ok(Resolved {
        mode,
        dot,
        drive,
        delta_as,
        phi,
        gamma_filter,
        eps_trunc,
        t_grid,
        detuning_grid,
        preset: preset.map(|p| p.name.to_string()),
        verify: args.verify,
        tol: args.tol,
        out: args.out,
        format: args.format,
    })
}

fn scan_params(r: &Resolved, quadrature_nodes: Option<usize>) -> ScanParams {
    ScanParams {
        gamma_s: r.dot.gamma_s,
        gamma_p: r.dot.gamma_p,
        d0: r.dot.d0,
        gamma_big_d: r.dot.gamma_big_d,
        delta_as: r.delta_as,
        omega_f: r.drive.map(|d| d.omega_f),
        phi: r.phi,
        m: r.drive.map(|d| d.m),
        gamma_filter: match r.mode {
            Mode::Full | Mode::Stationary => r.gamma_filter,
            _ => None,
        },
        eps_trunc: r.eps_trunc,
        quadrature_nodes,
        preset: r.preset.clone(),
    }
}

fn finite_t_nodes(d: &DriveParams, big_t: f64) -> usize {
    let need = (8.0 * d.omega_f * big_t / std::f64::consts::PI).ceil() as usize;
    need.max(256).next_power_of_two().min(32_768)
}

fn compute_scan(r: &Resolved) -> Result<SpectrumScan, Failure> {
    let nd = r.detuning_grid.len();
    let grid_points =
        || (0..r.t_grid.len() * nd).map(move |idx| (r.t_grid[idx / nd], r.detuning_grid[idx % nd]));
    if r.mode != Mode::Full {
        spectrum::validate_grid("t grid", &r.t_grid)?;
        spectrum::validate_grid("detuning grid", &r.detuning_grid)?;
        if r.t_grid[0] < 0.0 {
            return Err(Failure::from(Error::domain("t must be >= 0")));
        }
    }
    let scan = match r.mode {
        Mode::Full => {
            let d = r.drive.as_ref().expect("full mode has a drive");
            let mut scan = spectrum::spectrum_scan(
                &r.dot,
                d,
                r.gamma_filter.expect("checked in resolve"),
                &r.t_grid,
                &r.detuning_grid,
                r.eps_trunc,
            )?;
            scan.params.preset = r.preset.clone();
            scan
        }
        Mode::Stationary => {
            let d = r.drive.as_ref().expect("stationary mode has a drive");
            let g = r.gamma_filter.expect("checked in resolve");
            let table = crate::numerics::bessel_table(d.m, r.eps_trunc)?;
            let values: Vec<SpectrumPoint> = grid_points()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(t, delta)| {
                    let (diag, nondiag) = limits::stationary_parts(&r.dot, d, g, t, delta, &table);
                    SpectrumPoint {
                        t,
                        detuning: delta,
                        value: diag + nondiag,
                        diag_part: diag,
                        nondiag_part: nondiag,
                    }
                })
                .collect();
            SpectrumScan {
                params: scan_params(r, None),
                produced_by: ScanKind::Stationary,
                t_grid: r.t_grid.clone(),
                detuning_grid: r.detuning_grid.clone(),
                values,
            }
        }
        Mode::Perfect => {
            let d = r.drive.as_ref().expect("perfect mode has a drive");
            let table = crate::numerics::bessel_table(d.m, r.eps_trunc)?;
            let values: Vec<SpectrumPoint> = grid_points()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(t, delta)| {
                    let v = limits::perfect_resolution_with_table(&r.dot, d, delta, &table);
                    SpectrumPoint {
                        t,
                        detuning: delta,
                        value: v,
                        diag_part: v,
                        nondiag_part: 0.0,
                    }
                })
                .collect();
            SpectrumScan {
                params: scan_params(r, None),
                produced_by: ScanKind::Perfect,
                t_grid: r.t_grid.clone(),
                detuning_grid: r.detuning_grid.clone(),
                values,
            }
        }
        Mode::Static => {
            let values: Vec<SpectrumPoint> = grid_points()
                .map(|(t, delta)| {
                    let v = limits::static_field_spectrum(&r.dot, r.delta_as, delta);
                    SpectrumPoint {
                        t,
                        detuning: delta,
                        value: v,
                        diag_part: v,
                        nondiag_part: 0.0,
                    }
                })
                .collect();
            SpectrumScan {
                params: scan_params(r, None),
                produced_by: ScanKind::Static,
                t_grid: r.t_grid.clone(),
                detuning_grid: r.detuning_grid.clone(),
                values,
            }
        }
        Mode::FiniteT => {
            let d = r.drive.as_ref().expect("finite-T mode has a drive");
            let max_t = r.t_grid.iter().copied().fold(0.0, f64::max);
            let nodes = finite_t_nodes(d, max_t);
            let mut values = Vec::with_capacity(r.t_grid.len() * nd);
            for (big_t, delta) in grid_points() {
                let v = oracle::finite_time_stationary_spectrum(&r.dot, d, delta, big_t, nodes)?;
                values.push(SpectrumPoint {
                    t: big_t,
                    detuning: delta,
                    value: v,
                    diag_part: v,
                    nondiag_part: 0.0,
                });
            }
            SpectrumScan {
                params: scan_params(r, Some(nodes)),
                produced_by: ScanKind::FiniteT,
                t_grid: r.t_grid.clone(),
                detuning_grid: r.detuning_grid.clone(),
                values,
            }
        }
    };
    Ok(scan)
}

/// Evenly spaced subsample of up to `max` indices.
fn subsample(len: usize, max: usize) -> Vec<usize> {
    if len <= max {
        return (0..len).collect();
    }
    let mut out: Vec<usize> = (0..max).map(|i| i * (len - 1) / (max - 1)).collect();
    out.dedup();
    out
}

fn verify_nodes(d: &DriveParams, t: f64, max_abs_detuning: f64) -> usize {
    let rate = d.delta_as.abs() + 0.5 * max_abs_detuning + 1.0;
    let need = (16.0 * t * rate / std::f64::consts::PI).ceil() as usize;
    need.clamp(2048, 16_384).next_power_of_two()
}

fn run_verification(
    r: &Resolved,
    scan: &SpectrumScan,
    out: &mut impl Write,
) -> Result<i32, Failure> {
    let d = r.drive.as_ref().expect("verify implies full mode");
    let g = r.gamma_filter.expect("verify implies full mode");
    let nd = scan.detuning_grid.len();

    // Sample strictly positive times (at t = 0 both paths are structurally 0)
    // within the transient window t <= 3/Gamma: beyond it the spectrum is the
    // periodic attractor and the oracle cost grows quadratically with t.
    let t_cap = (3.0 / g).max(10.0);
    let mut positive_t: Vec<usize> = (0..scan.t_grid.len())
        .filter(|&i| scan.t_grid[i] > 0.0 && scan.t_grid[i] <= t_cap)
        .collect();
    if positive_t.is_empty() {
        positive_t = (0..scan.t_grid.len())
            .filter(|&i| scan.t_grid[i] > 0.0)
            .take(1)
            .collect();
    }
    let t_indices: Vec<usize> = if positive_t.is_empty() {
        Vec::new()
    } else {
        subsample(positive_t.len(), 5)
            .into_iter()
            .map(|i| positive_t[i])
            .collect()
    };
    let d_indices = subsample(nd, 5);
    let max_abs_detuning = scan
        .detuning_grid
        .iter()
        .fold(0.0, |acc: f64, &x| acc.max(x.abs()));

    let mut max_rel: f64 = 0.0;
    let mut failed = false;
    for &it in &t_indices {
        let t = scan.t_grid[it];
        let nodes = verify_nodes(d, t, max_abs_detuning);
        if !oracle::oscillation_resolved(d, t, nodes) {
            writeln!(
                out,
                "verify: warning: {nodes} nodes under-resolve the drive oscillation at t = {t}"
            )?;
        }
        for &id in &d_indices {
            let delta = scan.detuning_grid[id];
            let f = FilterSettings::new(g, delta).unwrap();
            let q = oracle::quadrature_spectrum(&r.dot, d, &f, t, nodes)?;
            let closed = scan.values[it * nd + id].value;
            let report = oracle::OracleReport::new(closed, q, nodes);
            let ok = report.rel_err <= r.tol || report.abs_err <= 1e-9;
            if !ok {
                failed = true;
            }
            max_rel = max_rel.max(report.rel_err);
            writeln!(
                out,
                "verify: t={t} detuning={delta}: closed={closed:.10e} oracle={q:.10e} rel_err={:.3e}{}",
                report.rel_err,
                if ok { "" } else { "  FAIL" }
            )?;
        }
    }

    let ode = oracle::regression_ode_check(&r.dot, d, 0.0, 10.0 / r.dot.gamma_s, 10_000);
    let ode_ok = ode.rel_err <= r.tol;
    if !ode_ok {
        failed = true;
    }
    max_rel = max_rel.max(ode.rel_err);
    writeln!(
        out,
        "verify: regression ODE: rel_err={:.3e}{}",
        ode.rel_err,
        if ode_ok { "" } else { "  FAIL" }
    )?;
    writeln!(out, "verify: max rel_err = {max_rel:.3e} (tol {})", r.tol)?;

    Ok(if failed { EXIT_VERIFY } else { EXIT_OK })
}

fn write_metadata_line(
    w: &mut impl Write,
    key: &str,
    value: impl std::fmt::Display,
) -> std::io::Result<()> {
    writeln!(w, "# {key}={value}")
}

/// Emits a scan as CSV: `# key=value` metadata lines, a column header, then
/// one row per grid point in row-major order (t outer), 17 significant
/// digits.
pub fn emit_csv(scan: &SpectrumScan, w: &mut impl Write) -> std::io::Result<()> {
    let p = &scan.params;
    write_metadata_line(w, "produced_by", scan.produced_by)?;
    if let Some(preset) = &p.preset {
        write_metadata_line(w, "preset", preset)?;
    }
    write_metadata_line(w, "gamma_s", p.gamma_s)?;
    write_metadata_line(w, "gamma_p", p.gamma_p)?;
    write_metadata_line(w, "d0", p.d0)?;
    write_metadata_line(w, "gamma_big_d", p.gamma_big_d)?;
    write_metadata_line(w, "delta_as", p.delta_as)?;
    if let Some(v) = p.omega_f {
        write_metadata_line(w, "omega_f", v)?;
    }
    write_metadata_line(w, "phi", p.phi)?;
    if let Some(v) = p.m {
        write_metadata_line(w, "m", v)?;
    }
    if let Some(v) = p.gamma_filter {
        write_metadata_line(w, "gamma_filter", v)?;
    }
    write_metadata_line(w, "eps_trunc", p.eps_trunc)?;
    if let Some(v) = p.quadrature_nodes {
        write_metadata_line(w, "quadrature_nodes", v)?;
    }
    writeln!(w, "t,detuning,S,S_diag,S_nondiag")?;
    for v in &scan.values {
        writeln!(
            w,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            v.t, v.detuning, v.value, v.diag_part, v.nondiag_part
        )?;
    }
    Ok(())
}

/// Metadata key/value pairs and data rows parsed back out of a CSV scan.
pub type CsvContents = (Vec<(String, String)>, Vec<[f64; 5]>);

/// Parses the CSV produced by [`emit_csv`]: metadata key/value pairs and the
/// data rows `[t, detuning, S, S_diag, S_nondiag]`.
pub fn parse_csv(text: &str) -> Result<CsvContents, String> {
    let mut meta = Vec::new();
    let mut rows = Vec::new();
    let mut seen_header = false;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            let (k, v) = rest
                .split_once('=')
                .ok_or_else(|| format!("bad metadata line {line:?}"))?;
            meta.push((k.to_string(), v.to_string()));
        } else if !seen_header {
            if line != "t,detuning,S,S_diag,S_nondiag" {
                return Err(format!("unexpected header {line:?}"));
            }
            seen_header = true;
        } else if !line.is_empty() {
            let cols: Vec<f64> = line
                .split(',')
                .map(|c| {
                    c.parse::<f64>()
                        .map_err(|e| format!("bad value {c:?}: {e}"))
                })
                .collect::<Result<_, _>>()?;
            if cols.len() != 5 {
                return Err(format!("expected 5 columns, got {}", cols.len()));
            }
            rows.push([cols[0], cols[1], cols[2], cols[3], cols[4]]);
        }
    }
    Ok((meta, rows))
}

fn emit(scan: &SpectrumScan, format: Format, out: Option<&PathBuf>) -> Result<(), Failure> {
    let mut buffer = Vec::new();
    match format {
        Format::Csv => emit_csv(scan, &mut buffer)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut buffer, scan).map_err(|e| Failure {
                code: EXIT_IO,
                message: e.to_string(),
            })?;
            buffer.push(b'\n');
        }
    }
    match out {
        Some(path) => std::fs::write(path, &buffer).map_err(|e| Failure {
            code: EXIT_IO,
            message: format!("writing {}: {e}", path.display()),
        })?,
        None => std::io::stdout().write_all(&buffer)?,
    }
    Ok(())
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(args) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("fluorospec: {}", f.message);
            f.code
        }
    }
}

fn execute(args: Args) -> Result<i32, Failure> {
    let resolved = resolve(args)?;
    let scan = compute_scan(&resolved)?;
    let mut code = EXIT_OK;
    if resolved.verify {
        let stdout = std::io::stdout();
        code = run_verification(&resolved, &scan, &mut stdout.lock())?;
    }
    emit(&scan, resolved.format, resolved.out.as_ref())?;
    Ok(code)
}
