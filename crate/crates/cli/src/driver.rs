//! Grid and line scan drivers: compute rows, render CSV, build manifests.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use scs_phase::evolution::{build_context, EvolutionSpec};
use scs_phase::fock::Truncation;
use scs_phase::phase::{gp_analytic, phases_with_context, wrap_phase, NormMode};
use scs_phase::states::{build_pair, required_nmax, Family, MixedStateSpec, ScsParams};
use scs_phase::verify::oracle_context_nmax;

use crate::grid::GridAxis;

/// Largest displacement magnitude allowed in numeric mode without --force.
pub const NUMERIC_ALPHA_BOUND: f64 = 1.5;
/// Largest squeezing allowed in numeric mode without --force.
pub const NUMERIC_R_BOUND: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Analytic,
    Numeric,
    Both,
}

impl Mode {
    fn is_numeric(self) -> bool {
        matches!(self, Mode::Numeric | Mode::Both)
    }
}

#[derive(Debug)]
pub enum DriverError {
    Validation(String),
    Core(scs_phase::Error),
}

impl From<scs_phase::Error> for DriverError {
    fn from(e: scs_phase::Error) -> Self {
        DriverError::Core(e)
    }
}

impl std::fmt::Display for DriverError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DriverError::Validation(msg) => write!(f, "{msg}"),
            DriverError::Core(e) => write!(f, "{e}"),
        }
    }
}

pub struct ScanConfig {
    pub family: Family,
    pub theta: f64,
    pub lambda: f64,
    pub r0: f64,
    pub r1: f64,
    pub r_ref: Option<f64>,
    pub alpha0: GridAxis,
    pub alpha1: GridAxis,
    pub mode: Mode,
    pub norm: NormMode,
    pub nmax: Option<usize>,
    pub buffer: usize,
    pub tail_tol: f64,
    pub workers: usize,
    pub force: bool,
}

pub struct LineConfig {
    pub theta: f64,
    pub lambda: f64,
    pub r0: f64,
    pub r1: f64,
    pub alpha: GridAxis,
    pub norm: NormMode,
    pub workers: usize,
}

/// A finished scan: CSV text, manifest, and the oracle-gap summary.
pub struct ScanOutput {
    pub csv: String,
    pub manifest: serde_json::Value,
    pub max_abs_err: Option<f64>,
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Entangled => "entangled",
        Family::SepUnbalanced => "sep-unbalanced",
        Family::SepBalanced => "sep-balanced",
    }
}

fn norm_name(n: NormMode) -> &'static str {
    match n {
        NormMode::Corrected => "corrected",
        NormMode::PaperLiteral => "paper-literal",
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Analytic => "analytic",
        Mode::Numeric => "numeric",
        Mode::Both => "both",
    }
}

fn axis_json(a: &GridAxis) -> serde_json::Value {
    json!({ "start": a.start, "stop": a.stop, "count": a.count })
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool, DriverError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| DriverError::Validation(format!("cannot build worker pool: {e}")))
}

fn numeric_bounds_check(cfg: &ScanConfig, r_ref: f64) -> Result<(), DriverError> {
    let alpha_extent = cfg
        .alpha0
        .start
        .abs()
        .max(cfg.alpha0.stop.abs())
        .max(cfg.alpha1.start.abs())
        .max(cfg.alpha1.stop.abs());
    let r_extent = cfg.r0.max(cfg.r1).max(r_ref);
    let inside = alpha_extent <= NUMERIC_ALPHA_BOUND && r_extent <= NUMERIC_R_BOUND;
    if inside {
        return Ok(());
    }
    if cfg.force {
        eprintln!(
            "warning: numeric scan outside |alpha| <= {NUMERIC_ALPHA_BOUND}, r <= {NUMERIC_R_BOUND}; \
             truncation may need --nmax well above the default rule"
        );
        return Ok(());
    }
    Err(DriverError::Validation(format!(
        "numeric mode is validated for |alpha| <= {NUMERIC_ALPHA_BOUND} and r <= {NUMERIC_R_BOUND}; \
         pass --force to run outside that envelope"
    )))
}

/// Resolves the evolution reference squeezing for numeric modes.
fn resolve_r_ref(cfg: &ScanConfig) -> Result<f64, DriverError> {
    match cfg.r_ref {
        Some(r) => Ok(r),
        None if cfg.r0 == cfg.r1 => Ok(cfg.r0),
        None => Err(DriverError::Validation(
            "--r-ref is required when --r0 and --r1 differ".to_string(),
        )),
    }
}

struct NumericRow {
    geometric: f64,
    total: f64,
    dynamical: f64,
}

pub fn run_scan(cfg: &ScanConfig) -> Result<ScanOutput, DriverError> {
    let start = Instant::now();
    let a0 = cfg.alpha0.values();
    let a1 = cfg.alpha1.values();
    let points: Vec<(f64, f64)> = a0
        .iter()
        .flat_map(|&x| a1.iter().map(move |&y| (x, y)))
        .collect();

    let pool = build_pool(cfg.workers)?;
    let analytic: Vec<f64> = pool.install(|| {
        points
            .par_iter()
            .map(|&(x, y)| {
                let spec = MixedStateSpec::new(
                    cfg.family,
                    cfg.lambda,
                    ScsParams::new(x, cfg.r0)?,
                    ScsParams::new(y, cfg.r1)?,
                )?;
                gp_analytic(&spec, cfg.theta, cfg.norm)
            })
            .collect::<scs_phase::Result<_>>()
    })?;

    let mut numeric: Option<Vec<NumericRow>> = None;
    let mut trunc_used: Option<Truncation> = None;
    let mut r_ref_used: Option<f64> = None;
    if cfg.mode.is_numeric() {
        let r_ref = resolve_r_ref(cfg)?;
        numeric_bounds_check(cfg, r_ref)?;
        let mut params = Vec::new();
        for &alpha in a0.iter().chain(a1.iter()) {
            params.push(ScsParams::new(alpha, cfg.r0)?);
            params.push(ScsParams::new(alpha, cfg.r1)?);
        }
        // The context floor keeps arg(trace) stable where the final trace is
        // small; an explicit --nmax overrides both rules.
        let n_max = match cfg.nmax {
            Some(n) => n,
            None => oracle_context_nmax(r_ref, required_nmax(&params, cfg.tail_tol)?),
        };
        let trunc = Truncation::new(n_max, cfg.buffer, cfg.tail_tol)?;
        let ctx = build_context(&EvolutionSpec::new(cfg.theta, r_ref, trunc)?)?;
        let rows: Vec<NumericRow> = pool.install(|| {
            points
                .par_iter()
                .map(|&(x, y)| {
                    let spec = MixedStateSpec::new(
                        cfg.family,
                        cfg.lambda,
                        ScsParams::new(x, cfg.r0)?,
                        ScsParams::new(y, cfg.r1)?,
                    )?;
                    let pair = build_pair(&spec, &trunc)?;
                    let res = phases_with_context(&pair, &ctx)?;
                    Ok(NumericRow {
                        geometric: res.geometric,
                        total: res.total,
                        dynamical: res.dynamical,
                    })
                })
                .collect::<scs_phase::Result<_>>()
        })?;
        numeric = Some(rows);
        trunc_used = Some(trunc);
        r_ref_used = Some(r_ref);
    }

    let numeric_header = ",gp_numeric,gp_total,gp_dynamical,abs_err_mod2pi";
    let mut csv = String::from("alpha0,alpha1,gp_analytic,gp_wrapped");
    if numeric.is_some() {
        csv.push_str(numeric_header);
    }
    csv.push('\n');
    let mut max_abs_err: Option<f64> = None;
    for (i, &(x, y)) in points.iter().enumerate() {
        let ga = analytic[i];
        csv.push_str(&fmt17(x));
        csv.push(',');
        csv.push_str(&fmt17(y));
        csv.push(',');
        csv.push_str(&fmt17(ga));
        csv.push(',');
        csv.push_str(&fmt17(wrap_phase(ga)));
        if let Some(rows) = &numeric {
            let row = &rows[i];
            let err = wrap_phase(ga - row.geometric).abs();
            let m = max_abs_err.get_or_insert(0.0);
            *m = m.max(err);
            for v in [row.geometric, row.total, row.dynamical, err] {
                csv.push(',');
                csv.push_str(&fmt17(v));
            }
        }
        csv.push('\n');
    }

    let manifest = json!({
        "command": "scan",
        "inputs": {
            "state": family_name(cfg.family),
            "theta": cfg.theta,
            "lambda": cfg.lambda,
            "r0": cfg.r0,
            "r1": cfg.r1,
            "r_ref": r_ref_used,
            "alpha0": axis_json(&cfg.alpha0),
            "alpha1": axis_json(&cfg.alpha1),
            "mode": mode_name(cfg.mode),
            "norm": norm_name(cfg.norm),
            "force": cfg.force,
        },
        "truncation": trunc_used.map(|t| json!({
            "n_max": t.n_max,
            "buffer": t.buffer,
            "tail_tol": t.tail_tol,
        })),
        "library_version": env!("CARGO_PKG_VERSION"),
        "summary": {
            "rows": points.len(),
            "max_abs_err_mod2pi": max_abs_err,
        },
        "runtime": {
            "workers": cfg.workers,
            "wall_seconds": start.elapsed().as_secs_f64(),
        },
    });
    Ok(ScanOutput {
        csv,
        manifest,
        max_abs_err,
    })
}

pub fn run_line(cfg: &LineConfig) -> Result<ScanOutput, DriverError> {
    let start = Instant::now();
    let alphas = cfg.alpha.values();
    let pool = build_pool(cfg.workers)?;
    let rows: Vec<[f64; 3]> = pool.install(|| {
        alphas
            .par_iter()
            .map(|&alpha| {
                let p0 = ScsParams::new(alpha, cfg.r0)?;
                let p1 = ScsParams::new(alpha, cfg.r1)?;
                let mut out = [0.0; 3];
                for (slot, family) in out.iter_mut().zip([
                    Family::Entangled,
                    Family::SepUnbalanced,
                    Family::SepBalanced,
                ]) {
                    let spec = MixedStateSpec::new(family, cfg.lambda, p0, p1)?;
                    *slot = gp_analytic(&spec, cfg.theta, cfg.norm)?.abs();
                }
                Ok(out)
            })
            .collect::<scs_phase::Result<_>>()
    })?;

    let mut csv = String::from("alpha,abs_gp_ent,abs_gp_sep_unbal,abs_gp_sep_bal\n");
    for (alpha, row) in alphas.iter().zip(&rows) {
        csv.push_str(&fmt17(*alpha));
        for v in row {
            csv.push(',');
            csv.push_str(&fmt17(*v));
        }
        csv.push('\n');
    }

    let manifest = json!({
        "command": "line",
        "inputs": {
            "theta": cfg.theta,
            "lambda": cfg.lambda,
            "r0": cfg.r0,
            "r1": cfg.r1,
            "alpha": axis_json(&cfg.alpha),
            "norm": norm_name(cfg.norm),
        },
        "truncation": serde_json::Value::Null,
        "library_version": env!("CARGO_PKG_VERSION"),
        "summary": { "rows": alphas.len(), "max_abs_err_mod2pi": serde_json::Value::Null },
        "runtime": {
            "workers": cfg.workers,
            "wall_seconds": start.elapsed().as_secs_f64(),
        },
    });
    Ok(ScanOutput {
        csv,
        manifest,
        max_abs_err: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn axis(start: f64, stop: f64, count: usize) -> GridAxis {
        GridAxis { start, stop, count }
    }

    fn base_scan() -> ScanConfig {
        ScanConfig {
            family: Family::SepUnbalanced,
            theta: FRAC_PI_4,
            lambda: 0.5,
            r0: 0.2,
            r1: 0.2,
            r_ref: None,
            alpha0: axis(-1.0, 1.0, 3),
            alpha1: axis(-1.0, 1.0, 3),
            mode: Mode::Analytic,
            norm: NormMode::Corrected,
            nmax: None,
            buffer: 10,
            tail_tol: 1e-12,
            workers: 1,
            force: false,
        }
    }

    #[test]
    fn analytic_scan_emits_four_columns() {
        let out = run_scan(&base_scan()).unwrap();
        let mut lines = out.csv.lines();
        assert_eq!(lines.next().unwrap(), "alpha0,alpha1,gp_analytic,gp_wrapped");
        assert_eq!(out.csv.lines().count(), 10);
        for line in lines {
            assert_eq!(line.split(',').count(), 4);
        }
        assert!(out.max_abs_err.is_none());
    }

    #[test]
    fn unbalanced_phase_vanishes_when_either_displacement_is_zero() {
        let mut cfg = base_scan();
        cfg.alpha0 = axis(-1.0, 0.0, 2);
        cfg.alpha1 = axis(0.0, 1.0, 2);
        let out = run_scan(&cfg).unwrap();
        // At lambda = 1/2 the phase is proportional to eta0*eta1, so rows
        // with a zero displacement on either axis carry gp_analytic = 0.
        for line in out.csv.lines().skip(1) {
            let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
            if cols[0] == 0.0 || cols[1] == 0.0 {
                assert_eq!(cols[2], 0.0);
            } else {
                assert!(cols[2].abs() > 1e-3);
            }
        }
    }

    #[test]
    fn scan_row_order_is_alpha0_major() {
        let mut cfg = base_scan();
        cfg.alpha0 = axis(0.0, 1.0, 2);
        cfg.alpha1 = axis(0.0, 1.0, 3);
        let out = run_scan(&cfg).unwrap();
        let firsts: Vec<&str> = out
            .csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap())
            .collect();
        assert_eq!(firsts.len(), 6);
        assert!(firsts[..3].iter().all(|&s| s == firsts[0]));
        assert!(firsts[3..].iter().all(|&s| s == firsts[3]));
    }

    #[test]
    fn numeric_mode_requires_r_ref_when_squeezings_differ() {
        let mut cfg = base_scan();
        cfg.mode = Mode::Numeric;
        cfg.r1 = 0.3;
        match run_scan(&cfg) {
            Err(DriverError::Validation(msg)) => assert!(msg.contains("--r-ref")),
            other => panic!("expected validation error, got {other:?}", other = other.is_ok()),
        }
    }

    #[test]
    fn numeric_mode_enforces_envelope_without_force() {
        let mut cfg = base_scan();
        cfg.mode = Mode::Numeric;
        cfg.alpha0 = axis(-2.0, 2.0, 3);
        match run_scan(&cfg) {
            Err(DriverError::Validation(msg)) => assert!(msg.contains("--force")),
            _ => panic!("expected validation error"),
        }
    }

    #[test]
    fn both_mode_matches_analytic_on_a_small_grid() {
        let mut cfg = base_scan();
        cfg.mode = Mode::Both;
        cfg.r0 = 0.0;
        cfg.r1 = 0.0;
        cfg.alpha0 = axis(-0.5, 0.5, 2);
        cfg.alpha1 = axis(-0.5, 0.5, 2);
        let out = run_scan(&cfg).unwrap();
        let header = out.csv.lines().next().unwrap();
        assert_eq!(
            header,
            "alpha0,alpha1,gp_analytic,gp_wrapped,gp_numeric,gp_total,gp_dynamical,abs_err_mod2pi"
        );
        assert!(out.max_abs_err.unwrap() <= 1e-5, "{:?}", out.max_abs_err);
        assert_eq!(out.manifest["truncation"]["n_max"], 32);
    }

    #[test]
    fn line_scan_is_symmetric_and_zero_at_origin() {
        let cfg = LineConfig {
            theta: FRAC_PI_4,
            lambda: 0.5,
            r0: 0.2,
            r1: 0.5,
            alpha: axis(-1.0, 1.0, 5),
            norm: NormMode::Corrected,
            workers: 2,
        };
        let out = run_line(&cfg).unwrap();
        let rows: Vec<Vec<f64>> = out
            .csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), 5);
        // alpha = 0 row vanishes for all three families.
        for v in &rows[2][1..] {
            assert_eq!(*v, 0.0);
        }
        for k in 1..4 {
            assert!((rows[0][k] - rows[4][k]).abs() <= 1e-12);
            assert!((rows[1][k] - rows[3][k]).abs() <= 1e-12);
        }
    }

    #[test]
    fn balanced_modulus_decreases_with_lambda_when_eta1_dominates() {
        // With r0 < r1 and alpha0 = alpha1, eta0 < eta1, so moving weight
        // onto the first branch shrinks the lambda-weighted eta quadrance.
        let mut prev = f64::INFINITY;
        for lambda in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let cfg = LineConfig {
                theta: FRAC_PI_4,
                lambda,
                r0: 0.2,
                r1: 0.5,
                alpha: axis(0.9, 1.1, 2),
                norm: NormMode::Corrected,
                workers: 1,
            };
            let out = run_line(&cfg).unwrap();
            let row: Vec<f64> = out
                .csv
                .lines()
                .nth(1)
                .unwrap()
                .split(',')
                .map(|c| c.parse().unwrap())
                .collect();
            assert!(row[3] < prev, "lambda={lambda}: {} !< {prev}", row[3]);
            prev = row[3];
        }
    }

    #[test]
    fn worker_count_does_not_change_bytes() {
        let mut a = base_scan();
        a.alpha0 = axis(-1.5, 1.5, 4);
        a.alpha1 = axis(-1.5, 1.5, 4);
        let mut b = base_scan();
        b.alpha0 = axis(-1.5, 1.5, 4);
        b.alpha1 = axis(-1.5, 1.5, 4);
        b.workers = 4;
        assert_eq!(run_scan(&a).unwrap().csv, run_scan(&b).unwrap().csv);
    }
}
