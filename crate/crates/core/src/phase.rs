//! Total, dynamical, and geometric phases: the numeric route over the
//! truncated Fock space and the closed-form expressions for the three
//! mixture families.

use std::f64::consts::{PI, TAU};

use faer::c64;

use crate::error::{Error, Result};
use crate::evolution::{build_context, EvolutionContext, EvolutionSpec};
use crate::fock::rank2_expectation;
use crate::states::{build_pair, overlap_closed, MixedStateSpec, ScsParams, StatePair};

/// Normalization used inside the entangled-family closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMode {
    /// `N = 2 + 2 p01^2`, the value direct expansion of the state norm
    /// gives.
    Corrected,
    /// `N = 2 + 2 p01`, as printed in the source expressions.
    PaperLiteral,
}

/// Residual and truncation metadata carried alongside a numeric phase.
#[derive(Debug, Clone, Copy)]
pub struct PhaseDiagnostics {
    pub n_max: usize,
    pub tail_deficit: f64,
    pub dyn_imag_residual: f64,
    pub trace_abs: f64,
}

/// Numeric phase triple for one mixed state under one cyclic evolution.
#[derive(Debug, Clone)]
pub struct PhaseResult {
    pub total: f64,
    pub dynamical: f64,
    pub geometric: f64,
    pub geometric_wrapped: f64,
    pub trace_final: c64,
    pub diagnostics: PhaseDiagnostics,
}

/// Reduces a phase to the principal interval (-pi, pi], sending ties at -pi
/// to +pi.
pub fn wrap_phase(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// Total phase `arg Tr[rho(0) U_final]` with the raw trace. The arg
/// convention is (-pi, pi].
pub fn total_phase(pair: &StatePair, ctx: &EvolutionContext) -> Result<(f64, c64)> {
    let trace = rank2_expectation(&pair.psi1, &pair.psi2, pair.lambda, &ctx.u_final)?;
    let trace_abs = trace.norm();
    if trace_abs < 1e-12 {
        return Err(Error::UndefinedPhase { trace_abs });
    }
    let mut arg = trace.arg();
    if arg <= -PI {
        arg = PI;
    }
    Ok((arg, trace))
}

fn dynamical_expectation(pair: &StatePair, ctx: &EvolutionContext) -> Result<c64> {
    rank2_expectation(&pair.psi1, &pair.psi2, pair.lambda, &ctx.g)
}

/// Dynamical phase `-2 pi Tr[rho(0) G]`. The generator is constant in phi,
/// so the phi-integral reduces to a single expectation; the expectation of
/// the Hermitian G must be real up to 1e-10.
pub fn dynamical_phase_closed(pair: &StatePair, ctx: &EvolutionContext) -> Result<f64> {
    let e = dynamical_expectation(pair, ctx)?;
    if e.im.abs() > 1e-10 {
        return Err(Error::Hermiticity { residual: e.im.abs() });
    }
    Ok(-TAU * e.re)
}

/// Dynamical phase by trapezoid quadrature of `Tr[rho U_dag(phi) dU/dphi]`
/// with `dU/dphi = -i Jz U`. Retained as a plumbing cross-check of the
/// closed route; the integrand is constant in phi.
pub fn dynamical_phase_quadrature(
    pair: &StatePair,
    ctx: &EvolutionContext,
    n_steps: usize,
) -> Result<f64> {
    if n_steps < 1 {
        return Err(Error::Domain("n_steps must be at least 1".into()));
    }
    let h = TAU / n_steps as f64;
    let mut integral = 0.0f64;
    for k in 0..=n_steps {
        let u = ctx.unitary_at(k as f64 * h)?;
        let jzu = &ctx.jz * &u;
        let uju = u.adjoint() * jzu;
        // Tr[rho U_dag (-i Jz) U] = -i <U_dag Jz U>; the -i and the -i in
        // the phase definition combine to -<Jz>_rotated.
        let g = rank2_expectation(&pair.psi1, &pair.psi2, pair.lambda, &uju)?;
        let w = if k == 0 || k == n_steps { 0.5 } else { 1.0 };
        integral += w * g.re * h;
    }
    Ok(-integral)
}

/// Evaluates the full numeric phase triple for a mixed state under a cyclic
/// evolution, reusing a prebuilt operator context.
pub fn phases_with_context(pair: &StatePair, ctx: &EvolutionContext) -> Result<PhaseResult> {
    let (total, trace_final) = total_phase(pair, ctx)?;
    let e = dynamical_expectation(pair, ctx)?;
    if e.im.abs() > 1e-10 {
        return Err(Error::Hermiticity { residual: e.im.abs() });
    }
    let dynamical = -TAU * e.re;
    let geometric = total - dynamical;
    Ok(PhaseResult {
        total,
        dynamical,
        geometric,
        geometric_wrapped: wrap_phase(geometric),
        trace_final,
        diagnostics: PhaseDiagnostics {
            n_max: ctx.spec.trunc.n_max,
            tail_deficit: pair.psi1.deficit.max(pair.psi2.deficit),
            dyn_imag_residual: e.im.abs(),
            trace_abs: trace_final.norm(),
        },
    })
}

/// Builds states and operators from scratch and evaluates the numeric phase
/// triple. This is the oracle side of every closed-form comparison.
pub fn geometric_phase_numeric(spec: &MixedStateSpec, evo: &EvolutionSpec) -> Result<PhaseResult> {
    let pair = build_pair(spec, &evo.trunc)?;
    let ctx = build_context(evo)?;
    phases_with_context(&pair, &ctx)
}

fn check_lambda_theta(lambda: f64, theta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain(format!("lambda = {lambda} outside [0, 1]")));
    }
    if !theta.is_finite() {
        return Err(Error::Domain("theta must be finite".into()));
    }
    Ok(())
}

/// Closed-form geometric phase of the entangled family:
/// `(-2 pi sin(theta)/N) {lambda (eta0^2 + eta1^2 + 2 eta0 eta1 p01^2)
/// + (1-lambda) ((eta0^2 + eta1^2) p01^2 + 2 eta0 eta1)}`.
pub fn gp_entangled(
    p0: &ScsParams,
    p1: &ScsParams,
    lambda: f64,
    theta: f64,
    norm_mode: NormMode,
) -> Result<f64> {
    check_lambda_theta(lambda, theta)?;
    let p01 = overlap_closed(p0, p1)?.p01;
    let (e0, e1) = (p0.eta(), p1.eta());
    let n = match norm_mode {
        NormMode::Corrected => 2.0 + 2.0 * p01 * p01,
        NormMode::PaperLiteral => 2.0 + 2.0 * p01,
    };
    let bracket = lambda * (e0 * e0 + e1 * e1 + 2.0 * e0 * e1 * p01 * p01)
        + (1.0 - lambda) * ((e0 * e0 + e1 * e1) * p01 * p01 + 2.0 * e0 * e1);
    Ok(-TAU * theta.sin() / n * bracket)
}

/// Closed-form geometric phase of the unbalanced separable family:
/// `2 pi {-eta0 eta1 sin(theta) + (eta0^2 - eta1^2)(lambda - 1/2) cos(theta)}`.
pub fn gp_sep_unbalanced(p0: &ScsParams, p1: &ScsParams, lambda: f64, theta: f64) -> Result<f64> {
    check_lambda_theta(lambda, theta)?;
    let (e0, e1) = (p0.eta(), p1.eta());
    Ok(TAU * (-e0 * e1 * theta.sin() + (e0 * e0 - e1 * e1) * (lambda - 0.5) * theta.cos()))
}

/// Closed-form geometric phase of the balanced separable family:
/// `-2 pi sin(theta) {lambda eta0^2 + (1-lambda) eta1^2}`.
pub fn gp_sep_balanced(p0: &ScsParams, p1: &ScsParams, lambda: f64, theta: f64) -> Result<f64> {
    check_lambda_theta(lambda, theta)?;
    let (e0, e1) = (p0.eta(), p1.eta());
    Ok(-TAU * theta.sin() * (lambda * e0 * e0 + (1.0 - lambda) * e1 * e1))
}

/// Closed-form geometric phase for a full mixture spec.
pub fn gp_analytic(spec: &MixedStateSpec, theta: f64, norm_mode: NormMode) -> Result<f64> {
    match spec.family {
        crate::states::Family::Entangled => {
            gp_entangled(&spec.p0, &spec.p1, spec.lambda, theta, norm_mode)
        }
        crate::states::Family::SepUnbalanced => {
            gp_sep_unbalanced(&spec.p0, &spec.p1, spec.lambda, theta)
        }
        crate::states::Family::SepBalanced => {
            gp_sep_balanced(&spec.p0, &spec.p1, spec.lambda, theta)
        }
    }
}
