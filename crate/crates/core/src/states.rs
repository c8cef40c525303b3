//! Squeezed-coherent state construction: single-mode Fock expansions,
//! pairwise overlaps by three independent routes, and the two-mode rank-2
//! mixture families.

use faer::{c64, Col};

use crate::error::{Error, Result};
use crate::fock::{vdot, FockVector, Truncation, ADAPTIVE_CAP, ADAPTIVE_START};
use crate::special::{hermite_scaled_seq, EARLY_EXIT_EPS, EARLY_EXIT_RUN};

/// Default ceiling on |alpha|, keeping photon-number tails within reach of
/// the adaptive cutoff.
pub const ALPHA_CAP: f64 = 4.0;

/// Single-mode squeezed-coherent state parameters. The squeezing phase is
/// fixed to zero, so `r` is the full squeeze parameter and `alpha` is real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScsParams {
    pub alpha: f64,
    pub r: f64,
}

impl ScsParams {
    pub fn new(alpha: f64, r: f64) -> Result<Self> {
        Self::with_cap(alpha, r, ALPHA_CAP)
    }

    pub fn with_cap(alpha: f64, r: f64, alpha_cap: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha.abs() > alpha_cap {
            return Err(Error::Domain(format!("alpha = {alpha} outside [-{alpha_cap}, {alpha_cap}]")));
        }
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Domain(format!("squeeze parameter r = {r} must be finite and >= 0")));
        }
        Ok(Self { alpha, r })
    }

    /// Bogoliubov eigenvalue `eta = alpha e^r`.
    pub fn eta(&self) -> f64 {
        self.alpha * self.r.exp()
    }
}

/// Rank-2 mixture family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Balanced and unbalanced entangled superpositions mixed with weight
    /// lambda.
    Entangled,
    /// Product states with the two modes carrying different parameters.
    SepUnbalanced,
    /// Product states with both modes carrying the same parameters.
    SepBalanced,
}

/// Specification of a two-mode mixed state
/// `rho = lambda |psi1><psi1| + (1-lambda) |psi2><psi2|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedStateSpec {
    pub family: Family,
    pub lambda: f64,
    pub p0: ScsParams,
    pub p1: ScsParams,
}

impl MixedStateSpec {
    pub fn new(family: Family, lambda: f64, p0: ScsParams, p1: ScsParams) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::Domain(format!("lambda = {lambda} outside [0, 1]")));
        }
        Ok(Self { family, lambda, p0, p1 })
    }
}

/// How an overlap value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapMethod {
    Closed,
    Series,
    FockDot,
}

/// Real overlap `<alpha0,xi0|alpha1,xi1>` tagged with its evaluation route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapValue {
    pub p01: f64,
    pub method: OverlapMethod,
}

/// The two pure constituents of a rank-2 mixture, each unit-normalized.
#[derive(Debug, Clone)]
pub struct StatePair {
    pub psi1: FockVector,
    pub psi2: FockVector,
    pub lambda: f64,
}

/// Unnormalized Fock amplitudes `c_0..c_n_max` of the squeezed-coherent
/// state. For r > 0 these follow the scaled-Hermite expansion with
/// `t = tanh(r)/2` and `x = alpha e^r / sqrt(sinh 2r)`; r = 0 takes the
/// coherent-state branch since the Hermite argument diverges there.
fn raw_amplitudes(p: &ScsParams, n_max: usize) -> Result<Vec<f64>> {
    if p.r == 0.0 {
        let mut amps = Vec::with_capacity(n_max + 1);
        let mut c = (-p.alpha * p.alpha / 2.0).exp();
        for n in 0..=n_max {
            amps.push(c);
            c *= p.alpha / ((n + 1) as f64).sqrt();
        }
        Ok(amps)
    } else {
        let t = p.r.tanh() / 2.0;
        let x = p.alpha * p.r.exp() / (2.0 * p.r).sinh().sqrt();
        let pref = (-p.alpha * p.alpha * (1.0 + p.r.tanh()) / 2.0).exp() / p.r.cosh().sqrt();
        let seq = hermite_scaled_seq(n_max, x, t)?;
        Ok(seq.into_iter().map(|h| pref * h).collect())
    }
}

/// Probability mass the exact state carries above `n_max`, from the raw
/// amplitude vector's norm shortfall.
fn tail_deficit(amps: &[f64]) -> f64 {
    let norm2: f64 = amps.iter().map(|c| c * c).sum();
    (1.0 - norm2).max(0.0)
}

/// Single-mode state vector at the cutoff `trunc.n_max`, renormalized, with
/// the pre-normalization tail deficit recorded and required at or below
/// `trunc.tail_tol`.
pub fn scs_fock(p: &ScsParams, trunc: &Truncation) -> Result<FockVector> {
    let amps = raw_amplitudes(p, trunc.n_max)?;
    let deficit = tail_deficit(&amps);
    if deficit > trunc.tail_tol {
        return Err(Error::Truncation { n_max: trunc.n_max, deficit, tail_tol: trunc.tail_tol });
    }
    let norm = amps.iter().map(|c| c * c).sum::<f64>().sqrt();
    let col = Col::from_fn(amps.len(), |i| c64::new(amps[i] / norm, 0.0));
    Ok(FockVector { amps: col, modes: 1, deficit })
}

/// Smallest cutoff from the doubling schedule 24, 48, ... at which every
/// listed parameter set leaves tail mass at or below `tail_tol`. Errors past
/// the hard cap with the worst deficit observed there.
pub fn required_nmax(params: &[ScsParams], tail_tol: f64) -> Result<usize> {
    if !(tail_tol > 0.0 && tail_tol <= 1e-6) {
        return Err(Error::Domain(format!("tail_tol = {tail_tol} outside (0, 1e-6]")));
    }
    let mut n_max = ADAPTIVE_START;
    loop {
        let mut worst = 0.0f64;
        for p in params {
            worst = worst.max(tail_deficit(&raw_amplitudes(p, n_max)?));
        }
        if worst <= tail_tol {
            return Ok(n_max);
        }
        if n_max >= ADAPTIVE_CAP {
            return Err(Error::Truncation { n_max, deficit: worst, tail_tol });
        }
        n_max = (n_max * 2).min(ADAPTIVE_CAP);
    }
}

fn check_tanh_condition(p0: &ScsParams, p1: &ScsParams) -> Result<()> {
    let prod = p0.r.tanh() * p1.r.tanh();
    if !(0.0..1.0).contains(&prod) {
        return Err(Error::Domain(format!("tanh(r0) tanh(r1) = {prod} outside [0, 1)")));
    }
    Ok(())
}

/// Closed-form overlap: the Mehler-summed expression with prefactor
/// `cosh(r0-r1)^(-1/2)`, Gaussian factors in each alpha, and cross terms in
/// `e^(r0+r1)`, `e^(2 r0) sinh r1`, `e^(2 r1) sinh r0`.
pub fn overlap_closed(p0: &ScsParams, p1: &ScsParams) -> Result<OverlapValue> {
    check_tanh_condition(p0, p1)?;
    let (a0, r0) = (p0.alpha, p0.r);
    let (a1, r1) = (p1.alpha, p1.r);
    let cd = (r0 - r1).cosh();
    let gauss = -a0 * a0 * (1.0 + r0.tanh()) / 2.0 - a1 * a1 * (1.0 + r1.tanh()) / 2.0;
    let cross = a0 * a1 * (r0 + r1).exp() / cd
        - a0 * a0 * (2.0 * r0).exp() * r1.sinh() / (2.0 * r0.cosh() * cd)
        - a1 * a1 * (2.0 * r1).exp() * r0.sinh() / (2.0 * r1.cosh() * cd);
    let p01 = (gauss + cross).exp() / cd.sqrt();
    Ok(OverlapValue { p01, method: OverlapMethod::Closed })
}

/// Overlap as a partial sum of the Hermite product series. Requires strictly
/// positive squeezing on both sides; the r = 0 limit belongs to the closed
/// form.
pub fn overlap_series(p0: &ScsParams, p1: &ScsParams, n_terms: usize) -> Result<OverlapValue> {
    if p0.r <= 0.0 || p1.r <= 0.0 {
        return Err(Error::Domain(
            "series overlap needs r0, r1 > 0; use the closed form at r = 0".into(),
        ));
    }
    if n_terms < 1 {
        return Err(Error::Domain("n_terms must be at least 1".into()));
    }
    check_tanh_condition(p0, p1)?;
    let x0 = p0.alpha * p0.r.exp() / (2.0 * p0.r).sinh().sqrt();
    let y1 = p1.alpha * p1.r.exp() / (2.0 * p1.r).sinh().sqrt();
    let seq0 = hermite_scaled_seq(n_terms - 1, x0, p0.r.tanh() / 2.0)?;
    let seq1 = hermite_scaled_seq(n_terms - 1, y1, p1.r.tanh() / 2.0)?;
    let mut sum = 0.0f64;
    let mut small_run = 0usize;
    for n in 0..n_terms {
        let term = seq0[n] * seq1[n];
        sum += term;
        if term.abs() < EARLY_EXIT_EPS * sum.abs() {
            small_run += 1;
            if small_run >= EARLY_EXIT_RUN {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let pref = (-p0.alpha * p0.alpha * (1.0 + p0.r.tanh()) / 2.0
        - p1.alpha * p1.alpha * (1.0 + p1.r.tanh()) / 2.0)
        .exp()
        / (p0.r.cosh() * p1.r.cosh()).sqrt();
    Ok(OverlapValue { p01: pref * sum, method: OverlapMethod::Series })
}

/// Overlap as the Euclidean dot product of the two truncated Fock vectors.
pub fn overlap_fock(p0: &ScsParams, p1: &ScsParams, trunc: &Truncation) -> Result<OverlapValue> {
    let v0 = scs_fock(p0, trunc)?;
    let v1 = scs_fock(p1, trunc)?;
    Ok(OverlapValue { p01: vdot(&v0.amps, &v1.amps).re, method: OverlapMethod::FockDot })
}

fn normalized_sum(a: &FockVector, b: &FockVector) -> FockVector {
    let dim = a.dim();
    let raw = Col::from_fn(dim, |i| a.amps[i] + b.amps[i]);
    let norm = (0..dim).map(|i| raw[i].norm_sqr()).sum::<f64>().sqrt();
    FockVector {
        amps: Col::from_fn(dim, |i| raw[i] * (1.0 / norm)),
        modes: a.modes,
        deficit: a.deficit.max(b.deficit),
    }
}

/// Expands a mixture spec into its two unit-normalized two-mode
/// constituents.
pub fn build_pair(spec: &MixedStateSpec, trunc: &Truncation) -> Result<StatePair> {
    let v0 = scs_fock(&spec.p0, trunc)?;
    let v1 = scs_fock(&spec.p1, trunc)?;
    let (psi1, psi2) = match spec.family {
        Family::Entangled => {
            let psi1 = normalized_sum(&v0.kron(&v0), &v1.kron(&v1));
            let psi2 = normalized_sum(&v0.kron(&v1), &v1.kron(&v0));
            (psi1, psi2)
        }
        Family::SepUnbalanced => (v0.kron(&v1), v1.kron(&v0)),
        Family::SepBalanced => (v0.kron(&v0), v1.kron(&v1)),
    };
    Ok(StatePair { psi1, psi2, lambda: spec.lambda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{bogoliubov_a, project};

    fn params(alpha: f64, r: f64) -> ScsParams {
        ScsParams::new(alpha, r).unwrap()
    }

    fn oracle_trunc() -> Truncation {
        Truncation::new(100, 0, 1e-6).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(ScsParams::new(1.0, -0.1).is_err());
        assert!(ScsParams::new(4.5, 0.2).is_err());
        assert!(ScsParams::new(f64::NAN, 0.2).is_err());
        assert!(ScsParams::new(1.0, f64::INFINITY).is_err());
        assert!(ScsParams::with_cap(4.5, 0.2, 5.0).is_ok());
    }

    #[test]
    fn eta_values() {
        assert_eq!(params(0.0, 0.7).eta(), 0.0);
        assert_eq!(params(1.0, 0.0).eta(), 1.0);
        assert!((params(0.5, 0.2).eta() - 0.5 * 0.2f64.exp()).abs() < 1e-15);
        assert!((params(1.0, 0.5).eta() - 1.6487212707001281).abs() < 1e-15);
    }

    #[test]
    fn vacuum_amplitudes() {
        let v = scs_fock(&params(0.0, 0.0), &Truncation::new(6, 0, 1e-12).unwrap()).unwrap();
        assert!((v.amps[0].re - 1.0).abs() < 1e-15);
        for n in 1..=6 {
            assert_eq!(v.amps[n].re, 0.0);
        }
        assert_eq!(v.deficit, 0.0);
    }

    #[test]
    fn squeezed_vacuum_amplitudes() {
        let v = scs_fock(&params(0.0, 0.5), &oracle_trunc()).unwrap();
        assert!((v.amps[0].re - 0.94171061583167571).abs() < 1e-14);
        assert!((v.amps[2].re - -0.30771917645837045).abs() < 1e-14);
        assert!((v.amps[4].re - 0.12315081385423961).abs() < 1e-14);
        for n in (1..=15).step_by(2) {
            assert!(v.amps[n].re.abs() < 1e-16);
        }
    }

    #[test]
    fn frozen_amplitudes_squeezed() {
        let cases = [
            (0.7, 0.3, vec![
                0.71280885859938839,
                0.64432134856362897,
                0.26499815721207761,
                -0.014958889175676493,
                -0.073615638434011771,
                -0.025861081183604573,
            ]),
            (1.0, 0.5, vec![
                0.45333866311898637,
                0.66283423739558557,
                0.53715065167677453,
                0.20333905026825312,
                -0.066317725686250591,
                -0.12740990665888079,
            ]),
            (-1.2, 0.4, vec![
                0.35610131514408539,
                -0.58968196834896171,
                0.59480188959741286,
                -0.38572903840597698,
                0.12365497427781062,
                0.039511156404138546,
            ]),
        ];
        for (alpha, r, expected) in cases {
            let v = scs_fock(&params(alpha, r), &oracle_trunc()).unwrap();
            for (n, want) in expected.iter().enumerate() {
                assert!(
                    (v.amps[n].re - want).abs() < 1e-13,
                    "alpha={alpha} r={r} n={n}: {} vs {want}",
                    v.amps[n].re
                );
            }
        }
    }

    #[test]
    fn frozen_amplitudes_coherent() {
        let expected = [
            0.66697681085847439,
            0.60027912977262696,
            0.38201529894028570,
            0.19850097210995638,
            0.089325437449480373,
            0.035952795046249840,
        ];
        let v = scs_fock(&params(0.9, 0.0), &oracle_trunc()).unwrap();
        for (n, want) in expected.iter().enumerate() {
            assert!((v.amps[n].re - want).abs() < 1e-14);
        }
    }

    #[test]
    fn truncation_deficit_enforced() {
        let tight = Truncation::new(4, 0, 1e-10).unwrap();
        let err = scs_fock(&params(1.5, 0.5), &tight).unwrap_err();
        assert!(matches!(err, Error::Truncation { n_max: 4, .. }));
    }

    #[test]
    fn bogoliubov_eigenrelation() {
        let trunc = Truncation::new(60, 10, 1e-6).unwrap();
        let p = params(1.0, 0.2);
        let v = scs_fock(&p, &trunc).unwrap();
        let a = project(&bogoliubov_a(p.r, &trunc), trunc.single_dim()).unwrap();
        let av = &a * &v.amps;
        let eta = p.eta();
        assert!((eta - 1.2214027581601699).abs() < 1e-15);
        let exp_val = vdot(&v.amps, &av);
        assert!((exp_val.re - eta).abs() < 1e-8);
        assert!(exp_val.im.abs() < 1e-12);
        let resid: f64 = (0..v.dim()).map(|i| (av[i] - v.amps[i] * eta).norm_sqr()).sum();
        assert!(resid.sqrt() < 1e-8);
    }

    #[test]
    fn required_nmax_meets_tolerance() {
        let specs = [params(1.5, 0.5), params(-1.5, 0.5), params(0.5, 0.1)];
        let n_max = required_nmax(&specs, 1e-12).unwrap();
        assert!(n_max >= ADAPTIVE_START);
        for p in &specs {
            let v = scs_fock(p, &Truncation::new(n_max, 0, 1e-12).unwrap()).unwrap();
            assert!(v.deficit <= 1e-12);
        }
        assert!(required_nmax(&specs, 0.0).is_err());
    }

    #[test]
    fn overlap_closed_frozen_values() {
        let cases = [
            (1.0, 0.2, 0.5, 0.5, 0.76876350624478314),
            (-1.5, 0.5, 1.5, 0.5, 4.8707227265782168e-6),
            (0.0, 0.2, 0.0, 0.4, 0.99011514362963126),
            (1.0, 0.0, 0.5, 0.0, 0.88249690258459540),
            (1.0, 0.3, 0.5, 0.0, 0.83228157700258940),
            (1.0, 0.2, 0.5, 0.2, 0.82987674667099945),
            (0.7, 0.1, -0.3, 0.5, 0.41407279925544437),
        ];
        for (a0, r0, a1, r1, want) in cases {
            let got = overlap_closed(&params(a0, r0), &params(a1, r1)).unwrap().p01;
            assert!(
                ((got - want) / want).abs() < 1e-13,
                "p({a0},{r0}|{a1},{r1}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn overlap_closed_identical_states() {
        for (a, r) in [(0.7, 0.3), (-1.2, 0.4), (1.5, 0.0)] {
            let p = params(a, r);
            let got = overlap_closed(&p, &p).unwrap().p01;
            assert!((got - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn overlap_closed_coherent_limit() {
        for (a0, a1) in [(1.0, 0.5), (-1.5, 1.5), (0.3, 0.0)] {
            let got = overlap_closed(&params(a0, 0.0), &params(a1, 0.0)).unwrap().p01;
            let want = (-(a0 - a1) * (a0 - a1) / 2.0).exp();
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn overlap_closed_symmetry_and_sign_flip() {
        let grid = [(1.0, 0.2), (-0.5, 0.5), (1.5, 0.1), (0.0, 0.4)];
        for &(a0, r0) in &grid {
            for &(a1, r1) in &grid {
                let fwd = overlap_closed(&params(a0, r0), &params(a1, r1)).unwrap().p01;
                let rev = overlap_closed(&params(a1, r1), &params(a0, r0)).unwrap().p01;
                assert!((fwd - rev).abs() < 1e-12);
                let neg = overlap_closed(&params(-a0, r0), &params(-a1, r1)).unwrap().p01;
                assert!((fwd - neg).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn overlap_series_matches_closed() {
        let cases = [
            (1.0, 0.3, 1.0, 0.3),
            (1.0, 0.2, 0.5, 0.2),
            (0.0, 0.2, 0.0, 0.5),
            (-1.5, 0.5, 1.5, 0.5),
        ];
        for (a0, r0, a1, r1) in cases {
            let series = overlap_series(&params(a0, r0), &params(a1, r1), 200).unwrap().p01;
            let closed = overlap_closed(&params(a0, r0), &params(a1, r1)).unwrap().p01;
            assert!(
                (series - closed).abs() < 1e-9,
                "series {series} vs closed {closed} at ({a0},{r0}|{a1},{r1})"
            );
        }
    }

    #[test]
    fn overlap_series_rejects_zero_squeezing() {
        assert!(overlap_series(&params(1.0, 0.0), &params(0.5, 0.2), 100).is_err());
        assert!(overlap_series(&params(1.0, 0.2), &params(0.5, 0.2), 0).is_err());
    }

    #[test]
    fn overlap_fock_matches_closed() {
        let trunc = Truncation::new(60, 0, 1e-6).unwrap();
        let cases = [(1.0, 0.2, 0.5, 0.2), (0.7, 0.1, -0.3, 0.5), (1.0, 0.0, 0.5, 0.3)];
        for (a0, r0, a1, r1) in cases {
            let dot = overlap_fock(&params(a0, r0), &params(a1, r1), &trunc).unwrap().p01;
            let closed = overlap_closed(&params(a0, r0), &params(a1, r1)).unwrap().p01;
            assert!((dot - closed).abs() < 1e-8);
        }
    }

    #[test]
    fn overlap_bounded_by_one() {
        let grid = [-1.5, -1.0, 0.0, 0.5, 1.5];
        let rs = [0.1, 0.2, 0.5];
        for &a0 in &grid {
            for &a1 in &grid {
                for &r0 in &rs {
                    for &r1 in &rs {
                        let p = overlap_closed(&params(a0, r0), &params(a1, r1)).unwrap().p01;
                        assert!(p.abs() <= 1.0 + 1e-10);
                        assert!(p > 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn build_pair_entangled_norms() {
        let trunc = Truncation::new(60, 0, 1e-6).unwrap();
        let p0 = params(1.0, 0.2);
        let p1 = params(0.5, 0.2);
        let spec = MixedStateSpec::new(Family::Entangled, 0.5, p0, p1).unwrap();
        let pair = build_pair(&spec, &trunc).unwrap();
        assert!((pair.psi1.norm2() - 1.0).abs() < 1e-12);
        assert!((pair.psi2.norm2() - 1.0).abs() < 1e-12);

        let v0 = scs_fock(&p0, &trunc).unwrap();
        let v1 = scs_fock(&p1, &trunc).unwrap();
        let p01 = overlap_closed(&p0, &p1).unwrap().p01;
        for (a, b) in [(v0.kron(&v0), v1.kron(&v1)), (v0.kron(&v1), v1.kron(&v0))] {
            let raw = Col::from_fn(a.dim(), |i| a.amps[i] + b.amps[i]);
            let norm2: f64 = (0..raw.nrows()).map(|i| raw[i].norm_sqr()).sum();
            assert!((norm2 - (2.0 + 2.0 * p01 * p01)).abs() < 1e-9);
        }
    }

    #[test]
    fn build_pair_degenerate_entangled() {
        let trunc = Truncation::new(60, 0, 1e-6).unwrap();
        let p0 = params(0.8, 0.3);
        let spec = MixedStateSpec::new(Family::Entangled, 0.5, p0, p0).unwrap();
        let pair = build_pair(&spec, &trunc).unwrap();
        let v0 = scs_fock(&p0, &trunc).unwrap();
        let prod = v0.kron(&v0);
        for i in 0..pair.psi1.dim() {
            assert!((pair.psi1.amps[i] - prod.amps[i]).norm() < 1e-12);
            assert!((pair.psi2.amps[i] - prod.amps[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn build_pair_separable_products() {
        let trunc = Truncation::new(60, 0, 1e-6).unwrap();
        let p0 = params(1.0, 0.2);
        let p1 = params(-0.5, 0.5);
        for family in [Family::SepUnbalanced, Family::SepBalanced] {
            let spec = MixedStateSpec::new(family, 0.25, p0, p1).unwrap();
            let pair = build_pair(&spec, &trunc).unwrap();
            assert!((pair.psi1.norm2() - 1.0).abs() < 1e-10);
            assert!((pair.psi2.norm2() - 1.0).abs() < 1e-10);
            assert_eq!(pair.psi1.modes, 2);
        }
        let spec = MixedStateSpec::new(Family::SepUnbalanced, 0.25, p0, p1).unwrap();
        let pair = build_pair(&spec, &trunc).unwrap();
        let v0 = scs_fock(&p0, &trunc).unwrap();
        let v1 = scs_fock(&p1, &trunc).unwrap();
        let dim = trunc.single_dim();
        for i in 0..dim {
            for j in 0..dim {
                let want = v0.amps[i] * v1.amps[j];
                assert!((pair.psi1.amps[i * dim + j] - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn mixed_spec_validation() {
        let p = params(1.0, 0.2);
        assert!(MixedStateSpec::new(Family::Entangled, -0.1, p, p).is_err());
        assert!(MixedStateSpec::new(Family::Entangled, 1.1, p, p).is_err());
        assert!(MixedStateSpec::new(Family::SepBalanced, 1.0, p, p).is_ok());
    }
}
