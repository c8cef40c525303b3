//! Physicists' Hermite polynomials and the Mehler bilinear kernel.
//!
//! Squeezed-state Fock expansions are weighted by terms of the form
//! `t^(n/2) H_n(x) / sqrt(n!)`. Both `H_n(x)` and `n!` overflow double
//! precision near n = 170 even though their combination stays small, so the
//! series code works with the scaled sequence produced by
//! [`hermite_scaled_seq`] instead of raw polynomial values.

use crate::error::{Error, Result};

/// Default number of series terms; geometric decay at the worst admitted
/// ratio (s = 0.9) leaves the tail below 1e-15 by n = 400.
pub const DEFAULT_SERIES_TERMS: usize = 400;

/// Series loops stop early once this many consecutive summands fall below
/// `EARLY_EXIT_EPS` times the running partial sum magnitude.
pub(crate) const EARLY_EXIT_RUN: usize = 10;
pub(crate) const EARLY_EXIT_EPS: f64 = 1e-16;

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
///
/// Values grow like `2^(n/2) sqrt(n!) e^(x^2/2)`; once an intermediate stops
/// being finite the evaluation is reported as an overflow rather than
/// returned as infinity.
pub fn hermite(n: usize, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("hermite argument x = {x} not finite")));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * (k as f64) * prev;
        if !next.is_finite() {
            return Err(Error::Overflow(format!("hermite({n}, {x}) at degree {}", k + 1)));
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Scaled sequence `h_n = t^(n/2) H_n(x) / sqrt(n!)` for n = 0..=n_max.
///
/// Uses the recurrence
/// `h_{n+1} = 2x sqrt(t/(n+1)) h_n - 2t sqrt(n/(n+1)) h_{n-1}`,
/// which keeps every element representable whenever the true value is.
/// Requires 0 <= t < 1; negative t is rejected rather than continued into a
/// complex branch.
pub fn hermite_scaled_seq(n_max: usize, x: f64, t: f64) -> Result<Vec<f64>> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("scaled sequence argument x = {x} not finite")));
    }
    if !(0.0..1.0).contains(&t) {
        return Err(Error::Domain(format!("scaled sequence ratio t = {t} outside [0, 1)")));
    }
    let mut seq = Vec::with_capacity(n_max + 1);
    seq.push(1.0);
    if n_max == 0 {
        return Ok(seq);
    }
    let sqrt_t = t.sqrt();
    seq.push(2.0 * x * sqrt_t);
    for n in 1..n_max {
        let np1 = (n + 1) as f64;
        let next = 2.0 * x * (t / np1).sqrt() * seq[n] - 2.0 * t * (n as f64 / np1).sqrt() * seq[n - 1];
        seq.push(next);
    }
    Ok(seq)
}

/// Closed form of the Mehler kernel,
/// `sum_n H_n(x) H_n(y) s^n / (2^n n!) = (1-s^2)^(-1/2) exp[(2xys - (x^2+y^2)s^2) / (1-s^2)]`,
/// valid for |s| < 1.
pub fn mehler_closed(x: f64, y: f64, s: f64) -> Result<f64> {
    check_mehler_domain(x, y, s)?;
    let denom = 1.0 - s * s;
    let exponent = (2.0 * x * y * s - (x * x + y * y) * s * s) / denom;
    Ok(exponent.exp() / denom.sqrt())
}

/// Partial sum `sum_{n < n_terms} H_n(x) H_n(y) s^n / (2^n n!)`.
///
/// Each summand equals `h_n(x, s/2) * h_n(y, s/2)` in terms of the scaled
/// sequence, so the sum is evaluated without forming raw polynomials or
/// factorials. Negative s is folded to positive via the parity
/// `H_n(-y) = (-1)^n H_n(y)`. Stops early once ten consecutive summands are
/// negligible against the partial sum.
pub fn mehler_series(x: f64, y: f64, s: f64, n_terms: usize) -> Result<f64> {
    check_mehler_domain(x, y, s)?;
    if n_terms < 1 {
        return Err(Error::Domain("mehler_series needs n_terms >= 1".into()));
    }
    let (y, s) = if s < 0.0 { (-y, -s) } else { (y, s) };
    let hx = hermite_scaled_seq(n_terms - 1, x, s / 2.0)?;
    let hy = hermite_scaled_seq(n_terms - 1, y, s / 2.0)?;
    let mut sum = 0.0;
    let mut small_run = 0;
    for n in 0..n_terms {
        let term = hx[n] * hy[n];
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
    Ok(sum)
}

/// Like [`mehler_series`] but also returns `sum_n |term_n|`, the scale that
/// bounds what absolute accuracy double-precision summation can reach. For
/// alternating series (effective s < 0) the true value can lie exponentially
/// below this scale, in which case relative comparison against the closed
/// form is limited by `eps * magnitude`, not by convergence.
pub fn mehler_series_with_magnitude(x: f64, y: f64, s: f64, n_terms: usize) -> Result<(f64, f64)> {
    check_mehler_domain(x, y, s)?;
    if n_terms < 1 {
        return Err(Error::Domain("mehler_series needs n_terms >= 1".into()));
    }
    let (y, s) = if s < 0.0 { (-y, -s) } else { (y, s) };
    let hx = hermite_scaled_seq(n_terms - 1, x, s / 2.0)?;
    let hy = hermite_scaled_seq(n_terms - 1, y, s / 2.0)?;
    let mut sum = 0.0;
    let mut magnitude = 0.0;
    let mut small_run = 0;
    for n in 0..n_terms {
        let term = hx[n] * hy[n];
        sum += term;
        magnitude += term.abs();
        if term.abs() < EARLY_EXIT_EPS * sum.abs() {
            small_run += 1;
            if small_run >= EARLY_EXIT_RUN {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    Ok((sum, magnitude))
}

fn check_mehler_domain(x: f64, y: f64, s: f64) -> Result<()> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain(format!("mehler arguments ({x}, {y}) not finite")));
    }
    if !s.is_finite() || s.abs() >= 1.0 {
        return Err(Error::Domain(format!("mehler ratio s = {s} outside (-1, 1)")));
    }
    Ok(())
}
