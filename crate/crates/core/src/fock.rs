//! Truncated Fock-space linear algebra: mode operators, Bogoliubov
//! transforms, tensor products, Hermitian matrix exponentials, and rank-2
//! expectation shortcuts.
//!
//! Operators are built on a buffered space of `n_max + buffer + 1` levels and
//! projected back to `n_max + 1`, so that truncation damage from products
//! like A detached at the boundary stays outside the retained block.

use faer::{c64, Col, Mat, Side};

use crate::error::{Error, Result};

/// Default number of extra levels kept while building operators.
pub const DEFAULT_BUFFER: usize = 10;
/// Default maximum admissible probability mass above `n_max`.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;
/// Starting point for adaptive cutoff growth.
pub const ADAPTIVE_START: usize = 24;
/// Hard ceiling for adaptive cutoff growth.
pub const ADAPTIVE_CAP: usize = 512;

/// Photon-number cutoff policy: retained levels per mode, operator build
/// buffer, and the tail mass a constructed state may leave above the cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    pub n_max: usize,
    pub buffer: usize,
    pub tail_tol: f64,
}

impl Truncation {
    pub fn new(n_max: usize, buffer: usize, tail_tol: f64) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::Domain(format!("n_max = {n_max} must be at least 1")));
        }
        if !(tail_tol > 0.0 && tail_tol <= 1e-6) {
            return Err(Error::Domain(format!("tail_tol = {tail_tol} outside (0, 1e-6]")));
        }
        Ok(Self { n_max, buffer, tail_tol })
    }

    /// Cutoff with default buffer and tail tolerance.
    pub fn with_nmax(n_max: usize) -> Result<Self> {
        Self::new(n_max, DEFAULT_BUFFER, DEFAULT_TAIL_TOL)
    }

    /// Retained single-mode dimension, `n_max + 1`.
    pub fn single_dim(&self) -> usize {
        self.n_max + 1
    }

    /// Retained two-mode dimension, `(n_max + 1)^2`.
    pub fn two_mode_dim(&self) -> usize {
        self.single_dim() * self.single_dim()
    }

    /// Dimension operators are built at before projection.
    pub fn buffered_dim(&self) -> usize {
        self.n_max + self.buffer + 1
    }
}

/// Dense state vector over one or two truncated modes.
///
/// `deficit` records the probability mass the exact state carries above the
/// cutoff, measured before renormalization.
#[derive(Debug, Clone)]
pub struct FockVector {
    pub amps: Col<c64>,
    pub modes: u8,
    pub deficit: f64,
}

impl FockVector {
    pub fn dim(&self) -> usize {
        self.amps.nrows()
    }

    /// Squared Euclidean norm.
    pub fn norm2(&self) -> f64 {
        (0..self.dim()).map(|i| self.amps[i].norm_sqr()).sum()
    }

    /// Tensor product, combining per-mode tail deficits additively.
    pub fn kron(&self, other: &FockVector) -> FockVector {
        let (n, m) = (self.dim(), other.dim());
        let amps = Col::from_fn(n * m, |k| self.amps[k / m] * other.amps[k % m]);
        FockVector {
            amps,
            modes: self.modes + other.modes,
            deficit: self.deficit + other.deficit,
        }
    }
}

/// Inner product `<a|b>` with conjugation on the left argument.
pub fn vdot(a: &Col<c64>, b: &Col<c64>) -> c64 {
    assert_eq!(a.nrows(), b.nrows());
    let mut acc = c64::new(0.0, 0.0);
    for i in 0..a.nrows() {
        acc += a[i].conj() * b[i];
    }
    acc
}

/// Quadratic form `<v|op|v>`.
pub fn expectation(v: &Col<c64>, op: &Mat<c64>) -> c64 {
    let w = op * v;
    vdot(v, &w)
}

/// Annihilation operator on the buffered space: `<n-1|a|n> = sqrt(n)`.
pub fn annihilation(trunc: &Truncation) -> Mat<c64> {
    let dim = trunc.buffered_dim();
    Mat::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            c64::new((j as f64).sqrt(), 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    })
}

/// Bogoliubov mode operator `A = a cosh(r) + a_dag sinh(r)` on the buffered
/// space. Squeezed-coherent states with squeeze parameter `r_ref` are its
/// eigenvectors with eigenvalue `alpha e^(r_ref)`.
pub fn bogoliubov_a(r_ref: f64, trunc: &Truncation) -> Mat<c64> {
    let dim = trunc.buffered_dim();
    let (c, s) = (r_ref.cosh(), r_ref.sinh());
    Mat::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            c64::new(c * (j as f64).sqrt(), 0.0)
        } else if i == j + 1 {
            c64::new(s * (i as f64).sqrt(), 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    })
}

/// Kronecker product. Mode-1 operators embed as `kron(A, I)`, mode-2 as
/// `kron(I, B)`.
pub fn kron(a: &Mat<c64>, b: &Mat<c64>) -> Result<Mat<c64>> {
    if a.nrows() != a.ncols() || b.nrows() != b.ncols() {
        return Err(Error::Domain("kron expects square matrices".into()));
    }
    let dim = a
        .nrows()
        .checked_mul(b.nrows())
        .filter(|&d| d <= 1 << 26)
        .ok_or_else(|| Error::Domain("kron output dimension too large".into()))?;
    let m = b.nrows();
    Ok(Mat::from_fn(dim, dim, |i, j| a[(i / m, j / m)] * b[(i % m, j % m)]))
}

/// Top-left `dim x dim` block.
pub fn project(m: &Mat<c64>, dim: usize) -> Result<Mat<c64>> {
    if dim > m.nrows() || dim > m.ncols() {
        return Err(Error::Dimension { expected: dim, got: m.nrows() });
    }
    Ok(Mat::from_fn(dim, dim, |i, j| m[(i, j)]))
}

/// Eigendecomposition of a Hermitian matrix, cached so that several
/// exponentials `exp(-i scale M)` reuse one factorization.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub vecs: Mat<c64>,
    pub vals: Vec<f64>,
}

impl HermEig {
    /// Symmetrizes the input as `(M + M_dag)/2` and diagonalizes. Inputs are
    /// expected Hermitian up to floating-point construction noise; a large
    /// asymmetry is rejected.
    pub fn new(m: &Mat<c64>) -> Result<Self> {
        let n = m.nrows();
        if n != m.ncols() {
            return Err(Error::Dimension { expected: n, got: m.ncols() });
        }
        let mut asym = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                asym = asym.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        if asym > 1e-10 {
            return Err(Error::Hermiticity { residual: asym });
        }
        let h = Mat::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
        let evd = h
            .self_adjoint_eigen(Side::Lower)
            .map_err(|e| Error::Spectral(format!("self-adjoint eigendecomposition: {e:?}")))?;
        let s = evd.S();
        let vals = (0..n).map(|i| s[i].re).collect();
        Ok(Self { vecs: evd.U().to_owned(), vals })
    }

    /// `exp(-i scale M) = V exp(-i scale Lambda) V_dag`.
    pub fn expm(&self, scale: f64) -> Mat<c64> {
        let n = self.vals.len();
        let phased = Mat::from_fn(n, n, |i, j| {
            self.vecs[(i, j)] * c64::new(0.0, -scale * self.vals[j]).exp()
        });
        phased * self.vecs.adjoint()
    }
}

/// Matrix exponential `exp(-i scale M)` of a Hermitian matrix via spectral
/// decomposition.
pub fn herm_expm(m: &Mat<c64>, scale: f64) -> Result<Mat<c64>> {
    Ok(HermEig::new(m)?.expm(scale))
}

/// Expectation `Tr[rho op]` for the rank-2 mixture
/// `rho = lambda |psi1><psi1| + (1-lambda) |psi2><psi2|`, evaluated as two
/// quadratic forms in O(dim^2) without materializing rho.
pub fn rank2_expectation(
    psi1: &FockVector,
    psi2: &FockVector,
    lambda: f64,
    op: &Mat<c64>,
) -> Result<c64> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain(format!("lambda = {lambda} outside [0, 1]")));
    }
    if psi1.dim() != op.nrows() {
        return Err(Error::Dimension { expected: op.nrows(), got: psi1.dim() });
    }
    if psi2.dim() != op.nrows() {
        return Err(Error::Dimension { expected: op.nrows(), got: psi2.dim() });
    }
    let e1 = expectation(&psi1.amps, op);
    let e2 = expectation(&psi2.amps, op);
    Ok(e1 * lambda + e2 * (1.0 - lambda))
}

/// Max-absolute-entry distance from unitarity, `max |U_dag U - I|`.
pub fn unitarity_error(u: &Mat<c64>) -> f64 {
    let n = u.nrows();
    let prod = u.adjoint() * u;
    let mut err = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { c64::new(1.0, 0.0) } else { c64::new(0.0, 0.0) };
            err = err.max((prod[(i, j)] - target).norm());
        }
    }
    err
}

/// Max-absolute-entry norm.
pub fn max_abs(m: &Mat<c64>) -> f64 {
    let mut v = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            v = v.max(m[(i, j)].norm());
        }
    }
    v
}
