//! Angular-momentum operators over the two Bogoliubov modes, the cyclic
//! unitary U(theta, phi) = exp(-i phi Jz) exp(-i theta Jy), and its constant
//! generator.

use std::f64::consts::{PI, TAU};

use faer::{c64, Mat};

use crate::error::{Error, Result};
use crate::fock::{kron, project, HermEig, Truncation};

/// Parameters of one cyclic evolution: polar angle, Bogoliubov frame, and
/// cutoff policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionSpec {
    pub theta: f64,
    pub r_ref: f64,
    pub trunc: Truncation,
}

impl EvolutionSpec {
    pub fn new(theta: f64, r_ref: f64, trunc: Truncation) -> Result<Self> {
        if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("theta = {theta} outside [0, pi]")));
        }
        if !r_ref.is_finite() || r_ref < 0.0 {
            return Err(Error::Domain(format!("r_ref = {r_ref} must be finite and >= 0")));
        }
        Ok(Self { theta, r_ref, trunc })
    }
}

/// Immutable operator bundle for one (theta, r_ref, truncation) choice,
/// shared read-only across a scan grid. Spectral factors of Jz and the fixed
/// y-rotation are cached so `unitary_at` costs one matrix product.
#[derive(Debug, Clone)]
pub struct EvolutionContext {
    pub spec: EvolutionSpec,
    pub jx: Mat<c64>,
    pub jy: Mat<c64>,
    pub jz: Mat<c64>,
    pub g: Mat<c64>,
    pub u_final: Mat<c64>,
    jz_eig: HermEig,
    exp_jy_theta: Mat<c64>,
}

fn lincomb(a: &Mat<c64>, ca: c64, b: &Mat<c64>, cb: c64) -> Mat<c64> {
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| a[(i, j)] * ca + b[(i, j)] * cb)
}

/// Builds the operator bundle. The angular-momentum components are
/// `Jx = (A_dag B + A B_dag)/2`, `Jy = (A_dag B - A B_dag)/(2i)`,
/// `Jz = (A_dag A - B_dag B)/2` with A acting on mode 1 and B on mode 2,
/// both in the same Bogoliubov frame `r_ref`.
///
/// Single-mode factors and products are formed on the buffered space and
/// projected to the retained block before the tensor product; this equals
/// projecting the two-mode buffered operators, since projection factorizes
/// over the tensor product, and keeps intermediate matrices at single-mode
/// size.
pub fn build_context(spec: &EvolutionSpec) -> Result<EvolutionContext> {
    let trunc = &spec.trunc;
    let d = trunc.single_dim();
    let a_buf = crate::fock::bogoliubov_a(spec.r_ref, trunc);
    let num_buf = a_buf.adjoint() * &a_buf;
    let a = project(&a_buf, d)?;
    let num = project(&num_buf, d)?;
    let ad = a.adjoint().to_owned();
    let eye = Mat::<c64>::identity(d, d);

    let ad_b = kron(&ad, &a)?;
    let a_bd = kron(&a, &ad)?;
    let half = c64::new(0.5, 0.0);
    let jx = lincomb(&ad_b, half, &a_bd, half);
    let jy = lincomb(&ad_b, c64::new(0.0, -0.5), &a_bd, c64::new(0.0, 0.5));
    let jz = lincomb(&kron(&num, &eye)?, half, &kron(&eye, &num)?, -half);
    let g = lincomb(&jz, c64::new(spec.theta.cos(), 0.0), &jx, c64::new(-spec.theta.sin(), 0.0));

    let jz_eig = HermEig::new(&jz)?;
    let jy_eig = HermEig::new(&jy)?;
    let exp_jy_theta = jy_eig.expm(spec.theta);
    let u_final = jz_eig.expm(TAU) * &exp_jy_theta;

    Ok(EvolutionContext { spec: *spec, jx, jy, jz, g, u_final, jz_eig, exp_jy_theta })
}

impl EvolutionContext {
    /// `U(theta, phi) = exp(-i phi Jz) exp(-i theta Jy)` from the cached
    /// spectral factors.
    pub fn unitary_at(&self, phi: f64) -> Result<Mat<c64>> {
        if !phi.is_finite() || !(0.0..=TAU).contains(&phi) {
            return Err(Error::Domain(format!("phi = {phi} outside [0, 2 pi]")));
        }
        Ok(self.jz_eig.expm(phi) * &self.exp_jy_theta)
    }

    /// Basis states with total occupation at most this value form the
    /// interior block on which truncated operators faithfully represent the
    /// untruncated algebra; entries coupling higher occupations carry
    /// truncation damage by construction.
    pub fn interior_cut(&self) -> usize {
        self.spec.trunc.n_max.div_ceil(2)
    }

    /// Finite-difference residual of the constant-generator identity
    /// `U_dag dU/dphi = -i (cos(theta) Jz - sin(theta) Jx)`, as the
    /// max-absolute entry over the interior block.
    pub fn generator_check(&self, phi: f64, h: f64) -> Result<f64> {
        if !(h > 0.0 && h <= 1e-2) {
            return Err(Error::Domain(format!("step h = {h} outside (0, 1e-2]")));
        }
        if !(phi > h && phi < TAU - h) {
            return Err(Error::Domain(format!("phi = {phi} outside (h, 2 pi - h)")));
        }
        let u = self.unitary_at(phi)?;
        let up = self.unitary_at(phi + h)?;
        let um = self.unitary_at(phi - h)?;
        let inv_2h = c64::new(1.0 / (2.0 * h), 0.0);
        let fd = lincomb(&up, inv_2h, &um, -inv_2h);
        let lhs = u.adjoint() * fd;
        let resid = Mat::from_fn(lhs.nrows(), lhs.ncols(), |i, j| {
            lhs[(i, j)] + c64::new(0.0, 1.0) * self.g[(i, j)]
        });
        Ok(interior_max(&resid, self.spec.trunc.single_dim(), self.interior_cut()))
    }

    /// Largest interior-block deviation among the three cyclic commutator
    /// identities `[Jx, Jy] = i Jz` and its permutations.
    pub fn su2_residual(&self) -> f64 {
        let d = self.spec.trunc.single_dim();
        let cut = self.interior_cut();
        let eye_i = c64::new(0.0, 1.0);
        let mut worst = 0.0f64;
        for (a, b, c) in [
            (&self.jx, &self.jy, &self.jz),
            (&self.jy, &self.jz, &self.jx),
            (&self.jz, &self.jx, &self.jy),
        ] {
            let comm = a * b - b * a;
            let resid =
                Mat::from_fn(comm.nrows(), comm.ncols(), |i, j| comm[(i, j)] - eye_i * c[(i, j)]);
            worst = worst.max(interior_max(&resid, d, cut));
        }
        worst
    }
}

/// Max-absolute entry over rows and columns whose two-mode occupation
/// `n1 + n2` stays at or below `cut`, with `d` the single-mode dimension.
fn interior_max(m: &Mat<c64>, d: usize, cut: usize) -> f64 {
    let occ = |idx: usize| idx / d + idx % d;
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        if occ(i) > cut {
            continue;
        }
        for j in 0..m.ncols() {
            if occ(j) <= cut {
                worst = worst.max(m[(i, j)].norm());
            }
        }
    }
    worst
}
