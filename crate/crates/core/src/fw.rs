//! Foldy-Wouthuysen transformations.
//!
//! In 1+1 the transform is the rotation `W = e^{sigma_1 sigma_3 theta/2}`
//! with `W^-1 H W = E sigma_3`. In 2+1 the closed form
//! `(E + m + sigma_3 sigma.p) / sqrt(2E(E+m))` diagonalizes `H` from the
//! other side, so the transform acting as `W^-1 H W` is its adjoint.
//! Both use the FW angle `theta = atan(|p|/m)`, not the rapidity.

use crate::algebra::{exp_mat2, vec_norm, vec_scale, vec_sub, Mat2, C64, SIGMA1, SIGMA3};
use crate::error::Error;
use crate::kinematics::{Dim, Kinematics};
use crate::operators::{self, MatrixField};
use crate::spinor_2p1::sigma_dot;

/// `sigma_1 sigma_3 = -i sigma_2`.
const S1S3: Mat2 = Mat2::real(0.0, -1.0, 1.0, 0.0);

fn require(kin: &Kinematics, dim: Dim) -> Result<(), Error> {
    if kin.dim() == dim {
        Ok(())
    } else {
        Err(Error::DimensionMismatch)
    }
}

/// Closed-form 1+1 FW matrix `cos(theta/2) + sigma_1 sigma_3 sin(theta/2)`
/// with signed momentum.
pub fn fw_1p1(kin: &Kinematics) -> Result<Mat2, Error> {
    require(kin, Dim::One)?;
    let c = kin.cos_half_fw();
    let s = kin.sin_half_fw_per_p() * kin.momentum()[0];
    Ok(Mat2::IDENTITY * c + S1S3 * s)
}

/// `exp(sigma_1 sigma_3 theta/2)` through the matrix exponential.
pub fn fw_1p1_exp(kin: &Kinematics) -> Result<Mat2, Error> {
    require(kin, Dim::One)?;
    Ok(exp_mat2(&(S1S3 * (0.5 * kin.signed_fw_angle()))))
}

/// Closed-form 2+1 FW matrix `(E + m + sigma_3 sigma.p) / sqrt(2E(E+m))`.
pub fn fw_2p1(kin: &Kinematics) -> Result<Mat2, Error> {
    require(kin, Dim::Two)?;
    let e = kin.energy();
    let m = kin.mass();
    let n = 1.0 / libm::sqrt(2.0 * e * (e + m));
    let gen = SIGMA3 * sigma_dot(kin.momentum());
    Ok((Mat2::IDENTITY * (e + m) + gen) * n)
}

/// `exp(sigma_3 sigma.p_hat theta/2)` through the matrix exponential.
pub fn fw_2p1_exp(kin: &Kinematics) -> Result<Mat2, Error> {
    require(kin, Dim::Two)?;
    let gen = SIGMA3 * sigma_dot(kin.direction_or([1.0, 0.0]));
    Ok(exp_mat2(&(gen * (0.5 * kin.fw_angle()))))
}

/// FW transform as a matrix field `W(p)` with `W^-1 H W = E sigma_3`.
#[derive(Clone, Debug)]
pub struct FwTransform {
    dim: Dim,
    mass: f64,
    w: MatrixField,
    w_inv: MatrixField,
}

impl FwTransform {
    pub fn new(dim: Dim, mass: f64) -> Result<Self, Error> {
        let (w, w_inv) = match dim {
            Dim::One => operators::fw_field_1p1(mass)?,
            Dim::Two => {
                let (a, b) = operators::fw_field_2p1(mass)?;
                (b, a)
            }
        };
        Ok(FwTransform {
            dim,
            mass,
            w,
            w_inv,
        })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn field(&self) -> &MatrixField {
        &self.w
    }

    pub fn inverse_field(&self) -> &MatrixField {
        &self.w_inv
    }

    pub fn at(&self, p: [f64; 2]) -> Mat2 {
        self.w.value(p)
    }

    /// Entrywise `|W^-1 H W - E sigma_3|` at `p`.
    pub fn diagonalization_defect(&self, p: [f64; 2]) -> Result<f64, Error> {
        let kin = Kinematics::new(self.dim, self.mass, p)?;
        let h = operators::hamiltonian(self.dim, self.mass)?.value(p);
        let d = self.w_inv.value(p) * h * self.w.value(p);
        Ok((d - SIGMA3 * kin.energy()).max_norm())
    }
}

/// `|W^dagger W - I|` entrywise.
pub fn unitarity_defect(w: &Mat2) -> f64 {
    (w.dagger() * *w - Mat2::IDENTITY).max_norm()
}

/// Result of the projective boost-rotation comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectiveBoost {
    /// `|B P+ v - s R P+ v|` with `s = sqrt(E/m)`.
    pub residual: f64,
    /// Fitted ratio `|B P+ v| / |R P+ v|`.
    pub scale: f64,
}

/// Compares the boost `e^{sigma_1 xi/2}` (1+1) or `e^{sigma.xi/2}` (2+1)
/// with the FW rotation on the projected rest spinor `P+ (1,0)`.
///
/// The two agree only up to the factor `sqrt(E/m)`; the rotation in 2+1 is
/// generated by `-sigma_3 sigma.p_hat`.
pub fn projective_boost_identity(kin: &Kinematics) -> ProjectiveBoost {
    let v = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
    let (boost, rotation) = match kin.dim() {
        Dim::One => {
            let b = exp_mat2(&(SIGMA1 * (0.5 * kin.signed_rapidity())));
            let r = exp_mat2(&(S1S3 * (0.5 * kin.signed_fw_angle())));
            (b, r)
        }
        Dim::Two => {
            let xi = kin.rapidity_vector();
            let b = exp_mat2(&(sigma_dot(xi) * 0.5));
            let gen = SIGMA3 * sigma_dot(kin.direction_or([1.0, 0.0]));
            let r = exp_mat2(&(gen * (-0.5 * kin.fw_angle())));
            (b, r)
        }
    };
    let projector = (Mat2::IDENTITY + SIGMA3) * 0.5;
    let pv = projector.apply(&v);
    let lhs = boost.apply(&pv);
    let rhs = rotation.apply(&pv);
    let s = libm::sqrt(kin.energy() / kin.mass());
    let residual = vec_norm(&vec_sub(&lhs, &vec_scale(C64::new(s, 0.0), &rhs)));
    ProjectiveBoost {
        residual,
        scale: vec_norm(&lhs) / vec_norm(&rhs),
    }
}
