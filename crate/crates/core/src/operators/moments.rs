//! Mass moments, angular momenta and conservation checks.

use alloc::string::String;
use alloc::vec::Vec;

use super::catalog::{
    canonical_position, covariant_position, energy, fw_field_2p1, hamiltonian, momentum,
    particle_position_1p1, particle_position_2p1, PositionSign,
};
use super::diffop::{DiffOp, StateField};
use super::field::MatrixField;
use crate::algebra::{vec_norm, Mat2, C64, I, SIGMA1, SIGMA2, SIGMA3};
use crate::error::Error;
use crate::kinematics::Dim;

fn mult(dim: Dim, f: MatrixField) -> DiffOp {
    DiffOp::multiplication(dim, f)
}

/// `t p^k - x^k o P0`, with `P0` applied first.
fn mass_moment(dim: Dim, k: usize, x: &DiffOp, p0: &MatrixField) -> Result<DiffOp, Error> {
    DiffOp::zero(dim)
        .plus_time(momentum(dim, k)?)
        .sub(&x.compose_field(p0)?)
}

/// Canonical mass moment `J01_D = x0 p1 - x1 p0` with `p0 = H`.
pub fn mass_moment_dirac_1p1(m: f64) -> Result<DiffOp, Error> {
    let x = canonical_position(Dim::One, 0, PositionSign::Plus)?;
    mass_moment(Dim::One, 0, &x, &hamiltonian(Dim::One, m)?)
}

/// Particle mass moment `J01_P = x0 p1 - X1 E`.
pub fn mass_moment_particle_1p1(m: f64) -> Result<DiffOp, Error> {
    mass_moment(
        Dim::One,
        0,
        &particle_position_1p1(m)?,
        &energy(Dim::One, m)?,
    )
}

/// Covariant mass moment `X0_N p1 - X1_N H`.
pub fn mass_moment_covariant_1p1(m: f64) -> Result<DiffOp, Error> {
    let x = covariant_position(Dim::One, 0, m)?;
    mass_moment(Dim::One, 0, &x, &hamiltonian(Dim::One, m)?)
}

/// Particle mass moment `t p^k - X^k E` in either dimension.
pub fn particle_mass_moment(dim: Dim, k: usize, m: f64) -> Result<DiffOp, Error> {
    let x = match dim {
        Dim::One if k == 0 => particle_position_1p1(m)?,
        Dim::One => {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 0,
                max: 0,
            })
        }
        Dim::Two => particle_position_2p1(m, k)?,
    };
    mass_moment(dim, k, &x, &energy(dim, m)?)
}

/// Conserved boost generator `t p^k - x^k H + (i/2) sigma_k` in either dimension.
pub fn canonical_boost_sum(dim: Dim, k: usize, m: f64) -> Result<DiffOp, Error> {
    let x = canonical_position(dim, k, PositionSign::Plus)?;
    let sk = if k == 0 { SIGMA1 } else { SIGMA2 };
    mass_moment(dim, k, &x, &hamiltonian(dim, m)?)?
        .add(&mult(dim, MatrixField::constant(sk * (I * 0.5))))
}

/// Spin-like boost term `S01_D = (i/4)[g0, g1] = (i/2) sigma_1`.
pub fn spin_like_boost_1p1() -> Mat2 {
    SIGMA1 * (I * 0.5)
}

/// `J01_D + S01_D`.
pub fn boost_sum_1p1(m: f64) -> Result<DiffOp, Error> {
    mass_moment_dirac_1p1(m)?.add(&mult(
        Dim::One,
        MatrixField::constant(spin_like_boost_1p1()),
    ))
}

/// Largest coefficient of `d(J01_D + S01_D)/dt` over the samples.
pub fn boost_sum_identity_1p1(m: f64, samples: &[f64]) -> Result<f64, Error> {
    let d = boost_sum_1p1(m)?.heisenberg_derivative(&hamiltonian(Dim::One, m)?)?;
    let pts: Vec<[f64; 2]> = samples.iter().map(|&p| [p, 0.0]).collect();
    d.distance(&DiffOp::zero(Dim::One), &pts)
}

/// Angular momenta in 2+1.
#[derive(Clone, Debug)]
pub struct AngularMomenta {
    /// Canonical orbital `x1 p2 - x2 p1`.
    pub l_d: DiffOp,
    /// Canonical spin `sigma_3 / 2`.
    pub s_d: DiffOp,
    pub j_d: DiffOp,
    /// Particle orbital `X1 p2 - X2 p1`.
    pub l: DiffOp,
    /// FW-conjugated spin, `I/2` on particle states.
    pub s: DiffOp,
    pub j: DiffOp,
}

fn orbital(x1: &DiffOp, x2: &DiffOp) -> Result<DiffOp, Error> {
    x1.compose_field(&momentum(Dim::Two, 1)?)?
        .sub(&x2.compose_field(&momentum(Dim::Two, 0)?)?)
}

pub fn angular_momenta_2p1(m: f64) -> Result<AngularMomenta, Error> {
    let dim = Dim::Two;
    let l_d = orbital(
        &canonical_position(dim, 0, PositionSign::Plus)?,
        &canonical_position(dim, 1, PositionSign::Plus)?,
    )?;
    let s_d = mult(dim, MatrixField::constant(SIGMA3 * 0.5));
    let j_d = l_d.add(&s_d)?;
    let l = orbital(&particle_position_2p1(m, 0)?, &particle_position_2p1(m, 1)?)?;
    let (w, winv) = fw_field_2p1(m)?;
    let s = s_d.conjugate(&winv, &w)?;
    let j = l.add(&s)?;
    Ok(AngularMomenta {
        l_d,
        s_d,
        j_d,
        l,
        s,
        j,
    })
}

/// 2+1 canonical mass moments and their spin-like partners.
#[derive(Clone, Debug)]
pub struct MassMoments2p1 {
    /// `J0k_c = x0 p^k - x^k p0`, `p0 = H`.
    pub j0k: [DiffOp; 2],
    /// `S0k_c = (i/2) sigma_k`.
    pub s0k: [DiffOp; 2],
}

pub fn mass_moment_2p1(m: f64) -> Result<MassMoments2p1, Error> {
    let dim = Dim::Two;
    let h = hamiltonian(dim, m)?;
    let j = |k: usize| mass_moment(dim, k, &canonical_position(dim, k, PositionSign::Plus)?, &h);
    let s = |sk: Mat2| mult(dim, MatrixField::constant(sk * (I * 0.5)));
    Ok(MassMoments2p1 {
        j0k: [j(0)?, j(1)?],
        s0k: [s(SIGMA1), s(SIGMA2)],
    })
}

/// Residuals of a Heisenberg derivative applied to a state family.
#[derive(Clone, Debug, PartialEq)]
pub struct ConservationReport {
    pub name: String,
    /// `(p, |(dO/dt) psi(p)|)` per sampled momentum.
    pub residuals: Vec<([f64; 2], f64)>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Evaluates `dO/dt = -i[O, H] + dO/dt|explicit` on `psi` at each sample.
pub fn conservation_check(
    name: &str,
    op: &DiffOp,
    h: &MatrixField,
    psi: &StateField,
    samples: &[[f64; 2]],
    t: f64,
    tolerance: f64,
) -> Result<ConservationReport, Error> {
    let d = op.heisenberg_derivative(h)?;
    let residuals: Vec<([f64; 2], f64)> = samples
        .iter()
        .map(|&p| (p, vec_norm(&d.apply_state(p, t, psi))))
        .collect();
    let max_residual = residuals.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(ConservationReport {
        name: String::from(name),
        residuals,
        max_residual,
        tolerance,
        pass: max_residual <= tolerance,
    })
}

/// `-sigma_1 H + p`, the closed form of `dJ01_D/dt`.
pub fn dirac_moment_rate_1p1(m: f64) -> Result<DiffOp, Error> {
    let h = hamiltonian(Dim::One, m)?;
    let f = MatrixField::constant(SIGMA1)
        .mul(&h)
        .scale(C64::new(-1.0, 0.0))
        .add(&momentum(Dim::One, 0)?);
    Ok(mult(Dim::One, f))
}

/// `i sigma_1 p2 - i sigma_2 p1`, the closed form of `[L12_D, H]`.
pub fn orbital_commutator_2p1() -> Result<DiffOp, Error> {
    let a = MatrixField::constant(SIGMA1 * I).mul(&momentum(Dim::Two, 1)?);
    let b = MatrixField::constant(SIGMA2 * I).mul(&momentum(Dim::Two, 0)?);
    Ok(mult(Dim::Two, a.sub(&b)))
}
