//! 2+1 dimensional spinors in the standard representation.
//!
//! The Lorentz generators are `J01 = i s1/2`, `J02 = i s2/2`, `J12 = s3/2`.
//! Left- and right-handed boosts `e^{+-sigma.xi/2}` are related by the
//! similarity transformation with `sigma3`, so in 2+1 the parity-extended
//! representation needs no doubling.

use crate::algebra::{exp_mat2, re, vec_norm, Mat2, Vec2, I, SIGMA1, SIGMA2, SIGMA3};
use crate::kinematics::Kinematics;
use crate::spinor_1p1::Species;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Handedness {
    /// `e^{+sigma.xi/2}`; the default.
    #[default]
    Left,
    /// `e^{-sigma.xi/2}`.
    Right,
}

impl Handedness {
    pub fn sign(self) -> f64 {
        match self {
            Handedness::Left => 1.0,
            Handedness::Right => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorSet2p1 {
    pub j01: Mat2,
    pub j02: Mat2,
    pub j12: Mat2,
}

impl GeneratorSet2p1 {
    pub fn new() -> Self {
        GeneratorSet2p1 {
            j01: SIGMA1 * (I * 0.5),
            j02: SIGMA2 * (I * 0.5),
            j12: SIGMA3 * 0.5,
        }
    }

    /// `J^{0k}` for `k` in `1..=2`.
    pub fn boost(&self, k: usize) -> Mat2 {
        if k == 1 {
            self.j01
        } else {
            self.j02
        }
    }
}

impl Default for GeneratorSet2p1 {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaSet2p1 {
    pub gamma: [Mat2; 3],
}

impl GammaSet2p1 {
    /// `gamma0 = s3`, `gamma1 = i s2`, `gamma2 = -i s1`.
    pub fn standard() -> Self {
        GammaSet2p1 {
            gamma: [SIGMA3, SIGMA2 * I, SIGMA1 * -I],
        }
    }

    /// Gamma matrices acting on spinors of the given handedness: the
    /// right-handed set is the `sigma3` conjugate of the standard one.
    pub fn for_handedness(h: Handedness) -> Self {
        let s = Self::standard();
        match h {
            Handedness::Left => s,
            Handedness::Right => GammaSet2p1 {
                gamma: s.gamma.map(|g| SIGMA3 * g * SIGMA3),
            },
        }
    }

    /// `gamma^mu p_mu = E gamma^0 - p1 gamma^1 - p2 gamma^2`.
    pub fn slash(&self, kin: &Kinematics) -> Mat2 {
        let p = kin.momentum();
        self.gamma[0] * kin.energy() - self.gamma[1] * p[0] - self.gamma[2] * p[1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor2p1 {
    pub amplitudes: Vec2,
    pub species: Species,
    pub handedness: Handedness,
}

/// `sigma . v`.
pub fn sigma_dot(v: [f64; 2]) -> Mat2 {
    SIGMA1 * v[0] + SIGMA2 * v[1]
}

/// `e^{+-sigma.xi/2}` with the full rapidity vector.
pub fn boost_matrix_2p1(kin: &Kinematics, handedness: Handedness) -> Mat2 {
    let xi = kin.rapidity_vector();
    exp_mat2(&(sigma_dot(xi) * (handedness.sign() * 0.5)))
}

pub fn rest_state_2p1(species: Species) -> Vec2 {
    match species {
        Species::Particle => [re(1.0), re(0.0)],
        Species::Antiparticle => [re(0.0), re(1.0)],
    }
}

/// Boosted spinor `e^{+-sigma.xi/2} psi(k)`.
pub fn boost_spinor_2p1(kin: &Kinematics, species: Species, handedness: Handedness) -> Spinor2p1 {
    Spinor2p1 {
        amplitudes: boost_matrix_2p1(kin, handedness).apply(&rest_state_2p1(species)),
        species,
        handedness,
    }
}

pub fn parity_matrix_2p1(species: Species) -> Mat2 {
    SIGMA3 * species.sign()
}

/// `|(gamma^mu p_mu -+ m) psi|`.
pub fn dirac_residual_2p1(kin: &Kinematics, psi: &Spinor2p1) -> f64 {
    let op = GammaSet2p1::for_handedness(psi.handedness).slash(kin)
        - Mat2::IDENTITY * (psi.species.sign() * kin.mass());
    vec_norm(&op.apply(&psi.amplitudes))
}

/// `|s3 e^{sigma.xi/2} s3 - e^{-sigma.xi/2}|` (max entry).
pub fn handedness_equivalence(kin: &Kinematics) -> f64 {
    let left = boost_matrix_2p1(kin, Handedness::Left);
    let right = boost_matrix_2p1(kin, Handedness::Right);
    (SIGMA3 * left * SIGMA3 - right).max_norm()
}

/// `H = sigma.p + m sigma3`.
pub fn hamiltonian_2p1(kin: &Kinematics) -> Mat2 {
    sigma_dot(kin.momentum()) + SIGMA3 * kin.mass()
}

/// Spinor Lorentz matrix from generators: `exp(-i J^{0k} omega_k + i J12 angle)`.
pub fn lorentz_from_generators(boost: [f64; 2], angle: f64) -> Mat2 {
    let g = GeneratorSet2p1::new();
    let expo = (g.j01 * boost[0] + g.j02 * boost[1]) * -I + g.j12 * (I * angle);
    exp_mat2(&expo)
}

/// The same matrix written as `exp(sigma.xi/2 + i s3 angle/2)`.
pub fn lorentz_from_pauli(boost: [f64; 2], angle: f64) -> Mat2 {
    exp_mat2(&(sigma_dot(boost) * 0.5 + SIGMA3 * (I * (angle / 2.0))))
}
