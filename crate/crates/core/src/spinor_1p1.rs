//! 1+1 dimensional spinors.
//!
//! Parity swaps the left-handed (`e^{xi/2}`) and right-handed (`e^{-xi/2}`)
//! boost representations, so the parity-extended representation is their
//! direct sum: the two-component chiral spinor. Parity acts as `sigma1` on
//! particle states and `-sigma1` on antiparticle states, and requiring the
//! boosted state to agree with the parity image gives the covariant Dirac
//! equation.
//!
//! All functions here read `p1` only; a 2+1 [`Kinematics`] passed in is
//! treated as its projection on the first axis.

use crate::algebra::{exp_mat2, re, vec_norm, Mat2, Vec2, C64, I, SIGMA1, SIGMA2, SIGMA3};
use crate::error::Error;
use crate::kinematics::Kinematics;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Chiral,
    Standard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    Particle,
    Antiparticle,
}

impl Species {
    /// `+1` for particles, `-1` for antiparticles.
    pub fn sign(self) -> f64 {
        match self {
            Species::Particle => 1.0,
            Species::Antiparticle => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    pub amplitudes: Vec2,
    pub rep: Representation,
    pub species: Species,
}

impl Spinor {
    pub fn norm(&self) -> f64 {
        vec_norm(&self.amplitudes)
    }

    /// Same spinor scaled to unit Euclidean norm.
    pub fn normalized(&self) -> Spinor {
        let n = self.norm();
        Spinor {
            amplitudes: [self.amplitudes[0] / n, self.amplitudes[1] / n],
            ..*self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaSet1p1 {
    pub gamma0: Mat2,
    pub gamma1: Mat2,
    pub rep: Representation,
}

impl GammaSet1p1 {
    pub fn new(rep: Representation) -> Self {
        match rep {
            // gamma0 = sigma1, gamma1 = -i sigma2
            Representation::Chiral => GammaSet1p1 {
                gamma0: SIGMA1,
                gamma1: SIGMA2 * -I,
                rep,
            },
            // gamma0 = sigma3, gamma1 = i sigma2
            Representation::Standard => GammaSet1p1 {
                gamma0: SIGMA3,
                gamma1: SIGMA2 * I,
                rep,
            },
        }
    }

    /// `gamma^mu` for `mu` in `0..=1`.
    pub fn get(&self, mu: usize) -> Mat2 {
        if mu == 0 {
            self.gamma0
        } else {
            self.gamma1
        }
    }

    /// `p^mu gamma_mu = E gamma^0 - p1 gamma^1`.
    pub fn slash(&self, kin: &Kinematics) -> Mat2 {
        self.gamma0 * kin.energy() - self.gamma1 * kin.momentum()[0]
    }
}

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Canonical chiral base state: `e^{sigma3 xi/2} (1, +-1)/sqrt 2` with the
/// rapidity signed by `p1`.
pub fn chiral_state(kin: &Kinematics, species: Species) -> Spinor {
    let boost = exp_mat2(&(SIGMA3 * (kin.signed_rapidity() / 2.0)));
    let rest = [re(FRAC_1_SQRT_2), re(species.sign() * FRAC_1_SQRT_2)];
    Spinor {
        amplitudes: boost.apply(&rest),
        rep: Representation::Chiral,
        species,
    }
}

/// Standard-representation state `e^{sigma1 xi/2} e`, with `e = (1,0)` for a
/// particle and `(0,1)` for an antiparticle. Not unit normalised:
/// `|psi|^2 = cosh xi = E/m`.
pub fn standard_state(kin: &Kinematics, species: Species) -> Spinor {
    let boost = exp_mat2(&(SIGMA1 * (kin.signed_rapidity() / 2.0)));
    let rest = match species {
        Species::Particle => [re(1.0), re(0.0)],
        Species::Antiparticle => [re(0.0), re(1.0)],
    };
    Spinor {
        amplitudes: boost.apply(&rest),
        rep: Representation::Standard,
        species,
    }
}

pub fn parity_matrix(species: Species) -> Mat2 {
    SIGMA1 * species.sign()
}

/// Lorentz-invariant product `phi^T sigma1 psi` (plain transpose).
pub fn invariant_product(phi: &Spinor, psi: &Spinor) -> Result<C64, Error> {
    if phi.rep != Representation::Chiral || psi.rep != Representation::Chiral {
        return Err(Error::RepresentationMismatch);
    }
    let q = SIGMA1.apply(&psi.amplitudes);
    Ok(phi.amplitudes[0] * q[0] + phi.amplitudes[1] * q[1])
}

/// `|(p.gamma -+ m) psi|`, with the sign taken from the spinor's species and
/// the gamma matrices from its representation.
pub fn dirac_residual(kin: &Kinematics, psi: &Spinor) -> f64 {
    let op =
        GammaSet1p1::new(psi.rep).slash(kin) - Mat2::IDENTITY * (psi.species.sign() * kin.mass());
    vec_norm(&op.apply(&psi.amplitudes))
}

/// Chiral-to-standard switch `S = [[1,1],[1,-1]]/sqrt 2` (self-inverse).
pub fn representation_switch() -> Mat2 {
    Mat2::real(1.0, 1.0, 1.0, -1.0) * FRAC_1_SQRT_2
}

pub fn to_standard(psi: &Spinor) -> Result<Spinor, Error> {
    if psi.rep != Representation::Chiral {
        return Err(Error::RepresentationMismatch);
    }
    Ok(Spinor {
        amplitudes: representation_switch().apply(&psi.amplitudes),
        rep: Representation::Standard,
        species: psi.species,
    })
}

/// `H = sigma1 p1 + m sigma3` in the standard representation.
pub fn hamiltonian_1p1(kin: &Kinematics) -> Mat2 {
    SIGMA1 * kin.momentum()[0] + SIGMA3 * kin.mass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{anticommutator, is_hermitian, vec_sub};

    fn k(m: f64, p: f64) -> Kinematics {
        Kinematics::new_1p1(m, p).unwrap()
    }

    fn close(a: &Vec2, b: &Vec2, tol: f64) -> bool {
        vec_norm(&vec_sub(a, b)) <= tol
    }

    #[test]
    fn chiral_state_examples() {
        let rest = chiral_state(&k(1.0, 0.0), Species::Particle);
        assert!(close(
            &rest.amplitudes,
            &[re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)],
            1e-16
        ));

        let s3 = libm::sqrt(3.0);
        let p = chiral_state(&k(3.0, 4.0), Species::Particle);
        let want = [re(s3 * FRAC_1_SQRT_2), re(FRAC_1_SQRT_2 / s3)];
        assert!(close(&p.amplitudes, &want, 1e-15));

        let a = chiral_state(&k(3.0, 4.0), Species::Antiparticle);
        let want = [re(s3 * FRAC_1_SQRT_2), re(-FRAC_1_SQRT_2 / s3)];
        assert!(close(&a.amplitudes, &want, 1e-15));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_matrix(Species::Particle), SIGMA1);
        assert_eq!(parity_matrix(Species::Antiparticle), -SIGMA1);
        for s in [Species::Particle, Species::Antiparticle] {
            let p = parity_matrix(s);
            assert_eq!(p * p, Mat2::IDENTITY);
        }
    }

    #[test]
    fn parity_reverses_momentum() {
        for &p in &[0.0, 0.3, 4.0, -2.0] {
            let psi = chiral_state(&k(1.5, p), Species::Particle);
            let flipped = chiral_state(&k(1.5, -p), Species::Particle);
            let image = parity_matrix(Species::Particle).apply(&psi.amplitudes);
            assert!(close(&image, &flipped.amplitudes, 1e-12));
        }
    }

    #[test]
    fn invariant_product_examples() {
        let kin = k(3.0, 4.0);
        let psi = chiral_state(&kin, Species::Particle);
        let anti = chiral_state(&kin, Species::Antiparticle);
        assert!((invariant_product(&psi, &psi).unwrap() - 1.0).norm() < 1e-15);
        assert!(invariant_product(&psi, &anti).unwrap().norm() < 1e-15);
        assert!((invariant_product(&anti, &anti).unwrap() + 1.0).norm() < 1e-15);

        // Gram determinant of the pair is -1 for every momentum.
        for &p in &[0.0, 0.01, 1.0, -7.0, 50.0] {
            let kin = k(1.0, p);
            let e = [
                chiral_state(&kin, Species::Particle),
                chiral_state(&kin, Species::Antiparticle),
            ];
            let g = |i: usize, j: usize| invariant_product(&e[i], &e[j]).unwrap();
            let det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
            assert!((det + 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn invariant_product_is_boost_invariant() {
        let phi = chiral_state(&k(1.0, 0.7), Species::Particle);
        let psi = Spinor {
            amplitudes: [C64::new(0.3, -0.2), C64::new(1.1, 0.4)],
            ..phi
        };
        let before = invariant_product(&phi, &psi).unwrap();
        for &delta in &[0.5, -1.3, 4.0] {
            let b = exp_mat2(&(SIGMA3 * (delta / 2.0)));
            let bp = Spinor {
                amplitudes: b.apply(&phi.amplitudes),
                ..phi
            };
            let bq = Spinor {
                amplitudes: b.apply(&psi.amplitudes),
                ..psi
            };
            let after = invariant_product(&bp, &bq).unwrap();
            assert!((after - before).norm() <= 1e-12 * before.norm().max(1.0));
        }
    }

    #[test]
    fn invariant_product_rejects_standard_rep() {
        let psi = chiral_state(&k(1.0, 0.0), Species::Particle);
        let std_psi = to_standard(&psi).unwrap();
        assert_eq!(
            invariant_product(&psi, &std_psi),
            Err(Error::RepresentationMismatch)
        );
    }

    #[test]
    fn dirac_residual_examples() {
        let psi = chiral_state(&k(3.0, 4.0), Species::Particle);
        assert!(dirac_residual(&k(3.0, 4.0), &psi) <= 1e-12);
        let anti = chiral_state(&k(1.0, 0.0), Species::Antiparticle);
        assert!(dirac_residual(&k(1.0, 0.0), &anti) <= 1e-15);
        let wrong = Spinor {
            species: Species::Antiparticle,
            ..chiral_state(&k(1.0, 0.0), Species::Particle)
        };
        assert!((dirac_residual(&k(1.0, 0.0), &wrong) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn dirac_residual_over_log_spaced_momenta() {
        for i in 0..100 {
            let ratio = if i == 0 {
                0.0
            } else {
                libm::pow(10.0, -3.0 + 4.0 * f64::from(i) / 99.0)
            };
            for sign in [1.0, -1.0] {
                let kin = k(2.0, sign * 2.0 * ratio);
                for species in [Species::Particle, Species::Antiparticle] {
                    let c = chiral_state(&kin, species);
                    assert!(dirac_residual(&kin, &c) <= 1e-10 * kin.energy());
                    let s = standard_state(&kin, species);
                    assert!(dirac_residual(&kin, &s) <= 1e-10 * kin.energy());
                }
            }
        }
    }

    #[test]
    fn representation_switch_examples() {
        let rest = chiral_state(&k(1.0, 0.0), Species::Particle);
        assert!(close(
            &to_standard(&rest).unwrap().amplitudes,
            &[re(1.0), re(0.0)],
            1e-15
        ));
        let rest_a = chiral_state(&k(1.0, 0.0), Species::Antiparticle);
        assert!(close(
            &to_standard(&rest_a).unwrap().amplitudes,
            &[re(0.0), re(1.0)],
            1e-15
        ));

        let s = representation_switch();
        assert!((s * SIGMA1 * s - SIGMA3).max_norm() < 1e-15);
        let chiral = GammaSet1p1::new(Representation::Chiral);
        let standard = GammaSet1p1::new(Representation::Standard);
        for mu in 0..2 {
            assert!((s * chiral.get(mu) * s - standard.get(mu)).max_norm() < 1e-15);
        }
        assert_eq!(
            to_standard(&to_standard(&rest).unwrap()),
            Err(Error::RepresentationMismatch)
        );
    }

    #[test]
    fn clifford_relations() {
        let eta = [[1.0, 0.0], [0.0, -1.0]];
        for rep in [Representation::Chiral, Representation::Standard] {
            let g = GammaSet1p1::new(rep);
            for mu in 0..2 {
                for nu in 0..2 {
                    let ac = anticommutator(&g.get(mu), &g.get(nu));
                    assert!((ac - Mat2::IDENTITY * (2.0 * eta[mu][nu])).max_norm() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn standard_state_is_switched_chiral_state() {
        for &p in &[0.0, 0.5, -3.0, 12.0] {
            let kin = k(1.3, p);
            for species in [Species::Particle, Species::Antiparticle] {
                let via_switch = to_standard(&chiral_state(&kin, species)).unwrap();
                let direct = standard_state(&kin, species);
                // Proportionality constant: must be real and positive.
                let ratio = crate::algebra::vec_inner(&via_switch.amplitudes, &direct.amplitudes)
                    / crate::algebra::vec_inner(&via_switch.amplitudes, &via_switch.amplitudes);
                assert!(ratio.im.abs() < 1e-14 && ratio.re > 0.0);
                let scaled = crate::algebra::vec_scale(ratio, &via_switch.amplitudes);
                assert!(close(&scaled, &direct.amplitudes, 1e-12 * direct.norm()));
                assert!(
                    (direct.norm() * direct.norm() - kin.energy() / kin.mass()).abs()
                        < 1e-12 * kin.energy()
                );
            }
        }
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(hamiltonian_1p1(&k(1.0, 0.0)), SIGMA3);
        let kin = k(3.0, 4.0);
        let h = hamiltonian_1p1(&kin);
        assert!(is_hermitian(&h, 1e-15));
        let ev = h.eigenvalues_hermitian();
        assert!((ev[0] + 5.0).abs() < 1e-14 && (ev[1] - 5.0).abs() < 1e-14);

        for &p in &[0.0, 4.0, -0.2, 30.0] {
            let kin = k(3.0, p);
            let psi = standard_state(&kin, Species::Particle);
            let hpsi = hamiltonian_1p1(&kin).apply(&psi.amplitudes);
            let epsi = crate::algebra::vec_scale(re(kin.energy()), &psi.amplitudes);
            assert!(close(&hpsi, &epsi, 1e-12 * kin.energy() * psi.norm()));
        }
    }
}
