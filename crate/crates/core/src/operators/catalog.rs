//! Momentum-space fields and position operators.

use super::diffop::{DiffOp, StateField};
use super::field::MatrixField;
use super::jet::Jet;
use crate::algebra::{Mat2, C64, I, SIGMA1, SIGMA2, SIGMA3};
use crate::error::Error;
use crate::kinematics::Dim;

/// Sign `s` of the canonical position `x = s i d/dp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PositionSign {
    /// `x = +i d/dp`, the convention under which `[x, p] = i`.
    #[default]
    Plus,
    Minus,
}

impl PositionSign {
    pub fn coefficient(self) -> C64 {
        match self {
            PositionSign::Plus => I,
            PositionSign::Minus => -I,
        }
    }
}

/// `-i sigma_2`, the real rotation generator.
const NEG_I_SIGMA2: Mat2 = Mat2::real(0.0, -1.0, 1.0, 0.0);
/// `sigma_3 sigma_1 = i sigma_2`.
const S3S1: Mat2 = Mat2::real(0.0, 1.0, -1.0, 0.0);

fn s3s2() -> Mat2 {
    SIGMA3 * SIGMA2
}

fn check_direction(dim: Dim, k: usize) -> Result<(), Error> {
    let n = dim.spatial();
    if k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            min: 0,
            max: n - 1,
        });
    }
    Ok(())
}

/// Energy `sqrt(m^2 + |p|^2)` in jet arithmetic; `p^2` is ignored in 1+1.
pub fn energy_jet(dim: Dim, m: f64, p: &[Jet<f64>; 2]) -> Jet<f64> {
    let mut e2 = p[0] * p[0] + m * m;
    if dim == Dim::Two {
        e2 = e2 + p[1] * p[1];
    }
    e2.sqrt()
}

/// `sigma . p` in jet arithmetic.
pub fn sigma_dot_jet(dim: Dim, p: &[Jet<f64>; 2]) -> Jet<Mat2> {
    let mut s = p[0].times(SIGMA1);
    if dim == Dim::Two {
        s = s + p[1].times(SIGMA2);
    }
    s
}

fn check_mass(m: f64) -> Result<(), Error> {
    if !m.is_finite() {
        return Err(Error::NonFinite("mass"));
    }
    if m <= 0.0 {
        return Err(Error::NonPositiveMass(m));
    }
    Ok(())
}

pub fn energy(dim: Dim, m: f64) -> Result<MatrixField, Error> {
    check_mass(m)?;
    Ok(MatrixField::scalar(move |p| {
        energy_jet(dim, m, p).complex()
    }))
}

/// `p^k I`.
pub fn momentum(dim: Dim, k: usize) -> Result<MatrixField, Error> {
    check_direction(dim, k)?;
    Ok(MatrixField::coordinate(k))
}

/// Free Dirac Hamiltonian `sigma . p + m sigma_3` (standard representation).
pub fn hamiltonian(dim: Dim, m: f64) -> Result<MatrixField, Error> {
    check_mass(m)?;
    Ok(MatrixField::new(move |p| {
        sigma_dot_jet(dim, p) + Jet::constant(SIGMA3 * m)
    }))
}

/// Boost field `B = e^{sigma . xi / 2}` and its inverse.
pub fn boost_field(dim: Dim, m: f64) -> Result<(MatrixField, MatrixField), Error> {
    check_mass(m)?;
    let build = move |sign: f64| {
        MatrixField::new(move |p| {
            let e = energy_jet(dim, m, p);
            let ch = ((e + m) * (0.5 / m)).sqrt();
            let sh = ((e + m) * (2.0 * m)).sqrt().recip() * sign;
            ch.times(Mat2::IDENTITY) + sh * sigma_dot_jet(dim, p)
        })
    };
    Ok((build(1.0), build(-1.0)))
}

/// 1+1 FW field `W = cos(theta/2) - i sigma_2 sin(theta/2)` (signed `p`),
/// with `W^-1 H W = E sigma_3`, and its inverse.
pub fn fw_field_1p1(m: f64) -> Result<(MatrixField, MatrixField), Error> {
    check_mass(m)?;
    let build = move |sign: f64| {
        MatrixField::new(move |p| {
            let e = energy_jet(Dim::One, m, p);
            let c = ((e + m) * (e * 2.0).recip()).sqrt();
            let s = p[0] * ((e + m) * e * 2.0).sqrt().recip() * sign;
            c.times(Mat2::IDENTITY) + s.times(NEG_I_SIGMA2)
        })
    };
    Ok((build(1.0), build(-1.0)))
}

/// 2+1 FW field `W = (E + m + sigma_3 sigma . p) / sqrt(2E(E+m))`, with
/// `W H W^-1 = E sigma_3`, and its inverse `W^dagger`.
pub fn fw_field_2p1(m: f64) -> Result<(MatrixField, MatrixField), Error> {
    check_mass(m)?;
    let build = move |sign: f64| {
        MatrixField::new(move |p| {
            let e = energy_jet(Dim::Two, m, p);
            let n = ((e + m) * e * 2.0).sqrt().recip();
            let gen = p[0].times(S3S1) + p[1].times(s3s2());
            n * ((e + m).times(Mat2::IDENTITY) + gen.scale(sign))
        })
    };
    Ok((build(1.0), build(-1.0)))
}

/// Canonical position `x^k = s i d/dp^k`.
pub fn canonical_position(dim: Dim, k: usize, sign: PositionSign) -> Result<DiffOp, Error> {
    check_direction(dim, k)?;
    let c = sign.coefficient();
    DiffOp::gradient(dim, k, MatrixField::constant(Mat2::scalar(c)))
}

/// Covariant position `X_N^k = B x^k B^-1`.
pub fn covariant_position(dim: Dim, k: usize, m: f64) -> Result<DiffOp, Error> {
    let (b, binv) = boost_field(dim, m)?;
    canonical_position(dim, k, PositionSign::Plus)?.conjugate(&b, &binv)
}

/// Closed-form 1+1 particle position `x - (m / 2E^2) sigma_2`.
pub fn particle_position_1p1(m: f64) -> Result<DiffOp, Error> {
    check_mass(m)?;
    let shift = MatrixField::new(move |p| {
        let e = energy_jet(Dim::One, m, p);
        (e * e).recip().times(SIGMA2 * (-0.5 * m))
    });
    canonical_position(Dim::One, 0, PositionSign::Plus)?
        .add(&DiffOp::multiplication(Dim::One, shift))
}

/// 1+1 particle position built as `W x W^-1`.
pub fn particle_position_1p1_via_fw(m: f64) -> Result<DiffOp, Error> {
    let (w, winv) = fw_field_1p1(m)?;
    canonical_position(Dim::One, 0, PositionSign::Plus)?.conjugate(&w, &winv)
}

/// Closed-form 2+1 particle position `X^k`:
/// `x^k - i p^k (E + s3 s.p) / (2E^2 (E+m)) + i ((E+m) s3 s_k + s.p s_k) / (2E(E+m))`.
pub fn particle_position_2p1(m: f64, k: usize) -> Result<DiffOp, Error> {
    check_mass(m)?;
    check_direction(Dim::Two, k)?;
    let sk = if k == 0 { SIGMA1 } else { SIGMA2 };
    let shift = MatrixField::new(move |p| {
        let e = energy_jet(Dim::Two, m, p);
        let sp = sigma_dot_jet(Dim::Two, p);
        let s3sp = Jet::constant(SIGMA3) * sp;
        let first = (p[k] * (e * e * (e + m) * 2.0).recip())
            * (e.times(Mat2::IDENTITY) + s3sp)
            * Jet::constant(Mat2::scalar(-I));
        let second = (e * (e + m) * 2.0).recip()
            * ((e + m).times(SIGMA3 * sk) + sp * Jet::constant(sk))
            * Jet::constant(Mat2::scalar(I));
        first + second
    });
    canonical_position(Dim::Two, k, PositionSign::Plus)?
        .add(&DiffOp::multiplication(Dim::Two, shift))
}

/// 2+1 particle position built as `W^-1 x^k W`.
pub fn particle_position_2p1_via_fw(m: f64, k: usize) -> Result<DiffOp, Error> {
    let (w, winv) = fw_field_2p1(m)?;
    canonical_position(Dim::Two, k, PositionSign::Plus)?.conjugate(&winv, &w)
}

/// Boosted particle spinor `e^{sigma . xi / 2} (1, 0)` (norm `sqrt(E/m)`).
pub fn particle_state(dim: Dim, m: f64) -> Result<StateField, Error> {
    let (b, _) = boost_field(dim, m)?;
    Ok(StateField::from_matrix(
        &b,
        [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
    ))
}

/// Unit-norm positive-energy eigenspinor of the Hamiltonian.
pub fn normalized_particle_state(dim: Dim, m: f64) -> Result<StateField, Error> {
    check_mass(m)?;
    Ok(StateField::new(move |p| {
        let e = energy_jet(dim, m, p);
        let n = ((e + m) * e * 2.0).sqrt().recip();
        let upper = ((e + m) * n).complex();
        let lower_re = (p[0] * n).complex();
        let lower = if dim == Dim::Two {
            lower_re + (p[1] * n).complex() * Jet::constant(I)
        } else {
            lower_re
        };
        [upper, lower]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator, is_unitary};
    use crate::kinematics::Kinematics;

    fn close(a: Mat2, b: Mat2, tol: f64) -> bool {
        (a - b).max_norm() <= tol
    }

    #[test]
    fn fw_1p1_diagonalizes() {
        let (w, winv) = fw_field_1p1(3.0).unwrap();
        let h = hamiltonian(Dim::One, 3.0).unwrap();
        let p = [4.0, 0.0];
        let d = winv.value(p) * h.value(p) * w.value(p);
        assert!(close(d, SIGMA3 * 5.0, 1e-14));
    }

    #[test]
    fn fw_2p1_diagonalizes_and_is_unitary() {
        let (w, winv) = fw_field_2p1(1.3).unwrap();
        let h = hamiltonian(Dim::Two, 1.3).unwrap();
        let p = [0.7, -2.1];
        let e = Kinematics::new_2p1(1.3, p).unwrap().energy();
        assert!(close(
            w.value(p) * h.value(p) * winv.value(p),
            SIGMA3 * e,
            1e-13
        ));
        assert!(is_unitary(&w.value(p), 1e-14));
        assert!(close(winv.value(p), w.value(p).dagger(), 1e-15));
    }

    #[test]
    fn particle_position_1p1_examples() {
        let x = particle_position_1p1(1.0).unwrap();
        assert!(close(
            x.matrix_part().value([0.0, 0.0]),
            SIGMA2 * -0.5,
            1e-16
        ));
        let x = particle_position_1p1(3.0).unwrap();
        assert!(close(
            x.matrix_part().value([4.0, 0.0]),
            SIGMA2 * (-3.0 / 50.0),
            1e-16
        ));
    }

    #[test]
    fn particle_position_paths_agree() {
        let m = 1.7;
        let closed = particle_position_1p1(m).unwrap();
        let via = particle_position_1p1_via_fw(m).unwrap();
        let samples: [[f64; 2]; 5] = [
            [0.0, 0.0],
            [0.5, 0.0],
            [-3.0, 0.0],
            [10.0, 0.0],
            [-17.0, 0.0],
        ];
        assert!(closed.distance(&via, &samples).unwrap() < 1e-14);
        let s2: [[f64; 2]; 4] = [[0.0, 0.0], [0.5, -0.2], [-3.0, 1.0], [4.0, 4.0]];
        for k in 0..2 {
            let closed = particle_position_2p1(m, k).unwrap();
            let via = particle_position_2p1_via_fw(m, k).unwrap();
            assert!(closed.distance(&via, &s2).unwrap() < 1e-14);
        }
    }

    #[test]
    fn particle_position_2p1_at_rest() {
        let x = particle_position_2p1(1.0, 0).unwrap();
        assert!(close(
            x.matrix_part().value([0.0, 0.0]),
            SIGMA2 * -0.5,
            1e-16
        ));
    }

    #[test]
    fn covariant_position_1p1_shift() {
        let m = 2.0;
        let x = covariant_position(Dim::One, 0, m).unwrap();
        for p in [0.0, 1.5, -4.0] {
            let e = (m * m + p * p).sqrt();
            let expect = SIGMA1 * C64::new(0.0, -0.5 / e);
            assert!(close(x.matrix_part().value([p, 0.0]), expect, 1e-15));
        }
    }

    #[test]
    fn canonical_commutation_2p1() {
        for k in 0..2 {
            for l in 0..2 {
                let x = canonical_position(Dim::Two, k, PositionSign::Plus).unwrap();
                let pl = DiffOp::multiplication(Dim::Two, momentum(Dim::Two, l).unwrap());
                let c = x.commutator(&pl).unwrap();
                let want = if k == l { Mat2::scalar(I) } else { Mat2::ZERO };
                assert_eq!(c.matrix_at([0.3, 0.4], 0.0), want);
                let xn = covariant_position(Dim::Two, k, 1.0).unwrap();
                let c = xn.commutator(&pl).unwrap();
                assert!(close(c.matrix_at([0.3, 0.4], 0.0), want, 1e-15));
            }
        }
        let minus = canonical_position(Dim::Two, 0, PositionSign::Minus).unwrap();
        let p = DiffOp::multiplication(Dim::Two, momentum(Dim::Two, 0).unwrap());
        assert_eq!(
            minus.commutator(&p).unwrap().matrix_at([0.0, 0.0], 0.0),
            Mat2::scalar(-I)
        );
    }

    #[test]
    fn particle_state_is_eigenvector() {
        for dim in [Dim::One, Dim::Two] {
            let h = hamiltonian(dim, 0.8).unwrap();
            for psi in [
                particle_state(dim, 0.8).unwrap(),
                normalized_particle_state(dim, 0.8).unwrap(),
            ] {
                let p = [1.1, if dim == Dim::Two { -0.4 } else { 0.0 }];
                let e = energy_jet(dim, 0.8, &super::super::field::seed(p)).v;
                let v = psi.value(p);
                let hv = h.value(p).apply(&v);
                for c in 0..2 {
                    assert!((hv[c] - v[c] * e).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn boost_inverse() {
        let (b, binv) = boost_field(Dim::Two, 1.0).unwrap();
        let p = [2.0, -1.0];
        assert!(close(b.value(p) * binv.value(p), Mat2::IDENTITY, 1e-14));
        assert!(close(
            commutator(&b.value(p), &binv.value(p)),
            Mat2::ZERO,
            1e-14
        ));
    }
}
