//! Two-by-two complex matrix kernel.
//!
//! Every spinor-space operator in this crate is a [`Mat2`]. Matrices are kept
//! in their entry form; the Pauli decomposition `M = a0 I + a.sigma` is
//! available through [`Mat2::pauli_coefficients`] and is what the closed-form
//! exponential works with.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use num_complex::Complex64 as C64;

use crate::error::Error;

/// Imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

/// Checked complex constructor. NaN and infinite parts are rejected.
pub fn c64(re: f64, im: f64) -> Result<C64, Error> {
    if re.is_finite() && im.is_finite() {
        Ok(C64::new(re, im))
    } else {
        Err(Error::NonFinite("complex component"))
    }
}

#[inline]
pub(crate) const fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Two-component complex column vector.
pub type Vec2 = [C64; 2];

/// Euclidean norm of a two-component vector.
pub fn vec_norm(v: &Vec2) -> f64 {
    libm::sqrt(v[0].norm_sqr() + v[1].norm_sqr())
}

/// `a^dagger b`.
pub fn vec_inner(a: &Vec2, b: &Vec2) -> C64 {
    a[0].conj() * b[0] + a[1].conj() * b[1]
}

pub fn vec_sub(a: &Vec2, b: &Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn vec_add(a: &Vec2, b: &Vec2) -> Vec2 {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn vec_scale(s: C64, v: &Vec2) -> Vec2 {
    [s * v[0], s * v[1]]
}

/// Two-by-two complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([[ZERO, ZERO], [ZERO, ZERO]]);
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    /// Matrix with real entries.
    pub const fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2([[re(a), re(b)], [re(c), re(d)]])
    }

    pub const fn diag(a: C64, d: C64) -> Self {
        Mat2([[a, ZERO], [ZERO, d]])
    }

    pub fn scalar(s: C64) -> Self {
        Mat2::diag(s, s)
    }

    /// `a0 I + a1 s1 + a2 s2 + a3 s3`.
    pub fn from_pauli(a: [C64; 4]) -> Self {
        Mat2([
            [a[0] + a[3], a[1] - I * a[2]],
            [a[1] + I * a[2], a[0] - a[3]],
        ])
    }

    /// Coefficients `[a0, a1, a2, a3]` with `a0 = tr(M)/2`, `ak = tr(sk M)/2`.
    pub fn pauli_coefficients(&self) -> [C64; 4] {
        let m = &self.0;
        [
            (m[0][0] + m[1][1]) * 0.5,
            (m[0][1] + m[1][0]) * 0.5,
            (m[1][0] - m[0][1]) * (I * -0.5),
            (m[0][0] - m[1][1]) * 0.5,
        ]
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> C64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn dagger(&self) -> Self {
        let m = &self.0;
        Mat2([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    /// Inverse via the adjugate; `None` when the determinant vanishes exactly.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == ZERO {
            return None;
        }
        let m = &self.0;
        let r = d.inv();
        Some(Mat2([
            [m[1][1] * r, -m[0][1] * r],
            [-m[1][0] * r, m[0][0] * r],
        ]))
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.0.iter().flatten().map(|z| z.norm_sqr()).sum())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }

    /// Eigenvalues of a Hermitian matrix in ascending order. Only the
    /// Hermitian part of `self` is looked at.
    pub fn eigenvalues_hermitian(&self) -> [f64; 2] {
        let a = self.pauli_coefficients();
        let mean = a[0].re;
        let r = libm::sqrt(a[1].re * a[1].re + a[2].re * a[2].re + a[3].re * a[3].re);
        [mean - r, mean + r]
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        Mat2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl AddAssign for Mat2 {
    fn add_assign(&mut self, o: Mat2) {
        *self = *self + o;
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        Mat2([
            [a[0][0] - b[0][0], a[0][1] - b[0][1]],
            [a[1][0] - b[1][0], a[1][1] - b[1][1]],
        ])
    }
}

impl SubAssign for Mat2 {
    fn sub_assign(&mut self, o: Mat2) {
        *self = *self - o;
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self * -1.0
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        Mat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

impl Mul<C64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: C64) -> Mat2 {
        let a = &self.0;
        Mat2([[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]])
    }
}

impl Mul<Mat2> for C64 {
    type Output = Mat2;
    fn mul(self, m: Mat2) -> Mat2 {
        m * self
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: f64) -> Mat2 {
        self * re(s)
    }
}

impl Mul<Mat2> for f64 {
    type Output = Mat2;
    fn mul(self, m: Mat2) -> Mat2 {
        m * re(self)
    }
}

pub const SIGMA1: Mat2 = Mat2::real(0.0, 1.0, 1.0, 0.0);
pub const SIGMA2: Mat2 = Mat2([[ZERO, C64::new(0.0, -1.0)], [I, ZERO]]);
pub const SIGMA3: Mat2 = Mat2::real(1.0, 0.0, 0.0, -1.0);

/// The Pauli matrix `sigma_k`, `k` in `1..=3`.
pub fn pauli(k: usize) -> Result<Mat2, Error> {
    match k {
        1 => Ok(SIGMA1),
        2 => Ok(SIGMA2),
        3 => Ok(SIGMA3),
        _ => Err(Error::IndexOutOfRange {
            index: k,
            min: 1,
            max: 3,
        }),
    }
}

pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b - *b * *a
}

pub fn anticommutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b + *b * *a
}

/// Switch from the series to the closed form for `|r|` above this.
const SERIES_THRESHOLD: f64 = 1e-6;

/// Matrix exponential through the Pauli closed form
/// `e^{a0} (cosh r I + sinh(r)/r a.sigma)`, `r = sqrt(a.a)` (principal root).
///
/// The result does not depend on the branch of the root: `cosh` is even and
/// `sinh(r)/r` is even in `r`.
pub fn exp_mat2(a: &Mat2) -> Mat2 {
    let [a0, a1, a2, a3] = a.pauli_coefficients();
    let r = (a1 * a1 + a2 * a2 + a3 * a3).sqrt();
    let (ch, sh_over_r) = cosh_sinhc(r);
    let body = Mat2::from_pauli([ch, a1 * sh_over_r, a2 * sh_over_r, a3 * sh_over_r]);
    body * a0.exp()
}

/// `(cosh r, sinh(r)/r)` with a short series near the origin.
pub(crate) fn cosh_sinhc(r: C64) -> (C64, C64) {
    if r.norm() < SERIES_THRESHOLD {
        let r2 = r * r;
        (ONE + r2 * 0.5, ONE + r2 * (1.0 / 6.0))
    } else {
        (r.cosh(), r.sinh() / r)
    }
}

pub fn is_hermitian(a: &Mat2, tol: f64) -> bool {
    (*a - a.dagger()).max_norm() < tol
}

pub fn is_unitary(a: &Mat2, tol: f64) -> bool {
    (a.dagger() * *a - Mat2::IDENTITY).max_norm() < tol
}
