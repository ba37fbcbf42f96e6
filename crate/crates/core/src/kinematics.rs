//! On-shell kinematics in natural units (`c = hbar = 1`).
//!
//! Two boost parameters appear throughout and are kept apart:
//!
//! * the rapidity `xi`, with `tanh xi = |p|/E` (equivalently
//!   `tanh(xi/2) = |p|/(E+m)`), which drives the spinor boosts;
//! * the Foldy-Wouthuysen angle `theta`, with `tan theta = |p|/m`, which
//!   drives the unitary FW rotations. They are linked by
//!   `tan(theta/2) = tanh(xi/2)`.

use crate::error::Error;

/// Number of spatial dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    /// 1+1 spacetime.
    One,
    /// 2+1 spacetime.
    Two,
}

impl Dim {
    pub fn spatial(self) -> usize {
        match self {
            Dim::One => 1,
            Dim::Two => 2,
        }
    }

    pub fn from_spatial(n: usize) -> Result<Dim, Error> {
        match n {
            1 => Ok(Dim::One),
            2 => Ok(Dim::Two),
            _ => Err(Error::IndexOutOfRange {
                index: n,
                min: 1,
                max: 2,
            }),
        }
    }
}

/// Mass, momentum and everything derived from them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Kinematics {
    mass: f64,
    p: [f64; 2],
    dim: Dim,
}

impl Kinematics {
    pub fn new(dim: Dim, mass: f64, p: [f64; 2]) -> Result<Self, Error> {
        if !mass.is_finite() {
            return Err(Error::NonFinite("mass"));
        }
        if mass <= 0.0 {
            return Err(Error::NonPositiveMass(mass));
        }
        if !p.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("momentum"));
        }
        let p = match dim {
            Dim::One => [p[0], 0.0],
            Dim::Two => p,
        };
        Ok(Kinematics { mass, p, dim })
    }

    pub fn new_1p1(mass: f64, p1: f64) -> Result<Self, Error> {
        Self::new(Dim::One, mass, [p1, 0.0])
    }

    pub fn new_2p1(mass: f64, p: [f64; 2]) -> Result<Self, Error> {
        Self::new(Dim::Two, mass, p)
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Spatial momentum; the second slot is zero in 1+1.
    pub fn momentum(&self) -> [f64; 2] {
        self.p
    }

    pub fn p_abs(&self) -> f64 {
        libm::hypot(self.p[0], self.p[1])
    }

    pub fn energy(&self) -> f64 {
        libm::sqrt(self.mass * self.mass + self.p[0] * self.p[0] + self.p[1] * self.p[1])
    }

    /// `(E, p1[, p2])` padded to three slots.
    pub fn four_momentum(&self) -> [f64; 3] {
        [self.energy(), self.p[0], self.p[1]]
    }

    /// `p^mu p_mu`; equals `m^2` on shell.
    pub fn invariant_mass_sq(&self) -> f64 {
        let e = self.energy();
        e * e - self.p[0] * self.p[0] - self.p[1] * self.p[1]
    }

    /// Full rapidity `xi >= 0`, `tanh xi = |p|/E`.
    pub fn rapidity(&self) -> f64 {
        libm::asinh(self.p_abs() / self.mass)
    }

    /// Rapidity carrying the sign of `p1` (1+1 spinor exponents).
    pub fn signed_rapidity(&self) -> f64 {
        libm::asinh(self.p[0] / self.mass)
    }

    /// FW angle `theta` in `[0, pi/2)`, `tan theta = |p|/m`.
    pub fn fw_angle(&self) -> f64 {
        libm::atan2(self.p_abs(), self.mass)
    }

    /// FW angle carrying the sign of `p1`.
    pub fn signed_fw_angle(&self) -> f64 {
        libm::atan2(self.p[0], self.mass)
    }

    /// Unit vector along the momentum, `None` at rest.
    pub fn direction(&self) -> Option<[f64; 2]> {
        let a = self.p_abs();
        if a == 0.0 {
            None
        } else {
            Some([self.p[0] / a, self.p[1] / a])
        }
    }

    /// Direction with an explicit fallback used at `p = 0`.
    pub fn direction_or(&self, at_rest: [f64; 2]) -> [f64; 2] {
        self.direction().unwrap_or(at_rest)
    }

    /// `xi * p_hat`, zero at rest.
    pub fn rapidity_vector(&self) -> [f64; 2] {
        let d = self.direction_or([1.0, 0.0]);
        let xi = self.rapidity();
        [xi * d[0], xi * d[1]]
    }

    /// `cosh(xi/2) = sqrt((E+m)/2m)`.
    pub fn cosh_half_rapidity(&self) -> f64 {
        libm::sqrt((self.energy() + self.mass) / (2.0 * self.mass))
    }

    /// `sinh(xi/2)/|p| = 1/sqrt(2m(E+m))`, finite at rest.
    pub fn sinh_half_rapidity_per_p(&self) -> f64 {
        1.0 / libm::sqrt(2.0 * self.mass * (self.energy() + self.mass))
    }

    /// `cos(theta/2) = sqrt((E+m)/2E)`.
    pub fn cos_half_fw(&self) -> f64 {
        let e = self.energy();
        libm::sqrt((e + self.mass) / (2.0 * e))
    }

    /// `sin(theta/2)/|p| = 1/sqrt(2E(E+m))`, finite at rest.
    pub fn sin_half_fw_per_p(&self) -> f64 {
        let e = self.energy();
        1.0 / libm::sqrt(2.0 * e * (e + self.mass))
    }
}

fn dim_of(p: &[f64]) -> Result<Dim, Error> {
    if p.is_empty() || p.len() > 2 {
        return Err(Error::DimensionMismatch);
    }
    Dim::from_spatial(p.len())
}

fn kin(m: f64, p: &[f64]) -> Result<Kinematics, Error> {
    let dim = dim_of(p)?;
    let mut arr = [0.0; 2];
    arr[..p.len()].copy_from_slice(p);
    Kinematics::new(dim, m, arr)
}

/// `sqrt(m^2 + |p|^2)`; `p` has one or two components.
pub fn energy(m: f64, p: &[f64]) -> Result<f64, Error> {
    Ok(kin(m, p)?.energy())
}

/// Full rapidity `ln((E + |p|)/m)`.
pub fn rapidity(m: f64, p: &[f64]) -> Result<f64, Error> {
    Ok(kin(m, p)?.rapidity())
}

/// FW angle `atan2(|p|, m)`.
pub fn fw_angle(m: f64, p: &[f64]) -> Result<f64, Error> {
    Ok(kin(m, p)?.fw_angle())
}

/// Minkowski metric `diag(+,-[,-])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Metric {
    dim: Dim,
}

impl Metric {
    pub fn new(dim: Dim) -> Self {
        Metric { dim }
    }

    pub fn size(&self) -> usize {
        self.dim.spatial() + 1
    }

    /// `eta^{mu nu}` (equal to `eta_{mu nu}`).
    pub fn eta(&self, mu: usize, nu: usize) -> f64 {
        match (mu == nu, mu) {
            (false, _) => 0.0,
            (true, 0) => 1.0,
            (true, _) => -1.0,
        }
    }
}

/// Vector-representation boost taking `k = (m, 0[, 0])` to `(E, p)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Boost {
    OnePlusOne([[f64; 2]; 2]),
    TwoPlusOne([[f64; 3]; 3]),
}

impl Boost {
    pub fn size(&self) -> usize {
        match self {
            Boost::OnePlusOne(_) => 2,
            Boost::TwoPlusOne(_) => 3,
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        match self {
            Boost::OnePlusOne(m) => m[row][col],
            Boost::TwoPlusOne(m) => m[row][col],
        }
    }

    pub fn apply(&self, v: &[f64]) -> [f64; 3] {
        let n = self.size();
        let mut out = [0.0; 3];
        for (r, o) in out.iter_mut().enumerate().take(n) {
            *o = (0..n).map(|c| self.entry(r, c) * v[c]).sum();
        }
        out
    }

    /// Largest entry of `Lambda^T eta Lambda - eta`.
    pub fn metric_defect(&self) -> f64 {
        let n = self.size();
        let metric = Metric::new(if n == 2 { Dim::One } else { Dim::Two });
        let mut worst: f64 = 0.0;
        for r in 0..n {
            for s in 0..n {
                let v: f64 = (0..n)
                    .map(|mu| metric.eta(mu, mu) * self.entry(mu, r) * self.entry(mu, s))
                    .sum();
                worst = worst.max((v - metric.eta(r, s)).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        match self {
            Boost::OnePlusOne(m) => m[0][0] * m[1][1] - m[0][1] * m[1][0],
            Boost::TwoPlusOne(m) => {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
        }
    }
}

/// Pure boost from rest to momentum `p` (one or two components).
pub fn boost_vector(m: f64, p: &[f64]) -> Result<Boost, Error> {
    Ok(boost_for(&kin(m, p)?))
}

pub fn boost_for(k: &Kinematics) -> Boost {
    let m = k.mass();
    let e = k.energy();
    let p = k.momentum();
    match k.dim() {
        Dim::One => Boost::OnePlusOne([[e / m, p[0] / m], [p[0] / m, e / m]]),
        Dim::Two => {
            let c = 1.0 / (m * (e + m));
            Boost::TwoPlusOne([
                [e / m, p[0] / m, p[1] / m],
                [p[0] / m, 1.0 + p[0] * p[0] * c, p[0] * p[1] * c],
                [p[1] / m, p[0] * p[1] * c, 1.0 + p[1] * p[1] * c],
            ])
        }
    }
}
