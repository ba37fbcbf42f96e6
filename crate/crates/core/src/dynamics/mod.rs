//! Free time evolution of spinor wavepackets on a momentum grid.
//!
//! Evolution is exact per node, `psi(p, t) = exp(-i H(p) t) psi(p, 0)`.
//! Expectation values use trapezoid quadrature and fourth-order grid
//! derivatives. Per-node work may run in parallel (feature `parallel`);
//! every reduction is a sequential sum in node order, so results are
//! bit-identical for any thread count.

mod discrete;
mod trajectory;
mod zbw;

use alloc::vec::Vec;

pub use discrete::{expect, DiscreteOp};
pub use trajectory::{simulate, Trajectory, TrajectoryOperators, COLUMNS};
pub use zbw::{zbw_analysis, ZbwAnalysis, MIN_SAMPLES};

use crate::algebra::{exp_mat2, vec_add, vec_scale, Mat2, Vec2, C64, I, SIGMA1, SIGMA2, SIGMA3};
use crate::error::Error;
use crate::kinematics::Dim;

/// Smallest number of nodes per axis.
pub const MIN_NODES: usize = 16;
/// Largest boundary-to-peak amplitude ratio a packet may have.
pub const LEAK_RATIO: f64 = 1e-10;

#[cfg(feature = "parallel")]
pub(crate) fn map_nodes<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_nodes<T>(n: usize, f: impl Fn(usize) -> T) -> Vec<T> {
    (0..n).map(f).collect()
}

/// Uniform grid symmetric about zero, `n` nodes per axis on `[-p_max, p_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumGrid {
    dim: Dim,
    n: usize,
    p_max: f64,
    dp: f64,
}

impl MomentumGrid {
    pub fn new(dim: Dim, n: usize, p_max: f64) -> Result<Self, Error> {
        if n < MIN_NODES {
            return Err(Error::InvalidGrid("fewer than 16 nodes per axis"));
        }
        if !p_max.is_finite() || p_max <= 0.0 {
            return Err(Error::InvalidGrid("p_max must be positive and finite"));
        }
        Ok(MomentumGrid {
            dim,
            n,
            p_max,
            dp: 2.0 * p_max / (n - 1) as f64,
        })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    /// Nodes per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn spacing(&self) -> f64 {
        self.dp
    }

    /// Total number of nodes.
    pub fn len(&self) -> usize {
        match self.dim {
            Dim::One => self.n,
            Dim::Two => self.n * self.n,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coordinate of node `i` along an axis; exactly antisymmetric in `i`.
    pub fn node(&self, i: usize) -> f64 {
        let half = (self.n - 1) as f64 * 0.5;
        (i as f64 - half) * self.dp
    }

    /// Axis indices of flat node `idx` (row-major, `p^1` slowest).
    pub fn indices(&self, idx: usize) -> [usize; 2] {
        match self.dim {
            Dim::One => [idx, 0],
            Dim::Two => [idx / self.n, idx % self.n],
        }
    }

    /// Flat stride along axis `k`.
    pub fn stride(&self, k: usize) -> usize {
        match (self.dim, k) {
            (Dim::Two, 0) => self.n,
            _ => 1,
        }
    }

    pub fn point(&self, idx: usize) -> [f64; 2] {
        let [i, j] = self.indices(idx);
        match self.dim {
            Dim::One => [self.node(i), 0.0],
            Dim::Two => [self.node(i), self.node(j)],
        }
    }

    fn axis_weight(&self, i: usize) -> f64 {
        if i == 0 || i == self.n - 1 {
            0.5 * self.dp
        } else {
            self.dp
        }
    }

    /// Trapezoid weight of flat node `idx`.
    pub fn weight(&self, idx: usize) -> f64 {
        let [i, j] = self.indices(idx);
        match self.dim {
            Dim::One => self.axis_weight(i),
            Dim::Two => self.axis_weight(i) * self.axis_weight(j),
        }
    }

    /// True if `idx` lies on the outer edge of the grid.
    pub fn on_boundary(&self, idx: usize) -> bool {
        let [i, j] = self.indices(idx);
        let edge = |a: usize| a == 0 || a == self.n - 1;
        match self.dim {
            Dim::One => edge(i),
            Dim::Two => edge(i) || edge(j),
        }
    }
}

/// Two-component amplitudes on every grid node at time `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorField {
    grid: MomentumGrid,
    mass: f64,
    t: f64,
    amps: Vec<Vec2>,
}

impl SpinorField {
    pub fn new(grid: MomentumGrid, mass: f64, t: f64, amps: Vec<Vec2>) -> Result<Self, Error> {
        if amps.len() != grid.len() {
            return Err(Error::InvalidGrid(
                "amplitude count does not match the grid",
            ));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        Ok(SpinorField {
            grid,
            mass,
            t,
            amps,
        })
    }

    pub fn grid(&self) -> &MomentumGrid {
        &self.grid
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn amplitudes(&self) -> &[Vec2] {
        &self.amps
    }

    /// `sum_nodes w |psi|^2`.
    pub fn norm_sq(&self) -> f64 {
        let mut acc = 0.0;
        for (idx, a) in self.amps.iter().enumerate() {
            acc += self.grid.weight(idx) * (a[0].norm_sqr() + a[1].norm_sqr());
        }
        acc
    }

    /// Largest boundary amplitude and largest amplitude overall.
    pub fn boundary_and_peak(&self) -> (f64, f64) {
        let mut peak: f64 = 0.0;
        let mut edge: f64 = 0.0;
        for (idx, a) in self.amps.iter().enumerate() {
            let v = libm::sqrt(a[0].norm_sqr() + a[1].norm_sqr());
            peak = peak.max(v);
            if self.grid.on_boundary(idx) {
                edge = edge.max(v);
            }
        }
        (edge, peak)
    }
}

/// Gaussian packet over the energy eigenspinors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WavepacketSpec {
    pub center: [f64; 2],
    /// Momentum width `sigma_p` of `|g|^2`.
    pub width: f64,
    /// Initial position offset.
    pub x0: [f64; 2],
    /// Weights on the positive and negative energy eigenspinors.
    pub weights: [C64; 2],
}

impl WavepacketSpec {
    pub fn validate(&self, grid: &MomentumGrid) -> Result<(), Error> {
        let finite = self
            .center
            .iter()
            .chain(self.x0.iter())
            .all(|v| v.is_finite())
            && self.width.is_finite()
            && self
                .weights
                .iter()
                .all(|w| w.re.is_finite() && w.im.is_finite());
        if !finite {
            return Err(Error::NonFinite("wavepacket parameter"));
        }
        if self.width <= 0.0 {
            return Err(Error::InvalidPacket("width must be positive"));
        }
        let total = self.weights[0].norm_sqr() + self.weights[1].norm_sqr();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidPacket(
                "energy weights must satisfy |w+|^2 + |w-|^2 = 1",
            ));
        }
        for k in 0..grid.dim().spatial() {
            if self.center[k].abs() + 3.0 * self.width > grid.p_max() {
                return Err(Error::InvalidPacket(
                    "center +- 3 width must lie inside the grid",
                ));
            }
        }
        Ok(())
    }
}

/// Orthonormal eigenspinors `u+`, `u-` of `H(p)`, smooth in `p`.
///
/// They are the columns of the FW matrix, with the upper component of
/// `u+` and the lower component of `u-` real and positive.
pub fn eigenspinors(m: f64, p: [f64; 2]) -> [Vec2; 2] {
    let e = libm::sqrt(m * m + p[0] * p[0] + p[1] * p[1]);
    let n = 1.0 / libm::sqrt(2.0 * e * (e + m));
    let a = C64::new((e + m) * n, 0.0);
    let plus = C64::new(p[0] * n, p[1] * n);
    let minus = C64::new(-p[0] * n, p[1] * n);
    [[a, plus], [minus, a]]
}

/// Builds `psi(p) = g(p) (w+ u+ + w- u-)` normalized to one.
pub fn make_packet(
    spec: &WavepacketSpec,
    grid: &MomentumGrid,
    mass: f64,
) -> Result<SpinorField, Error> {
    if !(mass.is_finite() && mass > 0.0) {
        return Err(Error::NonPositiveMass(mass));
    }
    spec.validate(grid)?;
    let dim = grid.dim();
    let amps = map_nodes(grid.len(), |idx| {
        let mut p = grid.point(idx);
        if dim == Dim::One {
            p[1] = 0.0;
        }
        let mut d2 = 0.0;
        let mut phase = 0.0;
        for k in 0..dim.spatial() {
            let d = p[k] - spec.center[k];
            d2 += d * d;
            phase -= spec.x0[k] * p[k];
        }
        let env = libm::exp(-d2 / (4.0 * spec.width * spec.width));
        let g = C64::new(env * libm::cos(phase), env * libm::sin(phase));
        let [up, um] = eigenspinors(mass, p);
        let mix = vec_add(
            &vec_scale(spec.weights[0], &up),
            &vec_scale(spec.weights[1], &um),
        );
        vec_scale(g, &mix)
    });
    let raw = SpinorField::new(*grid, mass, 0.0, amps)?;
    let norm = libm::sqrt(raw.norm_sq());
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::InvalidPacket("packet has no weight on the grid"));
    }
    let (boundary, peak) = raw.boundary_and_peak();
    if boundary >= LEAK_RATIO * peak {
        return Err(Error::PacketLeaks { boundary, peak });
    }
    let s = C64::new(1.0 / norm, 0.0);
    let amps = raw.amps.iter().map(|a| vec_scale(s, a)).collect();
    SpinorField::new(*grid, mass, 0.0, amps)
}

/// Hamiltonian matrix at a grid point.
pub fn hamiltonian_at(dim: Dim, m: f64, p: [f64; 2]) -> Mat2 {
    let h = SIGMA1 * p[0] + SIGMA3 * m;
    match dim {
        Dim::One => h,
        Dim::Two => h + SIGMA2 * p[1],
    }
}

/// Evolves by `dt`: `psi(p) -> exp(-i H(p) dt) psi(p)` on every node.
pub fn evolve(psi: &SpinorField, dt: f64) -> SpinorField {
    let grid = psi.grid;
    let m = psi.mass;
    let amps = map_nodes(grid.len(), |idx| {
        let h = hamiltonian_at(grid.dim(), m, grid.point(idx));
        exp_mat2(&(h * (-I * dt))).apply(&psi.amps[idx])
    });
    SpinorField {
        grid,
        mass: m,
        t: psi.t + dt,
        amps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vec_norm;

    fn grid1(n: usize) -> MomentumGrid {
        MomentumGrid::new(Dim::One, n, 1.0).unwrap()
    }

    fn mixed() -> WavepacketSpec {
        let w = C64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        WavepacketSpec {
            center: [0.0, 0.0],
            width: 0.05,
            x0: [0.0, 0.0],
            weights: [w, w],
        }
    }

    #[test]
    fn grid_is_symmetric() {
        let g = grid1(17);
        for i in 0..17 {
            assert_eq!(g.node(i), -g.node(16 - i));
        }
        assert_eq!(g.node(0), -1.0);
        assert_eq!(g.node(8), 0.0);
        assert!(MomentumGrid::new(Dim::One, 15, 1.0).is_err());
        assert!(MomentumGrid::new(Dim::Two, 16, 0.0).is_err());
    }

    #[test]
    fn two_dimensional_indexing() {
        let g = MomentumGrid::new(Dim::Two, 16, 2.0).unwrap();
        assert_eq!(g.len(), 256);
        let p = g.point(16 * 3 + 5);
        assert_eq!(p, [g.node(3), g.node(5)]);
        assert_eq!(g.stride(0), 16);
        let total: f64 = (0..g.len()).map(|i| g.weight(i)).sum();
        assert!((total - 16.0).abs() < 1e-12);
    }

    #[test]
    fn packet_is_normalized() {
        let psi = make_packet(&mixed(), &grid1(512), 1.0).unwrap();
        assert!((psi.norm_sq() - 1.0).abs() < 1e-12);
        let rest = eigenspinors(1.0, [0.0, 0.0]);
        assert_eq!(rest[0], [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
    }

    #[test]
    fn eigenspinors_are_orthonormal_eigenvectors() {
        for p in [[0.3, 0.0], [-2.0, 1.5], [0.0, -4.0]] {
            let [up, um] = eigenspinors(1.3, p);
            let h = hamiltonian_at(Dim::Two, 1.3, p);
            let e = (1.69 + p[0] * p[0] + p[1] * p[1]).sqrt();
            let r = crate::algebra::vec_sub(&h.apply(&up), &vec_scale(C64::new(e, 0.0), &up));
            assert!(vec_norm(&r) < 1e-14);
            let r = crate::algebra::vec_sub(&h.apply(&um), &vec_scale(C64::new(-e, 0.0), &um));
            assert!(vec_norm(&r) < 1e-14);
            assert!(crate::algebra::vec_inner(&up, &um).norm() < 1e-15);
        }
    }

    #[test]
    fn packet_precondition_errors() {
        let mut s = mixed();
        s.width = 0.4;
        assert!(matches!(
            make_packet(&s, &grid1(64), 1.0),
            Err(Error::InvalidPacket(_))
        ));
        s.width = 0.3;
        assert!(matches!(
            make_packet(&s, &grid1(64), 1.0),
            Err(Error::PacketLeaks { .. })
        ));
        let mut s = mixed();
        s.weights = [C64::new(1.0, 0.0), C64::new(1.0, 0.0)];
        assert!(make_packet(&s, &grid1(64), 1.0).is_err());
        assert!(make_packet(&mixed(), &grid1(64), -1.0).is_err());
    }

    #[test]
    fn two_level_evolution() {
        let g = grid1(17);
        let mut amps = alloc::vec![[C64::new(0.0, 0.0); 2]; 17];
        let r = core::f64::consts::FRAC_1_SQRT_2;
        amps[8] = [C64::new(r, 0.0), C64::new(r, 0.0)];
        let psi = SpinorField::new(g, 1.0, 0.0, amps).unwrap();
        let t = 0.8;
        let out = evolve(&psi, t);
        let a = out.amplitudes()[8];
        assert!((a[0] - C64::new(libm::cos(t), -libm::sin(t)) * r).norm() < 1e-15);
        assert!((a[1] - C64::new(libm::cos(t), libm::sin(t)) * r).norm() < 1e-15);
        assert_eq!(evolve(&psi, 0.0).amplitudes(), psi.amplitudes());
    }

    #[test]
    fn evolution_group_property() {
        let psi = make_packet(&mixed(), &grid1(128), 1.0).unwrap();
        let a = evolve(&evolve(&psi, 0.7), 1.9);
        let b = evolve(&psi, 2.6);
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            assert!((x[0] - y[0]).norm() + (x[1] - y[1]).norm() < 1e-12);
        }
        assert!((a.norm_sq() - 1.0).abs() < 1e-12);
        assert!((a.time() - 2.6).abs() < 1e-15);
    }
}
