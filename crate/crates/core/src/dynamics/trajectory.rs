//! Expectation-value trajectories of an evolving packet.

use alloc::vec::Vec;

use super::{evolve, DiscreteOp, MomentumGrid, SpinorField};
use crate::algebra::SIGMA1;
use crate::error::Error;
use crate::kinematics::Dim;
use crate::operators::{self, DiffOp, MatrixField, PositionSign};

/// Column names, in order.
pub const COLUMNS: [&str; 7] = [
    "t",
    "x_canonical",
    "x_particle",
    "velocity",
    "norm",
    "J01_P",
    "J01_D_plus_S01_D",
];

/// Observables recorded along a trajectory, all along the first axis.
#[derive(Clone, Debug)]
pub struct TrajectoryOperators {
    pub x_canonical: DiscreteOp,
    pub x_particle: DiscreteOp,
    pub velocity: DiscreteOp,
    pub particle_moment: DiscreteOp,
    pub boost_sum: DiscreteOp,
}

impl TrajectoryOperators {
    pub fn new(grid: &MomentumGrid, m: f64) -> Result<Self, Error> {
        let dim = grid.dim();
        let x_particle = match dim {
            Dim::One => operators::particle_position_1p1(m)?,
            Dim::Two => operators::particle_position_2p1(m, 0)?,
        };
        let tab = |op: DiffOp| DiscreteOp::new(&op, grid);
        Ok(TrajectoryOperators {
            x_canonical: tab(operators::canonical_position(dim, 0, PositionSign::Plus)?)?,
            x_particle: tab(x_particle)?,
            velocity: tab(DiffOp::multiplication(dim, MatrixField::constant(SIGMA1)))?,
            particle_moment: tab(operators::particle_mass_moment(dim, 0, m)?)?,
            boost_sum: tab(operators::canonical_boost_sum(dim, 0, m)?)?,
        })
    }
}

/// Sampled expectation values, one entry per time.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Trajectory {
    pub t: Vec<f64>,
    pub x_canonical: Vec<f64>,
    pub x_particle: Vec<f64>,
    pub velocity: Vec<f64>,
    pub norm: Vec<f64>,
    pub j01_p: Vec<f64>,
    pub j01_d_plus_s01_d: Vec<f64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// Row `i` in [`COLUMNS`] order.
    pub fn row(&self, i: usize) -> [f64; 7] {
        [
            self.t[i],
            self.x_canonical[i],
            self.x_particle[i],
            self.velocity[i],
            self.norm[i],
            self.j01_p[i],
            self.j01_d_plus_s01_d[i],
        ]
    }

    pub fn push(&mut self, row: [f64; 7]) {
        self.t.push(row[0]);
        self.x_canonical.push(row[1]);
        self.x_particle.push(row[2]);
        self.velocity.push(row[3]);
        self.norm.push(row[4]);
        self.j01_p.push(row[5]);
        self.j01_d_plus_s01_d.push(row[6]);
    }
}

/// Evolves `psi0` to `steps + 1` equally spaced times in `[0, t_max]`.
///
/// Each sample is computed from `psi0` directly, so there is no
/// accumulated stepping error; the last time is exactly `t_max`.
pub fn simulate(psi0: &SpinorField, t_max: f64, steps: usize) -> Result<Trajectory, Error> {
    if steps == 0 {
        return Err(Error::TooFewSamples { needed: 2, got: 1 });
    }
    if !t_max.is_finite() || t_max <= 0.0 {
        return Err(Error::NonFinite("t_max must be positive and finite"));
    }
    let ops = TrajectoryOperators::new(psi0.grid(), psi0.mass())?;
    let mut traj = Trajectory::default();
    for j in 0..=steps {
        let t = (j as f64 / steps as f64) * t_max;
        let psi = evolve(psi0, t);
        traj.push([
            t,
            ops.x_canonical.expect(&psi)?,
            ops.x_particle.expect(&psi)?,
            ops.velocity.expect(&psi)?,
            psi.norm_sq(),
            ops.particle_moment.expect(&psi)?,
            ops.boost_sum.expect(&psi)?,
        ]);
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::super::{make_packet, WavepacketSpec};
    use super::*;
    use crate::algebra::C64;

    fn run(center: f64, w: [f64; 2]) -> Trajectory {
        let grid = MomentumGrid::new(Dim::One, 3072, 1.0).unwrap();
        let spec = WavepacketSpec {
            center: [center, 0.0],
            width: 0.05,
            x0: [0.0, 0.0],
            weights: [C64::new(w[0], 0.0), C64::new(w[1], 0.0)],
        };
        let psi = make_packet(&spec, &grid, 1.0).unwrap();
        simulate(&psi, 6.0, 64).unwrap()
    }

    fn spread(v: &[f64]) -> f64 {
        let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        hi - lo
    }

    #[test]
    fn endpoints_and_norm() {
        let tr = run(0.0, [1.0, 0.0]);
        assert_eq!(tr.len(), 65);
        assert_eq!(tr.t[0], 0.0);
        assert_eq!(tr.t[64], 6.0);
        assert!(tr.norm.iter().all(|n| (n - 1.0).abs() < 1e-12));
    }

    #[test]
    fn conservation_along_trajectories() {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let particle = run(0.3, [1.0, 0.0]);
        assert!(spread(&particle.j01_p) < 1e-8);
        assert!(spread(&particle.j01_d_plus_s01_d) < 1e-8);
        let mixed = run(0.3, [r, r]);
        assert!(spread(&mixed.j01_d_plus_s01_d) < 1e-8);
    }

    #[test]
    fn canonical_position_trembles_only_for_mixed_packets() {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let mixed = run(0.0, [r, r]);
        assert!(spread(&mixed.x_canonical) > 0.1);
        assert!(spread(&mixed.x_particle) < 1e-8);
        let pure = run(0.0, [1.0, 0.0]);
        assert!(spread(&pure.x_canonical) < 1e-8);
    }
}
