use diraclab_core::algebra::{vec_inner, C64};
use diraclab_core::dynamics::{
    self, evolve, expect, make_packet, DiscreteOp, MomentumGrid, SpinorField, WavepacketSpec,
};
use diraclab_core::kinematics::Dim;
use diraclab_core::operators::{
    angular_momenta_2p1, canonical_position, particle_position_1p1, particle_position_2p1, DiffOp,
    PositionSign,
};

const M: f64 = 1.0;

fn spec(center: [f64; 2], width: f64, x0: [f64; 2], weights: [C64; 2]) -> WavepacketSpec {
    WavepacketSpec {
        center,
        width,
        x0,
        weights,
    }
}

fn pure() -> [C64; 2] {
    [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]
}

fn mixed(phase: f64) -> [C64; 2] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [C64::new(r, 0.0), C64::from_polar(r, phase)]
}

fn inner(a: &SpinorField, b: &[[C64; 2]]) -> C64 {
    let g = a.grid();
    a.amplitudes()
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (u, v))| vec_inner(u, v) * g.weight(i))
        .sum()
}

fn assert_hermitian(op: &DiffOp, phi: &SpinorField, psi: &SpinorField, tol: f64) {
    let d = DiscreteOp::new(op, phi.grid()).unwrap();
    let a = inner(phi, &d.apply(psi).unwrap());
    let b = inner(psi, &d.apply(phi).unwrap()).conj();
    assert!((a - b).norm() <= tol, "{a} vs {b}");
}

#[test]
fn particle_position_is_hermitian_1p1() {
    let g = MomentumGrid::new(Dim::One, 2048, 1.0).unwrap();
    let phi = make_packet(&spec([0.1, 0.0], 0.05, [2.0, 0.0], mixed(0.4)), &g, M).unwrap();
    let psi = make_packet(&spec([-0.05, 0.0], 0.04, [-1.0, 0.0], pure()), &g, M).unwrap();
    assert_hermitian(&particle_position_1p1(M).unwrap(), &phi, &psi, 1e-8);
}

#[test]
fn particle_position_is_hermitian_2p1() {
    let g = MomentumGrid::new(Dim::Two, 128, 1.0).unwrap();
    let phi = make_packet(&spec([0.2, -0.1], 0.06, [1.0, -2.0], pure()), &g, M).unwrap();
    let psi = make_packet(&spec([-0.1, 0.15], 0.05, [0.5, 1.0], pure()), &g, M).unwrap();
    for k in 0..2 {
        assert_hermitian(&particle_position_2p1(M, k).unwrap(), &phi, &psi, 1e-8);
    }
}

#[test]
fn canonical_commutator_on_grid_state() {
    let g = MomentumGrid::new(Dim::One, 4096, 1.0).unwrap();
    let psi = make_packet(&spec([0.05, 0.0], 0.05, [3.0, 0.0], mixed(1.0)), &g, M).unwrap();
    let x = DiscreteOp::new(
        &canonical_position(Dim::One, 0, PositionSign::Plus).unwrap(),
        &g,
    )
    .unwrap();
    let times_p = |f: &SpinorField, amps: Vec<[C64; 2]>| {
        let scaled = amps
            .iter()
            .enumerate()
            .map(|(i, a)| [a[0] * g.node(i), a[1] * g.node(i)])
            .collect();
        SpinorField::new(g, M, f.time(), scaled).unwrap()
    };
    let xp = x.apply(&times_p(&psi, psi.amplitudes().to_vec())).unwrap();
    let px = times_p(&psi, x.apply(&psi).unwrap());
    let mut err = 0.0;
    for (i, ((a, b), s)) in xp
        .iter()
        .zip(px.amplitudes())
        .zip(psi.amplitudes())
        .enumerate()
    {
        for c in 0..2 {
            err += g.weight(i) * (a[c] - b[c] - C64::new(0.0, 1.0) * s[c]).norm_sqr();
        }
    }
    assert!(err.sqrt() <= 1e-6, "{}", err.sqrt());
}

#[test]
fn total_and_particle_orbital_momentum_conserved_2p1() {
    let am = angular_momenta_2p1(M).unwrap();
    let ops = [&am.j_d, &am.l];
    let drift = |n: usize| {
        let g = MomentumGrid::new(Dim::Two, n, 1.0).unwrap();
        let psi0 = make_packet(&spec([0.3, 0.0], 0.06, [0.0, 2.0], mixed(0.0)), &g, M).unwrap();
        let j0 = expect(&psi0, &am.j).unwrap();
        let jd0 = expect(&psi0, &am.j_d).unwrap();
        assert!((j0 - jd0).abs() <= 1e-12, "J12 {j0} vs J12_D {jd0}");
        let psi = evolve(&psi0, 10.0);
        ops.map(|o| (expect(&psi, o).unwrap() - expect(&psi0, o).unwrap()).abs())
    };
    let (coarse, fine) = (drift(96), drift(192));
    for k in 0..2 {
        assert!(
            fine[k] <= 1e-5 && coarse[k] >= 12.0 * fine[k],
            "{k}: {} -> {}",
            coarse[k],
            fine[k]
        );
    }
}

#[test]
fn canonical_orbital_momentum_trembles_2p1() {
    let g = MomentumGrid::new(Dim::Two, 96, 1.0).unwrap();
    let am = angular_momenta_2p1(M).unwrap();
    let mut psi = make_packet(&spec([0.3, 0.0], 0.06, [0.0, 2.0], mixed(0.0)), &g, M).unwrap();
    let l0 = expect(&psi, &am.l_d).unwrap();
    let mut swing: f64 = 0.0;
    for _ in 0..8 {
        psi = evolve(&psi, 0.4);
        swing = swing.max((expect(&psi, &am.l_d).unwrap() - l0).abs());
    }
    assert!(swing > 1e-3, "{swing}");
}

/// `<p/E>` under `|g|^2`, by fine trapezoid quadrature.
fn mean_velocity(center: f64, width: f64) -> f64 {
    let n = 200_000;
    let lo = center - 12.0 * width;
    let h = 24.0 * width / n as f64;
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..=n {
        let p = lo + i as f64 * h;
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        let g2 = (-(p - center).powi(2) / (2.0 * width * width)).exp() * w;
        num += g2 * p / (M * M + p * p).sqrt();
        den += g2;
    }
    num / den
}

#[test]
fn particle_position_drifts_at_group_velocity() {
    let (center, width, x0) = (0.2, 0.05, -4.0);
    let v = mean_velocity(center, width);
    let error = |n: usize| {
        let g = MomentumGrid::new(Dim::One, n, 1.0).unwrap();
        let psi = make_packet(&spec([center, 0.0], width, [x0, 0.0], pure()), &g, M).unwrap();
        let traj = dynamics::simulate(&psi, 32.0, 64).unwrap();
        let mut worst: f64 = 0.0;
        for i in 0..traj.len() {
            worst = worst.max((traj.x_particle[i] - x0 - v * traj.t[i]).abs());
            assert!((traj.x_canonical[i] - traj.x_particle[i]).abs() <= 1e-12);
        }
        worst
    };
    let (coarse, fine) = (error(1024), error(2048));
    assert!(fine <= 1e-7 && coarse >= 12.0 * fine, "{coarse} -> {fine}");
}

#[test]
fn particle_trajectory_ignores_relative_phase() {
    let gap = |n: usize| {
        let g = MomentumGrid::new(Dim::One, n, 1.0).unwrap();
        let run = |w| {
            dynamics::simulate(
                &make_packet(&spec([0.0; 2], 0.05, [0.0; 2], w), &g, M).unwrap(),
                20.0,
                80,
            )
            .unwrap()
        };
        let a = run(mixed(0.0));
        let b = run(mixed(1.3));
        let rot = C64::from_polar(1.0, 0.7);
        let global = run([mixed(0.0)[0] * rot, mixed(0.0)[1] * rot]);
        let (mut particle, mut canonical): (f64, f64) = (0.0, 0.0);
        for i in 0..a.len() {
            assert!((a.norm[i] - b.norm[i]).abs() <= 1e-12);
            for (x, y) in a.row(i).iter().zip(global.row(i)) {
                assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
            }
            particle = particle.max((a.x_particle[i] - b.x_particle[i]).abs());
            canonical = canonical.max((a.x_canonical[i] - b.x_canonical[i]).abs());
        }
        (particle, canonical)
    };
    let ((coarse, _), (fine, canonical)) = (gap(1024), gap(2048));
    assert!(fine <= 1e-8 && coarse >= 12.0 * fine, "{coarse} -> {fine}");
    assert!(canonical > 0.1, "{canonical}");
}

#[test]
fn grid_refinement_converges_at_fourth_order() {
    let at_end = |n: usize| {
        let g = MomentumGrid::new(Dim::One, n, 1.0).unwrap();
        let psi = make_packet(&spec([0.1, 0.0], 0.05, [1.0, 0.0], mixed(0.3)), &g, M).unwrap();
        let traj = dynamics::simulate(&psi, 16.0, 32).unwrap();
        let last = traj.len() - 1;
        [
            traj.x_canonical[last],
            traj.x_particle[last],
            traj.j01_p[last],
        ]
    };
    let (a, b, c) = (at_end(512), at_end(1024), at_end(2048));
    for k in 0..3 {
        let coarse = (a[k] - b[k]).abs();
        let fine = (b[k] - c[k]).abs();
        assert!(fine <= 1e-6, "{k}: {fine}");
        assert!(
            fine <= 1e-13 || coarse >= 12.0 * fine,
            "{k}: {coarse} -> {fine}"
        );
    }
}
