//! The verification suites behind `diraclab verify`.
//!
//! Every check reduces an identity to a single non-negative residual. Closed
//! forms are held to `algebra_tol` (scaled where an identity is naturally
//! looser or tighter), finite-difference oracles to `grid_tol`.

use std::f64::consts::PI;

use diraclab_core::algebra::{
    anticommutator, commutator, exp_mat2, pauli, vec_norm, vec_scale, vec_sub, Mat2, Vec2, C64, I,
    SIGMA1, SIGMA2, SIGMA3,
};
use diraclab_core::dynamics::eigenspinors;
use diraclab_core::fw::{self, FwTransform};
use diraclab_core::kinematics::{boost_for, Dim, Kinematics, Metric};
use diraclab_core::numdiff::{partial4, richardson4};
use diraclab_core::operators::{self as ops, DiffOp, MatrixField, PositionSign};
use diraclab_core::spinor_1p1::{self as s1, GammaSet1p1, Representation, Species};
use diraclab_core::spinor_2p1::{self as s2, GammaSet2p1, GeneratorSet2p1, Handedness};
use diraclab_core::Error;

use crate::config::{RunConfig, Tolerances};
use crate::report::{Bound, Check, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Spinor1p1,
    Spinor2p1,
    Operators,
    Fw,
}

impl Suite {
    /// Canonical execution order.
    pub const ALL: [Suite; 5] = [
        Suite::Algebra,
        Suite::Spinor1p1,
        Suite::Spinor2p1,
        Suite::Operators,
        Suite::Fw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Spinor1p1 => "spinor1p1",
            Suite::Spinor2p1 => "spinor2p1",
            Suite::Operators => "operators",
            Suite::Fw => "fw",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s.trim())
    }

    pub fn names() -> String {
        Suite::ALL.map(Suite::name).join(", ")
    }

    /// Named suites in canonical order, or all of them for an empty list.
    /// Returns the first unknown name on failure.
    pub fn select(names: &[String]) -> Result<Vec<Suite>, String> {
        if names.is_empty() {
            return Ok(Suite::ALL.to_vec());
        }
        let mut out = Vec::new();
        for n in names {
            out.push(Suite::parse(n).ok_or_else(|| n.clone())?);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

type R = Result<f64, Error>;

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            suite: suite.name(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, anchor: &str, tol: f64, bound: Bound, r: R) {
        let c = match r {
            Ok(v) => Check::new(self.suite, name, anchor, v, tol, bound),
            Err(e) => Check::failed(self.suite, name, anchor, tol, e.to_string()),
        };
        self.checks.push(c);
    }

    fn at_most(&mut self, name: &str, anchor: &str, tol: f64, r: R) {
        self.push(name, anchor, tol, Bound::AtMost, r);
    }

    fn exceeds(&mut self, name: &str, anchor: &str, tol: f64, r: R) {
        self.push(name, anchor, tol, Bound::Exceeds, r);
    }
}

/// Largest value of `f` over `items`; NaN poisons the result.
fn max_over<T: Copy>(items: &[T], f: impl Fn(T) -> R) -> R {
    let mut worst: f64 = 0.0;
    for &x in items {
        let v = f(x)?;
        if v.is_nan() {
            return Ok(f64::NAN);
        }
        worst = worst.max(v);
    }
    Ok(worst)
}

fn min_over<T: Copy>(items: &[T], f: impl Fn(T) -> R) -> R {
    let mut best = f64::INFINITY;
    for &x in items {
        let v = f(x)?;
        if v.is_nan() {
            return Ok(f64::NAN);
        }
        best = best.min(v);
    }
    Ok(best)
}

fn dist(a: Mat2, b: Mat2) -> f64 {
    (a - b).max_norm()
}

/// 103 momenta on the line with `|p| <= 10 m`, including tiny ones.
pub fn line_samples(m: f64) -> Vec<[f64; 2]> {
    let mut v: Vec<[f64; 2]> = (0..=100)
        .map(|j| [m * (-10.0 + 0.2 * j as f64), 0.0])
        .collect();
    v.push([1e-7 * m, 0.0]);
    v.push([-1e-3 * m, 0.0]);
    v
}

/// 104 momenta in the plane: eight radii up to `r_max`, thirteen directions.
pub fn plane_samples(m: f64, r_max: f64) -> Vec<[f64; 2]> {
    let radii = [0.0, 1e-6, 5e-3, 0.03, 0.1, 0.25, 0.6, 1.0];
    let mut v = Vec::new();
    for r in radii {
        for j in 0..13 {
            let a = 0.1 + 2.0 * PI * j as f64 / 13.0;
            v.push([m * r_max * r * a.cos(), m * r_max * r * a.sin()]);
        }
    }
    v
}

fn nonzero(samples: &[[f64; 2]]) -> Vec<[f64; 2]> {
    samples
        .iter()
        .copied()
        .filter(|p| p[0] != 0.0 || p[1] != 0.0)
        .collect()
}

fn mult(dim: Dim, f: MatrixField) -> DiffOp {
    DiffOp::multiplication(dim, f)
}

fn column(v: Vec2) -> Mat2 {
    Mat2::new(v[0], C64::new(0.0, 0.0), v[1], C64::new(0.0, 0.0))
}

fn first_column(m: Mat2) -> Vec2 {
    [m.0[0][0], m.0[1][0]]
}

/// `max |{g^mu, g^nu} - 2 eta^{mu nu} I|`.
fn clifford_defect(gammas: &[Mat2], metric: &Metric) -> f64 {
    let mut worst: f64 = 0.0;
    for (mu, a) in gammas.iter().enumerate() {
        for (nu, b) in gammas.iter().enumerate() {
            let want = Mat2::IDENTITY * (2.0 * metric.eta(mu, nu));
            worst = worst.max(dist(anticommutator(a, b), want));
        }
    }
    worst
}

/// Matrix exponential by scaling, a 20-term Taylor series and squaring.
fn exp_series(a: &Mat2) -> Mat2 {
    let mut s = 0u32;
    while a.frobenius() / f64::from(1u32 << s) > 0.5 {
        s += 1;
    }
    let b = *a * (1.0 / f64::from(1u32 << s));
    let mut term = Mat2::IDENTITY;
    let mut sum = Mat2::IDENTITY;
    for k in 1..=20 {
        term = term * b * (1.0 / k as f64);
        sum += term;
    }
    for _ in 0..s {
        sum = sum * sum;
    }
    sum
}

/// Commutator by explicit index loops, independent of the `Mat2` product.
fn brute_commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..2 {
                *cell += a.0[i][k] * b.0[k][j] - b.0[i][k] * a.0[k][j];
            }
        }
    }
    Mat2(out)
}

fn test_matrices() -> Vec<Mat2> {
    let c = |re: f64, im: f64| C64::new(re, im);
    vec![
        Mat2::ZERO,
        Mat2::new(c(0.3, -1.2), c(2.0, 0.5), c(-0.7, 1.1), c(1.4, 0.2)),
        Mat2::new(c(-2.5, 0.0), c(0.0, 1.5), c(0.0, 1.5), c(2.5, 0.0)),
        Mat2::new(c(1e-8, 0.0), c(3e-9, 0.0), c(0.0, 0.0), c(0.0, -2e-8)),
        Mat2::new(c(0.0, 3.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, -3.0)),
        SIGMA1 * 2.0 + SIGMA3 * (I * 1.5),
    ]
}

pub fn algebra(tol: &Tolerances, m: f64) -> Vec<Check> {
    let a = tol.algebra_tol;
    let mut r = Recorder::new(Suite::Algebra);
    r.at_most(
        "sigma_k^2 = I",
        "Pauli matrices",
        a,
        max_over(&[1usize, 2, 3], |k| {
            let s = pauli(k)?;
            Ok(dist(s * s, Mat2::IDENTITY))
        }),
    );
    r.at_most(
        "[sigma_1, sigma_2] = 2i sigma_3 (cyclic)",
        "Pauli algebra",
        a,
        {
            let trip = [
                (SIGMA1, SIGMA2, SIGMA3),
                (SIGMA2, SIGMA3, SIGMA1),
                (SIGMA3, SIGMA1, SIGMA2),
            ];
            Ok(trip
                .iter()
                .map(|(x, y, z)| dist(commutator(x, y), *z * (I * 2.0)))
                .fold(0.0, f64::max))
        },
    );
    r.at_most(
        "exp(sigma_3 ln3/2) = diag(sqrt3, 1/sqrt3)",
        "spinor boost exponential",
        a,
        {
            let e = exp_mat2(&(SIGMA3 * (3f64.ln() / 2.0)));
            Ok(dist(
                e,
                Mat2::real(3f64.sqrt(), 0.0, 0.0, 1.0 / 3f64.sqrt()),
            ))
        },
    );
    r.at_most(
        "exp(-i sigma_2 pi/2) = [[0,-1],[1,0]]",
        "rotation exponential",
        a,
        {
            Ok(dist(
                exp_mat2(&(SIGMA2 * (-I * (PI / 2.0)))),
                Mat2::real(0.0, -1.0, 1.0, 0.0),
            ))
        },
    );
    r.at_most(
        "exp_mat2 = scaled Taylor series (relative)",
        "closed-form exponential",
        100.0 * a,
        {
            max_over(&test_matrices(), |x| {
                let e = exp_mat2(&x);
                Ok((e - exp_series(&x)).frobenius() / e.frobenius())
            })
        },
    );
    r.at_most(
        "det exp(A) = e^{tr A} (relative)",
        "closed-form exponential",
        100.0 * a,
        {
            max_over(&test_matrices(), |x| {
                let want = x.trace().exp();
                Ok((exp_mat2(&x).det() - want).norm() / want.norm())
            })
        },
    );
    r.at_most(
        "exp(A) exp(-A) = I (relative to |e^A||e^-A|)",
        "closed-form exponential",
        a,
        {
            max_over(&test_matrices(), |x| {
                let (p, q) = (exp_mat2(&x), exp_mat2(&-x));
                Ok((p * q - Mat2::IDENTITY).max_norm() / (p.frobenius() * q.frobenius()))
            })
        },
    );
    r.at_most("Pauli decomposition round trip", "Pauli basis", a, {
        max_over(&test_matrices(), |x| {
            Ok(dist(Mat2::from_pauli(x.pauli_coefficients()), x) / x.frobenius().max(1.0))
        })
    });
    let line = line_samples(m);
    let plane = plane_samples(m, 10.0);
    let kins = |dim: Dim, s: &[[f64; 2]]| -> Result<Vec<Kinematics>, Error> {
        s.iter().map(|&p| Kinematics::new(dim, m, p)).collect()
    };
    let all: Result<Vec<Kinematics>, Error> = kins(Dim::One, &line).and_then(|mut v| {
        kins(Dim::Two, &plane).map(|w| {
            v.extend(w);
            v
        })
    });
    match all {
        Ok(ks) => {
            r.at_most("p^mu p_mu = m^2 (relative)", "mass-shell Casimir", a, {
                max_over(&ks, |k| Ok((k.invariant_mass_sq() - m * m).abs() / (m * m)))
            });
            r.at_most(
                "tan(theta/2) = tanh(xi/2)",
                "rapidity and FW angle",
                0.01 * a,
                {
                    let wide: Vec<f64> = (0..=200).map(|j| m * 0.5 * j as f64).collect();
                    max_over(&wide, |p| {
                        let k = Kinematics::new_1p1(m, p)?;
                        Ok(((k.fw_angle() / 2.0).tan() - (k.rapidity() / 2.0).tanh()).abs())
                    })
                },
            );
            r.at_most(
                "Lambda^T eta Lambda = eta",
                "Lorentz boost preserves the metric",
                a,
                max_over(&ks, |k| Ok(boost_for(&k).metric_defect())),
            );
            r.at_most("Lambda k = p (relative)", "boost from rest", a, {
                max_over(&ks, |k| {
                    let lam = boost_for(&k);
                    let got = lam.apply(&[m, 0.0, 0.0]);
                    let want = k.four_momentum();
                    let n = lam.size();
                    Ok((0..n).map(|i| (got[i] - want[i]).abs()).fold(0.0, f64::max) / k.energy())
                })
            });
        }
        Err(e) => r.at_most("kinematics", "mass-shell Casimir", a, Err(e)),
    }
    r.checks
}

pub fn spinor1p1(tol: &Tolerances, m: f64) -> Vec<Check> {
    let a = tol.algebra_tol;
    let mut r = Recorder::new(Suite::Spinor1p1);
    let metric = Metric::new(Dim::One);
    for rep in [Representation::Chiral, Representation::Standard] {
        let g = GammaSet1p1::new(rep);
        let name = format!("{{g^mu, g^nu}} = 2 eta^{{mu nu}} I ({rep:?})");
        r.at_most(
            &name,
            "Clifford algebra in 1+1",
            a,
            Ok(clifford_defect(&[g.gamma0, g.gamma1], &metric)),
        );
    }
    let samples: Vec<f64> = line_samples(m).iter().map(|p| p[0]).collect();
    let kin = |p: f64| Kinematics::new_1p1(m, p);
    for (rep, state) in [
        (
            Representation::Chiral,
            s1::chiral_state as fn(&Kinematics, Species) -> s1::Spinor,
        ),
        (Representation::Standard, s1::standard_state),
    ] {
        for sp in [Species::Particle, Species::Antiparticle] {
            let name = format!("(p.gamma -+ m) psi = 0 ({rep:?}, {sp:?})");
            r.at_most(
                &name,
                "covariant Dirac equation in 1+1",
                100.0 * a,
                max_over(&samples, |p| {
                    let k = kin(p)?;
                    Ok(s1::dirac_residual(&k, &state(&k, sp)))
                }),
            );
        }
    }
    r.at_most(
        "chiral state at (m=3, p=4) = (sqrt3, 1/sqrt3)/sqrt2",
        "boosted chiral base state",
        a,
        (|| {
            let k = Kinematics::new_1p1(3.0, 4.0)?;
            let s = s1::chiral_state(&k, Species::Particle).amplitudes;
            let h = std::f64::consts::FRAC_1_SQRT_2;
            Ok(vec_norm(&vec_sub(
                &s,
                &[
                    C64::new(3f64.sqrt() * h, 0.0),
                    C64::new(h / 3f64.sqrt(), 0.0),
                ],
            )))
        })(),
    );
    r.at_most(
        "invariant products <P,P> = 1, <P,A> = 0, <A,A> = -1",
        "Lorentz-invariant scalar product",
        a,
        {
            max_over(&samples, |p| {
                let k = kin(p)?;
                let (u, v) = (
                    s1::chiral_state(&k, Species::Particle),
                    s1::chiral_state(&k, Species::Antiparticle),
                );
                let d1 = (s1::invariant_product(&u, &u)? - 1.0).norm();
                let d2 = s1::invariant_product(&u, &v)?.norm();
                let d3 = (s1::invariant_product(&v, &v)? + 1.0).norm();
                Ok(d1.max(d2).max(d3))
            })
        },
    );
    r.at_most(
        "S gamma_chiral S^-1 = gamma_standard",
        "representation switch",
        a,
        {
            let s = s1::representation_switch();
            let (c, st) = (
                GammaSet1p1::new(Representation::Chiral),
                GammaSet1p1::new(Representation::Standard),
            );
            Ok(dist(s * c.gamma0 * s, st.gamma0).max(dist(s * c.gamma1 * s, st.gamma1)))
        },
    );
    r.at_most(
        "to_standard(chiral state) = e^{sigma_1 xi/2} e",
        "standard boosted state",
        a,
        {
            max_over(&samples, |p| {
                let k = kin(p)?;
                let mut worst: f64 = 0.0;
                for sp in [Species::Particle, Species::Antiparticle] {
                    let a = s1::to_standard(&s1::chiral_state(&k, sp))?.amplitudes;
                    let b = s1::standard_state(&k, sp).amplitudes;
                    worst = worst.max(vec_norm(&vec_sub(&a, &b)) / vec_norm(&b));
                }
                Ok(worst)
            })
        },
    );
    r.at_most(
        "H psi = E psi (standard particle state)",
        "Hamiltonian eigenstate",
        a,
        {
            max_over(&samples, |p| {
                let k = kin(p)?;
                let psi = s1::standard_state(&k, Species::Particle).amplitudes;
                let hpsi = s1::hamiltonian_1p1(&k).apply(&psi);
                Ok(
                    vec_norm(&vec_sub(&hpsi, &vec_scale(C64::new(k.energy(), 0.0), &psi)))
                        / k.energy(),
                )
            })
        },
    );
    r.at_most("eigenvalues of H = -E, +E", "Hamiltonian spectrum", a, {
        max_over(&samples, |p| {
            let k = kin(p)?;
            let ev = s1::hamiltonian_1p1(&k).eigenvalues_hermitian();
            Ok(((ev[0] + k.energy()).abs()).max((ev[1] - k.energy()).abs()) / k.energy())
        })
    });
    r.at_most(
        "sigma_1 psi_c(p) = psi_c(-p)",
        "parity of chiral states",
        a,
        {
            max_over(&samples, |p| {
                let s = s1::parity_matrix(Species::Particle)
                    .apply(&s1::chiral_state(&kin(p)?, Species::Particle).amplitudes);
                let t = s1::chiral_state(&kin(-p)?, Species::Particle).amplitudes;
                Ok(vec_norm(&vec_sub(&s, &t)))
            })
        },
    );
    r.checks
}

pub fn spinor2p1(tol: &Tolerances, m: f64) -> Vec<Check> {
    let a = tol.algebra_tol;
    let mut r = Recorder::new(Suite::Spinor2p1);
    let metric = Metric::new(Dim::Two);
    for h in [Handedness::Left, Handedness::Right] {
        let g = GammaSet2p1::for_handedness(h);
        let name = format!("{{g^mu, g^nu}} = 2 eta^{{mu nu}} I ({h:?})");
        r.at_most(
            &name,
            "Clifford algebra in 2+1",
            a,
            Ok(clifford_defect(&g.gamma, &metric)),
        );
    }
    r.at_most(
        "so(2,1) commutators = brute-force table",
        "Lorentz generators in 2+1",
        0.01 * a,
        {
            let g = GeneratorSet2p1::new();
            let table = [
                (g.j01, g.j02, g.j12 * -I),
                (g.j12, g.j01, g.j02 * I),
                (g.j02, g.j12, g.j01 * I),
            ];
            Ok(table
                .iter()
                .map(|(x, y, z)| dist(brute_commutator(x, y), *z))
                .fold(0.0, f64::max))
        },
    );
    let plane = plane_samples(m, 10.0);
    for sp in [Species::Particle, Species::Antiparticle] {
        for h in [Handedness::Left, Handedness::Right] {
            let name = format!("(gamma.p -+ m) psi = 0 ({sp:?}, {h:?})");
            r.at_most(
                &name,
                "covariant Dirac equation in 2+1",
                100.0 * a,
                max_over(&plane, |p| {
                    let k = Kinematics::new_2p1(m, p)?;
                    Ok(s2::dirac_residual_2p1(&k, &s2::boost_spinor_2p1(&k, sp, h)))
                }),
            );
        }
    }
    r.at_most(
        "H psi^P = E psi^P",
        "Hamiltonian eigenstate in 2+1",
        a,
        max_over(&plane, |p| {
            let k = Kinematics::new_2p1(m, p)?;
            let psi = s2::boost_spinor_2p1(&k, Species::Particle, Handedness::Left).amplitudes;
            let hpsi = s2::hamiltonian_2p1(&k).apply(&psi);
            Ok(vec_norm(&vec_sub(&hpsi, &vec_scale(C64::new(k.energy(), 0.0), &psi))) / k.energy())
        }),
    );
    r.at_most(
        "sigma_3 e^{sigma.xi/2} sigma_3 = e^{-sigma.xi/2}",
        "left and right representations",
        a,
        {
            max_over(&plane, |p| {
                Ok(s2::handedness_equivalence(&Kinematics::new_2p1(m, p)?))
            })
        },
    );
    r.at_most(
        "exp(-i J^0k w_k + i J^12 a) = exp(sigma.w/2 + i sigma_3 a/2)",
        "finite Lorentz transformation",
        0.1 * a,
        {
            let params = [
                ([0.0, 0.0], 0.0),
                ([0.4, -1.1], 0.7),
                ([2.0, 0.5], -2.9),
                ([-0.3, 0.0], PI),
            ];
            max_over(&params, |(w, ang)| {
                Ok(dist(
                    s2::lorentz_from_generators(w, ang),
                    s2::lorentz_from_pauli(w, ang),
                ))
            })
        },
    );
    r.at_most("rotation by 2 pi = -I", "spin-1/2 double cover", a, {
        Ok(dist(
            s2::lorentz_from_pauli([0.0, 0.0], 2.0 * PI),
            -Mat2::IDENTITY,
        ))
    });
    r.at_most("rest states are parity eigenvectors", "parity in 2+1", a, {
        let mut worst: f64 = 0.0;
        for sp in [Species::Particle, Species::Antiparticle] {
            let v = s2::rest_state_2p1(sp);
            let pv = s2::parity_matrix_2p1(sp).apply(&v);
            worst = worst.max(vec_norm(&vec_sub(&pv, &v)));
        }
        Ok(worst)
    });
    r.checks
}

/// `i W (W^-1)'` by Richardson-extrapolated central differences of the
/// closed-form 1+1 FW matrix.
fn x1_matrix_part_grid(m: f64, p: f64) -> R {
    let w = fw::fw_1p1(&Kinematics::new_1p1(m, p)?)?;
    let winv = |q: f64| {
        fw::fw_1p1(&Kinematics::new_1p1(m, q).expect("valid mass"))
            .expect("1+1")
            .dagger()
    };
    let mp = w * richardson4(winv, p, 0.01 * m) * I;
    Ok(dist(mp, SIGMA2 * (-m / (2.0 * (m * m + p * p)))))
}

/// `|X^k psi^P - W^-1 i d_k (W psi^P)|`, both sides by finite differences
/// of the closed-form spinor and FW matrix.
fn xk_on_particle_grid(m: f64, k: usize, x: &DiffOp, p: [f64; 2]) -> R {
    let h = 0.01 * m;
    let psi = |q: [f64; 2]| -> Mat2 {
        let kin = Kinematics::new_2p1(m, q).expect("valid mass");
        column(s2::boost_spinor_2p1(&kin, Species::Particle, Handedness::Left).amplitudes)
    };
    let wpsi = |q: [f64; 2]| -> Mat2 {
        let kin = Kinematics::new_2p1(m, q).expect("valid mass");
        fw::fw_2p1(&kin).expect("2+1 kinematics") * psi(q)
    };
    let w = fw::fw_2p1(&Kinematics::new_2p1(m, p)?)?;
    let oracle = first_column(w.dagger() * partial4(wpsi, p, k, h) * I);
    let mut dpsi = [[C64::new(0.0, 0.0); 2]; 2];
    for (axis, d) in dpsi.iter_mut().enumerate() {
        *d = first_column(partial4(psi, p, axis, h));
    }
    let got = x.apply_at(p, 0.0, &first_column(psi(p)), &dpsi);
    Ok(vec_norm(&vec_sub(&got, &oracle)))
}

pub fn operators(tol: &Tolerances, m: f64) -> Vec<Check> {
    let a = tol.algebra_tol;
    let mut r = Recorder::new(Suite::Operators);
    let line = line_samples(m);
    let plane = plane_samples(m, 10.0);
    let one = Dim::One;
    let two = Dim::Two;

    r.at_most(
        "[x^1, p^1] = i",
        "canonical commutation in 1+1",
        a,
        (|| {
            let x = ops::canonical_position(one, 0, PositionSign::Plus)?;
            let c = x.commutator(&mult(one, ops::momentum(one, 0)?))?;
            c.distance(&mult(one, MatrixField::constant(Mat2::IDENTITY * I)), &line)
        })(),
    );
    r.at_most(
        "[x^k, p^l] = i delta_kl",
        "canonical commutation in 2+1",
        a,
        (|| {
            let mut worst: f64 = 0.0;
            for k in 0..2 {
                for l in 0..2 {
                    let x = ops::canonical_position(two, k, PositionSign::Plus)?;
                    let c = x.commutator(&mult(two, ops::momentum(two, l)?))?;
                    let want = if k == l {
                        Mat2::IDENTITY * I
                    } else {
                        Mat2::ZERO
                    };
                    worst = worst.max(c.distance(&mult(two, MatrixField::constant(want)), &plane)?);
                }
            }
            Ok(worst)
        })(),
    );
    r.at_most(
        "[X^k_N, p^l] = i delta_kl",
        "covariant position commutation",
        a,
        (|| {
            let mut worst: f64 = 0.0;
            for (dim, s) in [(one, &line), (two, &plane)] {
                for k in 0..dim.spatial() {
                    for l in 0..dim.spatial() {
                        let x = ops::covariant_position(dim, k, m)?;
                        let c = x.commutator(&mult(dim, ops::momentum(dim, l)?))?;
                        let want = if k == l {
                            Mat2::IDENTITY * I
                        } else {
                            Mat2::ZERO
                        };
                        worst = worst.max(c.distance(&mult(dim, MatrixField::constant(want)), s)?);
                    }
                }
            }
            Ok(worst)
        })(),
    );
    r.at_most(
        "X^1 = W x^1 W^-1 = x^1 - (m/2E^2) sigma_2 (closed form)",
        "particle position in 1+1",
        a,
        (|| {
            let via_fw = ops::particle_position_1p1_via_fw(m)?;
            via_fw.distance(&ops::particle_position_1p1(m)?, &line)
        })(),
    );
    r.at_most(
        "X^1 matrix part = -(m/2E^2) sigma_2 (grid oracle)",
        "particle position in 1+1",
        tol.grid_tol,
        max_over(&line, |p| x1_matrix_part_grid(m, p[0])),
    );
    r.at_most(
        "X^k = W^-1 x^k W (closed form)",
        "particle position in 2+1",
        a,
        (|| {
            let mut worst: f64 = 0.0;
            let psi = ops::particle_state(two, m)?;
            for k in 0..2 {
                let d = ops::particle_position_2p1(m, k)?
                    .sub(&ops::particle_position_2p1_via_fw(m, k)?)?;
                for &p in &plane {
                    worst = worst.max(vec_norm(&d.apply_state(p, 0.0, &psi)));
                }
            }
            Ok(worst)
        })(),
    );
    let near = plane_samples(m, 3.0);
    for k in 0..2 {
        let name = format!(
            "X^{} psi^P = W^-1 i d_{} (W psi^P) (grid oracle, |p| <= 3m)",
            k + 1,
            k + 1
        );
        r.at_most(
            &name,
            "particle position in 2+1",
            tol.grid_tol,
            (|| {
                let x = ops::particle_position_2p1(m, k)?;
                max_over(&near, |p| xk_on_particle_grid(m, k, &x, p))
            })(),
        );
    }

    let h1 = ops::hamiltonian(one, m);
    let h2 = ops::hamiltonian(two, m);
    r.at_most(
        "dH/dt = 0",
        "energy conservation",
        a,
        (|| {
            let h = h1.clone()?;
            mult(one, h.clone())
                .heisenberg_derivative(&h)?
                .distance(&DiffOp::zero(one), &line)
        })(),
    );
    r.at_most(
        "dJ01_D/dt = −p0·σ1 + p1",
        "Heisenberg equation, canonical mass moment",
        a,
        (|| {
            let d = ops::mass_moment_dirac_1p1(m)?.heisenberg_derivative(&h1.clone()?)?;
            d.distance(&ops::dirac_moment_rate_1p1(m)?, &line)
        })(),
    );
    r.exceeds(
        "|(dJ01_D/dt) psi(p)| / |p| on particle states",
        "canonical mass moment is not conserved",
        0.1,
        (|| {
            let d = ops::mass_moment_dirac_1p1(m)?.heisenberg_derivative(&h1.clone()?)?;
            let psi = ops::particle_state(one, m)?;
            min_over(&nonzero(&line), |p| {
                Ok(vec_norm(&d.apply_state(p, 0.0, &psi)) / p[0].abs())
            })
        })(),
    );
    r.at_most(
        "dJ01_P/dt = -p1 p0 H/E^2 + p1",
        "Heisenberg equation, particle mass moment",
        a,
        (|| {
            let d = ops::mass_moment_particle_1p1(m)?.heisenberg_derivative(&h1.clone()?)?;
            let h = h1.clone()?;
            let e = ops::energy(one, m)?;
            let p = ops::momentum(one, 0)?;
            let einv2 = MatrixField::scalar(move |q| {
                let e = ops::energy_jet(one, m, q);
                (e * e).recip().complex()
            });
            let want = p
                .mul(&e)
                .mul(&h)
                .mul(&einv2)
                .scale(C64::new(-1.0, 0.0))
                .add(&p);
            d.distance(&mult(one, want), &line)
        })(),
    );
    r.at_most(
        "(dJ01_P/dt) psi(p) = 0",
        "particle mass moment is conserved on particle states",
        100.0 * a,
        (|| {
            let c = ops::conservation_check(
                "J01_P",
                &ops::mass_moment_particle_1p1(m)?,
                &h1.clone()?,
                &ops::particle_state(one, m)?,
                &line,
                0.0,
                100.0 * a,
            )?;
            Ok(c.max_residual)
        })(),
    );
    r.at_most(
        "[S01_D, H] = i p0 sigma_1 - i p1",
        "spin-like boost term",
        a,
        (|| {
            let h = h1.clone()?;
            let s = mult(one, MatrixField::constant(ops::spin_like_boost_1p1()));
            let c = s.commutator(&mult(one, h.clone()))?;
            let want = MatrixField::constant(SIGMA1 * I)
                .mul(&h)
                .sub(&ops::momentum(one, 0)?.scale(I));
            c.distance(&mult(one, want), &line)
        })(),
    );
    let s: Vec<f64> = line.iter().map(|p| p[0]).collect();
    r.at_most(
        "d(J01_D + S01_D)/dt = 0",
        "conserved boost generator in 1+1",
        a,
        ops::boost_sum_identity_1p1(m, &s),
    );
    r.at_most(
        "J01_D + S01_D = X0_N p1 - X1_N p0 on particle states",
        "covariant mass moment",
        100.0 * a,
        (|| {
            let d = ops::boost_sum_1p1(m)?.sub(&ops::mass_moment_covariant_1p1(m)?)?;
            let psi = ops::particle_state(one, m)?;
            max_over(&line, |p| Ok(vec_norm(&d.apply_state(p, 0.0, &psi))))
        })(),
    );

    let am = ops::angular_momenta_2p1(m);
    r.at_most(
        "[J12_D, H] = 0",
        "total angular momentum in 2+1",
        a,
        (|| {
            let am = am.clone()?;
            am.j_d
                .commutator(&mult(two, h2.clone()?))?
                .distance(&DiffOp::zero(two), &plane)
        })(),
    );
    r.at_most(
        "[L12_D, H] = i sigma_1 p2 - i sigma_2 p1",
        "orbital angular momentum in 2+1",
        a,
        (|| {
            let am = am.clone()?;
            am.l_d
                .commutator(&mult(two, h2.clone()?))?
                .distance(&ops::orbital_commutator_2p1()?, &plane)
        })(),
    );
    r.at_most(
        "[S12_D, H] = -i sigma_1 p2 + i sigma_2 p1",
        "spin in 2+1",
        a,
        (|| {
            let am = am.clone()?;
            let want = ops::orbital_commutator_2p1()?.scale(C64::new(-1.0, 0.0));
            am.s_d
                .commutator(&mult(two, h2.clone()?))?
                .distance(&want, &plane)
        })(),
    );
    let psi2 = ops::particle_state(two, m);
    for (name, pick) in [
        ("(dL12/dt) psi^P = 0", 0usize),
        ("(dS12/dt) psi^P = 0", 1),
        ("(dJ12/dt) psi^P = 0", 2),
    ] {
        r.at_most(
            name,
            "particle angular momenta are conserved separately",
            100.0 * a,
            (|| {
                let am = am.clone()?;
                let op = [&am.l, &am.s, &am.j][pick];
                Ok(ops::conservation_check(
                    name,
                    op,
                    &h2.clone()?,
                    &psi2.clone()?,
                    &plane,
                    0.0,
                    100.0 * a,
                )?
                .max_residual)
            })(),
        );
    }
    r.at_most(
        "(J12 - J12_D) psi^P = 0",
        "particle and canonical total angular momentum agree",
        100.0 * a,
        (|| {
            let am = am.clone()?;
            let psi = psi2.clone()?;
            let d = am.j.sub(&am.j_d)?;
            max_over(&plane, |p| Ok(vec_norm(&d.apply_state(p, 0.0, &psi))))
        })(),
    );
    r.at_most(
        "S12 psi^P = psi^P / 2",
        "particle spin",
        100.0 * a,
        (|| {
            let am = am.clone()?;
            let psi = psi2.clone()?;
            max_over(&plane, |p| {
                let v = psi.value(p);
                Ok(vec_norm(&vec_sub(
                    &am.s.apply_state(p, 0.0, &psi),
                    &vec_scale(C64::new(0.5, 0.0), &v),
                )))
            })
        })(),
    );
    let mm = ops::mass_moment_2p1(m);
    for k in 0..2 {
        r.at_most(
            &format!("d(J0{}_c + S0{}_c)/dt = 0", k + 1, k + 1),
            "conserved boost generator in 2+1",
            a,
            (|| {
                let mm = mm.clone()?;
                let sum = mm.j0k[k].add(&mm.s0k[k])?;
                sum.heisenberg_derivative(&h2.clone()?)?
                    .distance(&DiffOp::zero(two), &plane)
            })(),
        );
        r.exceeds(
            &format!("|(dJ0{}_c/dt) psi^P| for p != 0", k + 1),
            "canonical mass moment alone is not conserved",
            tol.conservation_tol,
            (|| {
                let mm = mm.clone()?;
                let d = mm.j0k[k].heisenberg_derivative(&h2.clone()?)?;
                let psi = psi2.clone()?;
                min_over(&nonzero(&plane), |p| {
                    Ok(vec_norm(&d.apply_state(p, 0.0, &psi)))
                })
            })(),
        );
        r.at_most(
            &format!("(dJ0{}_P/dt) psi^P = 0", k + 1),
            "particle mass moment in 2+1",
            100.0 * a,
            (|| {
                let op = ops::particle_mass_moment(two, k, m)?;
                Ok(ops::conservation_check(
                    "J0k_P",
                    &op,
                    &h2.clone()?,
                    &psi2.clone()?,
                    &plane,
                    0.0,
                    100.0 * a,
                )?
                .max_residual)
            })(),
        );
    }
    r.checks
}

pub fn fw_suite(tol: &Tolerances, m: f64) -> Vec<Check> {
    let a = tol.algebra_tol;
    let mut r = Recorder::new(Suite::Fw);
    let line = line_samples(m);
    let plane = plane_samples(m, 10.0);
    for (dim, s) in [(Dim::One, &line), (Dim::Two, &plane)] {
        let name = format!("W^-1 H W = E sigma_3 ({}+1)", dim.spatial());
        r.at_most(
            &name,
            "Foldy-Wouthuysen diagonalization",
            a,
            (|| {
                let t = FwTransform::new(dim, m)?;
                max_over(s, |p| t.diagonalization_defect(p))
            })(),
        );
    }
    r.at_most(
        "W^dagger W = I (2+1)",
        "unitary FW matrix",
        a,
        max_over(&plane, |p| {
            Ok(fw::unitarity_defect(&fw::fw_2p1(&Kinematics::new_2p1(
                m, p,
            )?)?))
        }),
    );
    r.at_most(
        "closed form = exp(sigma_1 sigma_3 theta/2) (1+1)",
        "FW matrix as an exponential",
        0.1 * a,
        max_over(&line, |p| {
            let k = Kinematics::new_1p1(m, p[0])?;
            Ok(dist(fw::fw_1p1(&k)?, fw::fw_1p1_exp(&k)?))
        }),
    );
    r.at_most(
        "(E+m+sigma_3 sigma.p)/sqrt(2E(E+m)) = exp(sigma_3 sigma.p_hat theta/2)",
        "FW matrix as an exponential",
        0.1 * a,
        max_over(&plane, |p| {
            let k = Kinematics::new_2p1(m, p)?;
            Ok(dist(fw::fw_2p1(&k)?, fw::fw_2p1_exp(&k)?))
        }),
    );
    r.at_most(
        "det W = 1",
        "FW matrix is a rotation",
        0.1 * a,
        (|| {
            let d1 = max_over(&line, |p| {
                Ok((fw::fw_1p1(&Kinematics::new_1p1(m, p[0])?)?.det() - 1.0).norm())
            })?;
            let d2 = max_over(&plane, |p| {
                Ok((fw::fw_2p1(&Kinematics::new_2p1(m, p)?)?.det() - 1.0).norm())
            })?;
            Ok(d1.max(d2))
        })(),
    );
    r.at_most(
        "W_1+1(p) = W_2+1(p, 0)^dagger",
        "FW matrices agree on the axis",
        a,
        max_over(&line, |p| {
            let w1 = fw::fw_1p1(&Kinematics::new_1p1(m, p[0])?)?;
            let w2 = fw::fw_2p1(&Kinematics::new_2p1(m, p)?)?;
            Ok(dist(w1, w2.dagger()))
        }),
    );
    for (dim, s) in [(Dim::One, &line), (Dim::Two, &plane)] {
        let name = format!(
            "e^{{sigma xi/2}} P+ v = sqrt(E/m) R(theta) P+ v ({}+1)",
            dim.spatial()
        );
        r.at_most(
            &name,
            "projective boost-rotation identity",
            a,
            max_over(s, |p| {
                Ok(fw::projective_boost_identity(&Kinematics::new(dim, m, p)?).residual)
            }),
        );
    }
    r.at_most(
        "W^-1 (sigma_3/2) W u+ = u+/2",
        "particle spin from the FW transform",
        a,
        max_over(&plane, |p| {
            let w = fw::fw_2p1(&Kinematics::new_2p1(m, p)?)?;
            let s = w.dagger() * SIGMA3 * 0.5 * w;
            let u = eigenspinors(m, p)[0];
            Ok(vec_norm(&vec_sub(
                &s.apply(&u),
                &vec_scale(C64::new(0.5, 0.0), &u),
            )))
        }),
    );
    r.checks
}

/// Runs the selected suites in canonical order.
pub fn run_verify(cfg: &RunConfig) -> Result<VerificationReport, crate::error::CliError> {
    let tol = &cfg.tolerances;
    let m = cfg.mass;
    let mut checks = Vec::new();
    for s in cfg.selected_suites()? {
        checks.extend(match s {
            Suite::Algebra => algebra(tol, m),
            Suite::Spinor1p1 => spinor1p1(tol, m),
            Suite::Spinor2p1 => spinor2p1(tol, m),
            Suite::Operators => operators(tol, m),
            Suite::Fw => fw_suite(tol, m),
        });
    }
    Ok(VerificationReport::new(checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_selection_is_canonical() {
        let names = vec!["fw".to_string(), "algebra".to_string(), "fw".to_string()];
        assert_eq!(
            Suite::select(&names).unwrap(),
            vec![Suite::Algebra, Suite::Fw]
        );
        assert_eq!(Suite::select(&[]).unwrap(), Suite::ALL.to_vec());
        assert_eq!(Suite::select(&["nope".to_string()]).unwrap_err(), "nope");
    }

    #[test]
    fn sample_sets() {
        let l = line_samples(2.0);
        assert!(l.len() >= 100 && l.iter().all(|p| p[0].abs() <= 20.0 + 1e-12));
        let p = plane_samples(1.0, 10.0);
        assert!(p.len() >= 100 && p.iter().all(|q| q[0].hypot(q[1]) <= 10.0 + 1e-12));
    }

    #[test]
    fn series_oracle_is_accurate() {
        let x = SIGMA1 * 3.0;
        let want = Mat2::real(3f64.cosh(), 3f64.sinh(), 3f64.sinh(), 3f64.cosh());
        assert!((exp_series(&x) - want).max_norm() < 1e-12 * 3f64.cosh());
    }
}
