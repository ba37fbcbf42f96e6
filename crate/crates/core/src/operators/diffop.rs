//! First-order differential operators in momentum space.

use alloc::vec::Vec;

use super::field::MatrixField;
use super::jet::Jet;
use crate::algebra::{vec_add, Mat2, Vec2, C64, I, ZERO};
use crate::error::Error;
use crate::kinematics::Dim;

/// `O = sum_j t^j M_j(p) + sum_k G_k(p) d/dp^k`.
///
/// `M_0` is the matrix part, `M_1` the explicit time part. Gradient
/// coefficients are matrix fields; most operators use multiples of the
/// identity, flagged by [`MatrixField::is_scalar`].
#[derive(Clone, Debug)]
pub struct DiffOp {
    dim: Dim,
    time: Vec<MatrixField>,
    grad: [Option<MatrixField>; 2],
}

/// A spinor-valued function of momentum with exact derivatives.
///
/// Stored as the first column of a matrix field.
#[derive(Clone, Debug)]
pub struct StateField(MatrixField);

fn column(a: Jet<C64>, b: Jet<C64>) -> Jet<Mat2> {
    let e11 = Jet::constant(Mat2::new(C64::new(1.0, 0.0), ZERO, ZERO, ZERO));
    let e21 = Jet::constant(Mat2::new(ZERO, ZERO, C64::new(1.0, 0.0), ZERO));
    a * e11 + b * e21
}

fn first_column(m: &Mat2) -> Vec2 {
    [m.0[0][0], m.0[1][0]]
}

impl StateField {
    pub fn new(f: impl Fn(&[Jet<f64>; 2]) -> [Jet<C64>; 2] + Send + Sync + 'static) -> Self {
        StateField(MatrixField::new(move |p| {
            let [a, b] = f(p);
            column(a, b)
        }))
    }

    /// `M(p) v` for a constant spinor `v`.
    pub fn from_matrix(m: &MatrixField, v: Vec2) -> Self {
        let col = Mat2::new(v[0], ZERO, v[1], ZERO);
        StateField(m.mul(&MatrixField::constant(col)))
    }

    pub fn value(&self, p: [f64; 2]) -> Vec2 {
        first_column(&self.0.value(p))
    }

    /// Value and first derivatives.
    pub fn jet(&self, p: [f64; 2]) -> (Vec2, [Vec2; 2]) {
        let j = self.0.jet(p);
        (
            first_column(&j.v),
            [first_column(&j.g[0]), first_column(&j.g[1])],
        )
    }

    pub fn as_field(&self) -> &MatrixField {
        &self.0
    }

    /// `F(p) psi(p)`.
    pub fn left_multiply(&self, f: &MatrixField) -> StateField {
        StateField(f.mul(&self.0))
    }
}

fn add_opt(a: &Option<MatrixField>, b: &Option<MatrixField>) -> Option<MatrixField> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.add(b)),
        (Some(a), None) => Some(a.clone()),
        (None, Some(b)) => Some(b.clone()),
        (None, None) => None,
    }
}

fn accumulate(slot: &mut Option<MatrixField>, f: MatrixField) {
    *slot = Some(match slot.take() {
        Some(g) => g.add(&f),
        None => f,
    });
}

fn add_time(time: &mut Vec<MatrixField>, j: usize, f: MatrixField) {
    while time.len() <= j {
        time.push(MatrixField::zero());
    }
    time[j] = time[j].add(&f);
}

impl DiffOp {
    pub fn zero(dim: Dim) -> Self {
        DiffOp {
            dim,
            time: alloc::vec![MatrixField::zero()],
            grad: [None, None],
        }
    }

    /// Multiplication by a matrix field.
    pub fn multiplication(dim: Dim, f: MatrixField) -> Self {
        DiffOp {
            dim,
            time: alloc::vec![f],
            grad: [None, None],
        }
    }

    /// `coeff(p) d/dp^k`.
    pub fn gradient(dim: Dim, k: usize, coeff: MatrixField) -> Result<Self, Error> {
        let n = dim.spatial();
        if k >= n {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 0,
                max: n - 1,
            });
        }
        let mut op = DiffOp::zero(dim);
        op.grad[k] = Some(coeff);
        Ok(op)
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn matrix_part(&self) -> &MatrixField {
        &self.time[0]
    }

    /// Coefficient of `t^j`; `None` beyond the stored degree.
    pub fn time_coefficient(&self, j: usize) -> Option<&MatrixField> {
        self.time.get(j)
    }

    pub fn time_degree(&self) -> usize {
        self.time.len() - 1
    }

    pub fn grad_coeff(&self, k: usize) -> Option<&MatrixField> {
        self.grad.get(k).and_then(|g| g.as_ref())
    }

    pub fn has_gradient(&self) -> bool {
        self.grad.iter().any(|g| g.is_some())
    }

    /// True when every gradient coefficient is a multiple of the identity.
    pub fn scalar_gradient(&self) -> bool {
        self.grad.iter().flatten().all(|g| g.is_scalar())
    }

    fn check_dim(&self, other: &DiffOp) -> Result<(), Error> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch)
        }
    }

    pub fn add(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.check_dim(other)?;
        let mut time = self.time.clone();
        for (j, f) in other.time.iter().enumerate() {
            add_time(&mut time, j, f.clone());
        }
        Ok(DiffOp {
            dim: self.dim,
            time,
            grad: [
                add_opt(&self.grad[0], &other.grad[0]),
                add_opt(&self.grad[1], &other.grad[1]),
            ],
        })
    }

    pub fn sub(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C64) -> DiffOp {
        DiffOp {
            dim: self.dim,
            time: self.time.iter().map(|f| f.scale(s)).collect(),
            grad: [
                self.grad[0].as_ref().map(|g| g.scale(s)),
                self.grad[1].as_ref().map(|g| g.scale(s)),
            ],
        }
    }

    /// Adds the explicit time dependence `t F(p)`.
    pub fn plus_time(&self, f: MatrixField) -> DiffOp {
        let mut out = self.clone();
        add_time(&mut out.time, 1, f);
        out
    }

    /// `F(p) O`.
    pub fn left_multiply(&self, f: &MatrixField) -> DiffOp {
        DiffOp {
            dim: self.dim,
            time: self.time.iter().map(|m| f.mul(m)).collect(),
            grad: [
                self.grad[0].as_ref().map(|g| f.mul(g)),
                self.grad[1].as_ref().map(|g| f.mul(g)),
            ],
        }
    }

    /// `O F(p)`: the operator applied after multiplication by `F`.
    pub fn compose_field(&self, f: &MatrixField) -> Result<DiffOp, Error> {
        let mut time: Vec<MatrixField> = self.time.iter().map(|m| m.mul(f)).collect();
        let mut grad = [None, None];
        for k in 0..2 {
            if let Some(g) = &self.grad[k] {
                time[0] = time[0].add(&g.mul(&f.partial(k)?));
                grad[k] = Some(g.mul(f));
            }
        }
        Ok(DiffOp {
            dim: self.dim,
            time,
            grad,
        })
    }

    /// `L O R` with `R = L^-1` pointwise; scalar gradients stay scalar.
    pub fn conjugate(&self, left: &MatrixField, right: &MatrixField) -> Result<DiffOp, Error> {
        let mut time: Vec<MatrixField> = self.time.iter().map(|m| left.mul(m).mul(right)).collect();
        let mut grad = [None, None];
        for k in 0..2 {
            if let Some(g) = &self.grad[k] {
                time[0] = time[0].add(&left.mul(g).mul(&right.partial(k)?));
                grad[k] = Some(if g.is_scalar() {
                    g.clone()
                } else {
                    left.mul(g).mul(right)
                });
            }
        }
        Ok(DiffOp {
            dim: self.dim,
            time,
            grad,
        })
    }

    /// Closed-form commutator `[self, other]`.
    ///
    /// Fails with [`Error::NonClosingCommutator`] when the result would
    /// leave the first-order, time-independent-gradient class.
    pub fn commutator(&self, other: &DiffOp) -> Result<DiffOp, Error> {
        self.check_dim(other)?;
        let (a, b) = (self, other);
        let a_ns = !a.scalar_gradient();
        let b_ns = !b.scalar_gradient();
        if a.has_gradient() && b.has_gradient() && (a_ns || b_ns) {
            return Err(Error::NonClosingCommutator);
        }
        if (a_ns && b.time.len() > 1) || (b_ns && a.time.len() > 1) {
            return Err(Error::NonClosingCommutator);
        }
        let mut time = alloc::vec![MatrixField::zero()];
        let mut grad: [Option<MatrixField>; 2] = [None, None];
        for (i, m) in a.time.iter().enumerate() {
            for (j, n) in b.time.iter().enumerate() {
                add_time(&mut time, i + j, m.commutator(n));
            }
        }
        for k in 0..2 {
            if let Some(g) = &a.grad[k] {
                for (j, n) in b.time.iter().enumerate() {
                    add_time(&mut time, j, g.mul(&n.partial(k)?));
                }
                if a_ns {
                    accumulate(&mut grad[k], g.commutator(&b.time[0]));
                }
            }
            if let Some(f) = &b.grad[k] {
                for (i, m) in a.time.iter().enumerate() {
                    add_time(
                        &mut time,
                        i,
                        f.mul(&m.partial(k)?).scale(C64::new(-1.0, 0.0)),
                    );
                }
                if b_ns {
                    accumulate(&mut grad[k], a.time[0].commutator(f));
                }
            }
        }
        if a.has_gradient() && b.has_gradient() {
            for k in 0..2 {
                for l in 0..2 {
                    if let (Some(g), Some(f)) = (&a.grad[l], &b.grad[k]) {
                        accumulate(&mut grad[k], g.mul(&f.partial(l)?));
                    }
                    if let (Some(f), Some(g)) = (&b.grad[l], &a.grad[k]) {
                        accumulate(
                            &mut grad[k],
                            f.mul(&g.partial(l)?).scale(C64::new(-1.0, 0.0)),
                        );
                    }
                }
            }
        }
        Ok(DiffOp {
            dim: self.dim,
            time,
            grad,
        })
    }

    /// Explicit time derivative `sum_j j t^(j-1) M_j`.
    pub fn explicit_time_derivative(&self) -> DiffOp {
        let mut time: Vec<MatrixField> = self
            .time
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, m)| m.scale(C64::new(j as f64, 0.0)))
            .collect();
        if time.is_empty() {
            time.push(MatrixField::zero());
        }
        DiffOp {
            dim: self.dim,
            time,
            grad: [None, None],
        }
    }

    /// Heisenberg derivative `-i[O, H] + dO/dt` for a Hamiltonian field.
    pub fn heisenberg_derivative(&self, h: &MatrixField) -> Result<DiffOp, Error> {
        let hop = DiffOp::multiplication(self.dim, h.clone());
        self.commutator(&hop)?
            .scale(-I)
            .add(&self.explicit_time_derivative())
    }

    /// Total matrix part `sum_j t^j M_j(p)`.
    pub fn matrix_at(&self, p: [f64; 2], t: f64) -> Mat2 {
        let mut acc = Mat2::ZERO;
        let mut tj = 1.0;
        for m in &self.time {
            acc += m.value(p) * tj;
            tj *= t;
        }
        acc
    }

    /// Gradient coefficient values at `p` (zero where absent).
    pub fn grad_at(&self, p: [f64; 2]) -> [Mat2; 2] {
        let g = |k: usize| self.grad[k].as_ref().map_or(Mat2::ZERO, |g| g.value(p));
        [g(0), g(1)]
    }

    /// `(O psi)(p)` from the value and gradient of `psi` at `p`.
    pub fn apply_at(&self, p: [f64; 2], t: f64, psi: &Vec2, dpsi: &[Vec2; 2]) -> Vec2 {
        let mut out = self.matrix_at(p, t).apply(psi);
        let g = self.grad_at(p);
        for k in 0..self.dim.spatial() {
            if self.grad[k].is_some() {
                out = vec_add(&out, &g[k].apply(&dpsi[k]));
            }
        }
        out
    }

    /// `(O psi)(p)` with exact derivatives of the state.
    pub fn apply_state(&self, p: [f64; 2], t: f64, psi: &StateField) -> Vec2 {
        let (v, d) = psi.jet(p);
        self.apply_at(p, t, &v, &d)
    }

    /// Largest entry over all coefficient matrices at `p`.
    pub fn coefficient_norm(&self, p: [f64; 2]) -> f64 {
        let mut n: f64 = 0.0;
        for m in &self.time {
            n = n.max(m.value(p).max_norm());
        }
        for g in self.grad.iter().flatten() {
            n = n.max(g.value(p).max_norm());
        }
        n
    }

    /// Operator-level distance: max coefficient norm of `self - other`
    /// over the sample momenta.
    pub fn distance(&self, other: &DiffOp, samples: &[[f64; 2]]) -> Result<f64, Error> {
        let d = self.sub(other)?;
        Ok(samples
            .iter()
            .map(|&p| d.coefficient_norm(p))
            .fold(0.0, f64::max))
    }
}
