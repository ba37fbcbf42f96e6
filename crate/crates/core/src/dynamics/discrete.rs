//! Operators tabulated on a grid.

use alloc::vec::Vec;

use super::{map_nodes, MomentumGrid, SpinorField};
use crate::algebra::{vec_add, vec_inner, Mat2, Vec2, C64};
use crate::error::Error;
use crate::numdiff::{grid_derivative, STENCIL};
use crate::operators::DiffOp;

/// A [`DiffOp`] with every coefficient evaluated at the grid nodes.
#[derive(Clone, Debug)]
pub struct DiscreteOp {
    grid: MomentumGrid,
    time: Vec<Vec<Mat2>>,
    grad: [Option<Vec<Mat2>>; 2],
}

impl DiscreteOp {
    pub fn new(op: &DiffOp, grid: &MomentumGrid) -> Result<Self, Error> {
        if op.dim() != grid.dim() {
            return Err(Error::DimensionMismatch);
        }
        if op.has_gradient() && grid.n() < STENCIL {
            return Err(Error::StencilExceedsGrid {
                needed: STENCIL,
                available: grid.n(),
            });
        }
        let tabulate = |f: &crate::operators::MatrixField| {
            map_nodes(grid.len(), |idx| f.value(grid.point(idx)))
        };
        let time = (0..=op.time_degree())
            .map(|j| tabulate(op.time_coefficient(j).expect("degree in range")))
            .collect();
        let grad = [
            op.grad_coeff(0).map(tabulate),
            op.grad_coeff(1).map(tabulate),
        ];
        Ok(DiscreteOp {
            grid: *grid,
            time,
            grad,
        })
    }

    fn derivative(&self, psi: &SpinorField, idx: usize, k: usize) -> Result<Vec2, Error> {
        let g = &self.grid;
        let stride = g.stride(k);
        let a = g.indices(idx)[k];
        let base = idx - a * stride;
        let amps = psi.amplitudes();
        let comp =
            |c: usize| grid_derivative(|j| amps[base + j * stride][c], g.n(), a, g.spacing());
        Ok([comp(0)?, comp(1)?])
    }

    /// `(O psi)` at node `idx` and time `t`.
    fn apply_node(&self, psi: &SpinorField, idx: usize, t: f64) -> Result<Vec2, Error> {
        let mut m = Mat2::ZERO;
        let mut tj = 1.0;
        for coeffs in &self.time {
            m += coeffs[idx] * tj;
            tj *= t;
        }
        let mut out = m.apply(&psi.amplitudes()[idx]);
        for k in 0..2 {
            if let Some(g) = &self.grad[k] {
                let d = self.derivative(psi, idx, k)?;
                out = vec_add(&out, &g[idx].apply(&d));
            }
        }
        Ok(out)
    }

    /// `O psi` on every node, at the field's time.
    pub fn apply(&self, psi: &SpinorField) -> Result<Vec<Vec2>, Error> {
        if psi.grid() != &self.grid {
            return Err(Error::InvalidGrid("operator and field use different grids"));
        }
        map_nodes(self.grid.len(), |idx| self.apply_node(psi, idx, psi.time()))
            .into_iter()
            .collect()
    }

    /// `Re sum_nodes w psi^dagger (O psi)`.
    pub fn expect(&self, psi: &SpinorField) -> Result<f64, Error> {
        let o = self.apply(psi)?;
        let mut acc = 0.0;
        for (idx, (a, b)) in psi.amplitudes().iter().zip(&o).enumerate() {
            let v: C64 = vec_inner(a, b);
            acc += self.grid.weight(idx) * v.re;
        }
        Ok(acc)
    }
}

/// `<psi| O |psi>` by trapezoid quadrature.
pub fn expect(psi: &SpinorField, op: &DiffOp) -> Result<f64, Error> {
    DiscreteOp::new(op, psi.grid())?.expect(psi)
}
