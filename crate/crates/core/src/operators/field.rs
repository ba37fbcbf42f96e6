//! Momentum-dependent matrix fields `p -> Mat2` with exact derivatives.

use alloc::sync::Arc;
use core::fmt;

use super::jet::Jet;
use crate::algebra::{Mat2, C64};
use crate::error::Error;

type FieldFn = dyn Fn(&[Jet<f64>; 2]) -> Jet<Mat2> + Send + Sync;

/// Derivative orders carried exactly by freshly built fields.
pub const BASE_ORDER: u8 = 2;

/// A matrix-valued function of momentum evaluated in jet arithmetic.
///
/// `order` counts how many derivative levels of the jet are exact. Taking a
/// partial derivative consumes one level.
#[derive(Clone)]
pub struct MatrixField {
    f: Arc<FieldFn>,
    order: u8,
    scalar: bool,
}

impl fmt::Debug for MatrixField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixField")
            .field("order", &self.order)
            .field("scalar", &self.scalar)
            .finish_non_exhaustive()
    }
}

/// Seeded momentum variables.
pub fn seed(p: [f64; 2]) -> [Jet<f64>; 2] {
    [Jet::var(p[0], 0), Jet::var(p[1], 1)]
}

impl MatrixField {
    /// General field from a jet formula.
    pub fn new(f: impl Fn(&[Jet<f64>; 2]) -> Jet<Mat2> + Send + Sync + 'static) -> Self {
        MatrixField {
            f: Arc::new(f),
            order: BASE_ORDER,
            scalar: false,
        }
    }

    /// Multiple of the identity, `c(p) I`.
    pub fn scalar(c: impl Fn(&[Jet<f64>; 2]) -> Jet<C64> + Send + Sync + 'static) -> Self {
        MatrixField {
            f: Arc::new(move |p| c(p).map(Mat2::scalar)),
            order: BASE_ORDER,
            scalar: true,
        }
    }

    /// Real scalar field times a constant matrix.
    pub fn real_times(
        c: impl Fn(&[Jet<f64>; 2]) -> Jet<f64> + Send + Sync + 'static,
        m: Mat2,
    ) -> Self {
        MatrixField::new(move |p| c(p).times(m))
    }

    pub fn constant(m: Mat2) -> Self {
        let scalar = m.0[0][1] == C64::new(0.0, 0.0)
            && m.0[1][0] == C64::new(0.0, 0.0)
            && m.0[0][0] == m.0[1][1];
        MatrixField {
            f: Arc::new(move |_| Jet::constant(m)),
            order: BASE_ORDER,
            scalar,
        }
    }

    pub fn zero() -> Self {
        MatrixField::constant(Mat2::ZERO)
    }

    /// `p_k I`, `k` in `0..2`.
    pub fn coordinate(k: usize) -> Self {
        MatrixField::scalar(move |p| p[k].complex())
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    /// True when the field is known to be a multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.scalar
    }

    pub fn jet(&self, p: [f64; 2]) -> Jet<Mat2> {
        (self.f)(&seed(p))
    }

    pub fn eval_jet(&self, p: &[Jet<f64>; 2]) -> Jet<Mat2> {
        (self.f)(p)
    }

    pub fn value(&self, p: [f64; 2]) -> Mat2 {
        self.jet(p).v
    }

    pub fn gradient(&self, p: [f64; 2]) -> Result<[Mat2; 2], Error> {
        if self.order == 0 {
            return Err(Error::DerivativeOrderExhausted);
        }
        Ok(self.jet(p).g)
    }

    /// `d/dp_k` of the field.
    pub fn partial(&self, k: usize) -> Result<MatrixField, Error> {
        if self.order == 0 {
            return Err(Error::DerivativeOrderExhausted);
        }
        let f = self.f.clone();
        Ok(MatrixField {
            f: Arc::new(move |p| f(p).partial(k)),
            order: self.order - 1,
            scalar: self.scalar,
        })
    }

    fn combine(
        &self,
        other: &MatrixField,
        scalar: bool,
        op: impl Fn(Jet<Mat2>, Jet<Mat2>) -> Jet<Mat2> + Send + Sync + 'static,
    ) -> MatrixField {
        let (a, b) = (self.f.clone(), other.f.clone());
        MatrixField {
            f: Arc::new(move |p| op(a(p), b(p))),
            order: self.order.min(other.order),
            scalar,
        }
    }

    pub fn add(&self, other: &MatrixField) -> MatrixField {
        self.combine(other, self.scalar && other.scalar, |a, b| a + b)
    }

    pub fn sub(&self, other: &MatrixField) -> MatrixField {
        self.combine(other, self.scalar && other.scalar, |a, b| a - b)
    }

    /// Pointwise product `self(p) * other(p)`.
    pub fn mul(&self, other: &MatrixField) -> MatrixField {
        self.combine(other, self.scalar && other.scalar, |a, b| a * b)
    }

    pub fn commutator(&self, other: &MatrixField) -> MatrixField {
        if self.scalar || other.scalar {
            return MatrixField {
                order: self.order.min(other.order),
                ..MatrixField::zero()
            };
        }
        self.combine(other, false, |a, b| a * b - b * a)
    }

    pub fn scale(&self, s: C64) -> MatrixField {
        let f = self.f.clone();
        MatrixField {
            f: Arc::new(move |p| f(p).map(|m| m * s)),
            order: self.order,
            scalar: self.scalar,
        }
    }

    pub fn dagger(&self) -> MatrixField {
        let f = self.f.clone();
        MatrixField {
            f: Arc::new(move |p| f(p).dagger()),
            order: self.order,
            scalar: self.scalar,
        }
    }
}
