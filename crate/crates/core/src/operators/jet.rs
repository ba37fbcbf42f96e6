//! Second-order Taylor jets in the two momentum components.
//!
//! A `Jet<T>` carries a value together with its exact gradient and Hessian.
//! Matrix fields are written once in jet arithmetic and yield their
//! derivatives for free; the product rule is applied to second order.

use core::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Mat2, C64};

/// Values a jet can carry.
pub trait JetValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
}

impl JetValue for f64 {
    fn zero() -> Self {
        0.0
    }
}

impl JetValue for C64 {
    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }
}

impl JetValue for Mat2 {
    fn zero() -> Self {
        Mat2::ZERO
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<T> {
    pub v: T,
    pub g: [T; 2],
    pub h: [[T; 2]; 2],
}

impl<T: JetValue> Jet<T> {
    pub fn constant(v: T) -> Self {
        let z = T::zero();
        Jet {
            v,
            g: [z; 2],
            h: [[z; 2]; 2],
        }
    }

    /// First derivatives become values, second become first; the new
    /// second-order slots are unknown and set to zero.
    pub fn partial(&self, k: usize) -> Self {
        let z = T::zero();
        Jet {
            v: self.g[k],
            g: self.h[k],
            h: [[z; 2]; 2],
        }
    }

    pub fn map<U: JetValue>(&self, f: impl Fn(T) -> U) -> Jet<U> {
        Jet {
            v: f(self.v),
            g: [f(self.g[0]), f(self.g[1])],
            h: [
                [f(self.h[0][0]), f(self.h[0][1])],
                [f(self.h[1][0]), f(self.h[1][1])],
            ],
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|x| x * s)
    }
}

impl Jet<f64> {
    /// Independent variable `p_axis` evaluated at `x`.
    pub fn var(x: f64, axis: usize) -> Self {
        let mut j = Jet::constant(x);
        j.g[axis] = 1.0;
        j
    }

    /// `f(self)` given `f`, `f'`, `f''` at the value.
    pub fn chain(&self, f: f64, df: f64, d2f: f64) -> Self {
        let mut out = Jet::constant(f);
        for k in 0..2 {
            out.g[k] = df * self.g[k];
            for l in 0..2 {
                out.h[k][l] = d2f * self.g[k] * self.g[l] + df * self.h[k][l];
            }
        }
        out
    }

    pub fn sqrt(&self) -> Self {
        let s = libm::sqrt(self.v);
        self.chain(s, 0.5 / s, -0.25 / (s * self.v))
    }

    pub fn exp(&self) -> Self {
        let e = libm::exp(self.v);
        self.chain(e, e, e)
    }

    pub fn recip(&self) -> Self {
        let r = 1.0 / self.v;
        self.chain(r, -r * r, 2.0 * r * r * r)
    }

    pub fn powi(&self, n: i32) -> Self {
        let x = self.v;
        let f = libm::pow(x, f64::from(n));
        let df = f64::from(n) * libm::pow(x, f64::from(n - 1));
        let d2f = f64::from(n) * f64::from(n - 1) * libm::pow(x, f64::from(n - 2));
        self.chain(f, df, d2f)
    }

    /// Promote to a matrix jet `self * m` with a constant matrix.
    pub fn times(&self, m: Mat2) -> Jet<Mat2> {
        self.map(|x| m * x)
    }

    pub fn complex(&self) -> Jet<C64> {
        self.map(|x| C64::new(x, 0.0))
    }
}

impl Jet<Mat2> {
    pub fn dagger(&self) -> Self {
        self.map(|m| m.dagger())
    }
}

/// Second-order product rule for any bilinear `*`.
fn product<A, B, C>(a: &Jet<A>, b: &Jet<B>) -> Jet<C>
where
    A: JetValue + Mul<B, Output = C>,
    B: JetValue,
    C: JetValue,
{
    let mut out = Jet::constant(a.v * b.v);
    for k in 0..2 {
        out.g[k] = a.g[k] * b.v + a.v * b.g[k];
        for l in 0..2 {
            out.h[k][l] = a.h[k][l] * b.v + a.g[k] * b.g[l] + a.g[l] * b.g[k] + a.v * b.h[k][l];
        }
    }
    out
}

macro_rules! jet_mul {
    ($a:ty, $b:ty, $c:ty) => {
        impl Mul<Jet<$b>> for Jet<$a> {
            type Output = Jet<$c>;
            fn mul(self, o: Jet<$b>) -> Jet<$c> {
                product(&self, &o)
            }
        }
    };
}

jet_mul!(f64, f64, f64);
jet_mul!(Mat2, Mat2, Mat2);
jet_mul!(C64, Mat2, Mat2);
jet_mul!(C64, C64, C64);

impl Mul<Jet<Mat2>> for Jet<f64> {
    type Output = Jet<Mat2>;
    fn mul(self, o: Jet<Mat2>) -> Jet<Mat2> {
        product(&o, &self)
    }
}

impl<T: JetValue> Add for Jet<T> {
    type Output = Jet<T>;
    fn add(self, o: Jet<T>) -> Jet<T> {
        Jet {
            v: self.v + o.v,
            g: [self.g[0] + o.g[0], self.g[1] + o.g[1]],
            h: [
                [self.h[0][0] + o.h[0][0], self.h[0][1] + o.h[0][1]],
                [self.h[1][0] + o.h[1][0], self.h[1][1] + o.h[1][1]],
            ],
        }
    }
}

impl<T: JetValue> Sub for Jet<T> {
    type Output = Jet<T>;
    fn sub(self, o: Jet<T>) -> Jet<T> {
        self + o.scale(-1.0)
    }
}

impl<T: JetValue> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        self.scale(-1.0)
    }
}

impl Add<f64> for Jet<f64> {
    type Output = Jet<f64>;
    fn add(self, c: f64) -> Jet<f64> {
        Jet {
            v: self.v + c,
            ..self
        }
    }
}

impl Mul<f64> for Jet<f64> {
    type Output = Jet<f64>;
    fn mul(self, c: f64) -> Jet<f64> {
        self.scale(c)
    }
}
