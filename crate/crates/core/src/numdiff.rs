//! Fourth-order finite differences and Richardson extrapolation.
//!
//! These are the grid-side oracles for the exact jet derivatives in
//! [`crate::operators`], and the derivative engine used on spinor grids.

use crate::error::Error;
use crate::operators::jet::JetValue;

/// Number of nodes a five-point stencil needs.
pub const STENCIL: usize = 5;

/// Fourth-order central difference of `f` at `x` with spacing `h`.
pub fn central4<T: JetValue>(f: impl Fn(f64) -> T, x: f64, h: f64) -> T {
    let a = f(x + 2.0 * h);
    let b = f(x + h);
    let c = f(x - h);
    let d = f(x - 2.0 * h);
    ((b - c) * 8.0 - (a - d)) * (1.0 / (12.0 * h))
}

/// Richardson combination `(16 D(h/2) - D(h)) / 15` of [`central4`].
pub fn richardson4<T: JetValue>(f: impl Fn(f64) -> T, x: f64, h: f64) -> T {
    let coarse = central4(&f, x, h);
    let fine = central4(&f, x, 0.5 * h);
    (fine * 16.0 - coarse) * (1.0 / 15.0)
}

/// Partial derivative of a function of two momenta along axis `k`.
pub fn partial4<T: JetValue>(f: impl Fn([f64; 2]) -> T, p: [f64; 2], k: usize, h: f64) -> T {
    richardson4(
        |s| {
            let mut q = p;
            q[k] = s;
            f(q)
        },
        p[k],
        h,
    )
}

const CENTRAL: [f64; 5] = [1.0, -8.0, 0.0, 8.0, -1.0];
const EDGE0: [f64; 5] = [-25.0, 48.0, -36.0, 16.0, -3.0];
const EDGE1: [f64; 5] = [-3.0, -10.0, 18.0, -6.0, 1.0];

/// Derivative of uniformly sampled data at node `i`.
///
/// `at(j)` returns sample `j` of `n`. Interior nodes use the central
/// stencil, the two outermost nodes on each side use one-sided fourth-order
/// closures.
pub fn grid_derivative<T: JetValue>(
    at: impl Fn(usize) -> T,
    n: usize,
    i: usize,
    h: f64,
) -> Result<T, Error> {
    if n < STENCIL {
        return Err(Error::StencilExceedsGrid {
            needed: STENCIL,
            available: n,
        });
    }
    if i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 0,
            max: n - 1,
        });
    }
    let scale = 1.0 / (12.0 * h);
    let combine = |w: &[f64; 5], start: usize| {
        let mut acc = T::zero();
        for (j, &c) in w.iter().enumerate() {
            if c != 0.0 {
                acc = acc + at(start + j) * c;
            }
        }
        acc * scale
    };
    let out = match i {
        0 => combine(&EDGE0, 0),
        1 => combine(&EDGE1, 0),
        _ if i + 2 < n => combine(&CENTRAL, i - 2),
        _ => {
            // mirrored closures read the samples backwards
            let w = if i == n - 1 { EDGE0 } else { EDGE1 };
            let mut acc = T::zero();
            for (j, &c) in w.iter().enumerate() {
                acc = acc + at(n - 1 - j) * c;
            }
            acc * (-scale)
        }
    };
    Ok(out)
}
