//! Momentum-space operator calculus.
//!
//! Operators are first order in `d/dp`: a polynomial in `t` of matrix fields
//! plus gradient terms. Matrix fields carry exact derivatives through
//! second-order jets, so commutators, conjugations and Heisenberg
//! derivatives are evaluated in closed form.

pub mod catalog;
pub mod diffop;
pub mod field;
pub mod jet;
pub mod moments;

pub use catalog::*;
pub use diffop::{DiffOp, StateField};
pub use field::MatrixField;
pub use moments::*;
