//! Numerical Dirac theory in 1+1 and 2+1 dimensions.
#![allow(clippy::needless_range_loop)]
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod dynamics;
pub mod error;
pub mod fw;
pub mod kinematics;
pub mod numdiff;
pub mod operators;
pub mod spinor_1p1;
pub mod spinor_2p1;

pub use error::Error;
