use core::fmt;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A value that must be finite was NaN or infinite.
    NonFinite(&'static str),
    /// Mass must be strictly positive.
    NonPositiveMass(f64),
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    /// Operation needs both spinors in the same representation.
    RepresentationMismatch,
    /// Operands live in different spacetime dimensions.
    DimensionMismatch,
    /// A matrix field was differentiated more often than its jets support.
    DerivativeOrderExhausted,
    /// Commutator of two operators with non-scalar gradient coefficients
    /// would leave the first-order class.
    NonClosingCommutator,
    InvalidGrid(&'static str),
    InvalidPacket(&'static str),
    /// Packet amplitude at the grid boundary is not negligible.
    PacketLeaks {
        boundary: f64,
        peak: f64,
    },
    /// Finite-difference stencil needs more nodes than the grid has.
    StencilExceedsGrid {
        needed: usize,
        available: usize,
    },
    TooFewSamples {
        needed: usize,
        got: usize,
    },
    /// Sample times are not uniformly spaced.
    NonUniformSamples,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite(what) => write!(f, "non-finite {what}"),
            Error::NonPositiveMass(m) => write!(f, "mass must be positive, got {m}"),
            Error::IndexOutOfRange { index, min, max } => {
                write!(f, "index {index} outside {min}..={max}")
            }
            Error::RepresentationMismatch => f.write_str("spinors are in different representations"),
            Error::DimensionMismatch => f.write_str("operands belong to different dimensions"),
            Error::DerivativeOrderExhausted => {
                f.write_str("matrix field has no exact derivative left")
            }
            Error::NonClosingCommutator => f.write_str(
                "commutator of two operators with matrix-valued gradient coefficients is second order",
            ),
            Error::InvalidGrid(why) => write!(f, "invalid momentum grid: {why}"),
            Error::InvalidPacket(why) => write!(f, "invalid wavepacket: {why}"),
            Error::PacketLeaks { boundary, peak } => write!(
                f,
                "packet does not fit the grid: boundary amplitude {boundary:e} vs peak {peak:e}"
            ),
            Error::StencilExceedsGrid { needed, available } => write!(
                f,
                "derivative stencil needs {needed} nodes per axis, grid has {available}"
            ),
            Error::TooFewSamples { needed, got } => {
                write!(f, "need at least {needed} samples, got {got}")
            }
            Error::NonUniformSamples => f.write_str("sample times are not uniformly spaced"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
