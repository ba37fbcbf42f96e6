//! Verification suites, wavepacket simulation and trembling-motion analysis
//! for 1+1 and 2+1 dimensional Dirac theory, on top of `diraclab-core`.

pub mod config;
pub mod csv;
pub mod error;
pub mod report;
pub mod suites;
pub mod zbw;

pub use config::RunConfig;
pub use error::CliError;
pub use report::{Check, VerificationReport};
pub use suites::{run_verify, Suite};
pub use zbw::{simulate, summarize, ZbwSummary};
