//! Trembling-motion summary of a trajectory.

use std::fmt::Write as _;

use diraclab_core::dynamics::{self, zbw_analysis, Trajectory, ZbwAnalysis};
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;

/// Runs the configured packet through `dynamics::simulate`.
pub fn simulate(cfg: &RunConfig) -> Result<Trajectory, CliError> {
    let grid = cfg.grid()?;
    let psi = dynamics::make_packet(&cfg.packet_spec(), &grid, cfg.mass)?;
    Ok(dynamics::simulate(&psi, cfg.time.t_max, cfg.time.steps)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OperatorSummary {
    pub operator: &'static str,
    pub drift_velocity: f64,
    pub intercept: f64,
    pub oscillation_frequency: f64,
    pub oscillation_amplitude: f64,
    pub linear_residual: f64,
    /// Amplitude above the detection threshold.
    pub detected: bool,
}

impl OperatorSummary {
    fn new(operator: &'static str, a: ZbwAnalysis, threshold: f64) -> Self {
        OperatorSummary {
            operator,
            drift_velocity: a.drift_velocity,
            intercept: a.intercept,
            oscillation_frequency: a.oscillation_frequency,
            oscillation_amplitude: a.oscillation_amplitude,
            linear_residual: a.linear_residual,
            detected: a.oscillation_amplitude > threshold,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZbwSummary {
    pub samples: usize,
    pub t_max: f64,
    /// `2 E(p_bar)`.
    pub expected_frequency: f64,
    /// `grid_tol * sigma_x`.
    pub threshold: f64,
    pub canonical: OperatorSummary,
    pub particle: OperatorSummary,
    /// Canonical over particle oscillation amplitude.
    pub amplitude_ratio: f64,
    pub verdict: String,
}

pub fn summarize(traj: &Trajectory, cfg: &RunConfig) -> Result<ZbwSummary, CliError> {
    let threshold = cfg.tolerances.grid_tol * cfg.position_width();
    let canonical = OperatorSummary::new(
        "x_canonical",
        zbw_analysis(&traj.t, &traj.x_canonical)?,
        threshold,
    );
    let particle = OperatorSummary::new(
        "x_particle",
        zbw_analysis(&traj.t, &traj.x_particle)?,
        threshold,
    );
    let amplitude_ratio = canonical.oscillation_amplitude / particle.oscillation_amplitude;
    let verdict = match (canonical.detected, particle.detected) {
        (false, false) => "no Zitterbewegung detected".to_string(),
        (true, false) => format!(
            "Zitterbewegung in the canonical position only, amplitude ratio {amplitude_ratio:.3e}"
        ),
        (false, true) => "Zitterbewegung in the particle position only".to_string(),
        (true, true) => "Zitterbewegung in both positions".to_string(),
    };
    Ok(ZbwSummary {
        samples: traj.len(),
        t_max: traj.t.last().copied().unwrap_or(0.0),
        expected_frequency: cfg.zbw_frequency(),
        threshold,
        canonical,
        particle,
        amplitude_ratio,
        verdict,
    })
}

impl ZbwSummary {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "samples {}, t_max {:.6e}", self.samples, self.t_max);
        let _ = writeln!(
            out,
            "expected frequency 2E(p_bar) = {:.6e}",
            self.expected_frequency
        );
        let _ = writeln!(out, "detection threshold {:.3e}", self.threshold);
        for s in [&self.canonical, &self.particle] {
            let dev = (s.oscillation_frequency - self.expected_frequency) / self.expected_frequency;
            let _ = writeln!(
                out,
                "{}: drift velocity {:.6e}, frequency {:.6e} (vs 2E(p_bar): {:+.3e} relative), amplitude {:.3e}, linear residual {:.3e}",
                s.operator, s.drift_velocity, s.oscillation_frequency, dev, s.oscillation_amplitude, s.linear_residual
            );
            let status = if s.detected {
                "Zitterbewegung detected"
            } else {
                "no Zitterbewegung detected"
            };
            let _ = writeln!(out, "{}: {status}", s.operator);
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}
