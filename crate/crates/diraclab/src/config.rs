//! JSON run configuration.

use std::path::{Path, PathBuf};

use diraclab_core::algebra::C64;
use diraclab_core::dynamics::{MomentumGrid, WavepacketSpec};
use diraclab_core::kinematics::Dim;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::suites::Suite;

/// A complex weight, written either as a real number or as `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Weight {
    Real(f64),
    Complex([f64; 2]),
}

impl Weight {
    pub fn value(self) -> C64 {
        match self {
            Weight::Real(re) => C64::new(re, 0.0),
            Weight::Complex([re, im]) => C64::new(re, im),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    /// Nodes per axis.
    pub n: usize,
    pub p_max: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            n: 2048,
            p_max: 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PacketConfig {
    /// Mean momentum, one entry per spatial dimension.
    pub center: Vec<f64>,
    /// Momentum width `sigma_p`.
    pub width: f64,
    /// Initial position offset, one entry per spatial dimension.
    pub x0: Vec<f64>,
    /// Weight on the positive-energy eigenspinor.
    pub w_plus: Weight,
    /// Weight on the negative-energy eigenspinor.
    pub w_minus: Weight,
}

impl Default for PacketConfig {
    fn default() -> Self {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        PacketConfig {
            center: vec![0.0],
            width: 0.05,
            x0: vec![0.0],
            w_plus: Weight::Real(r),
            w_minus: Weight::Real(r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TimeConfig {
    pub t_max: f64,
    pub steps: usize,
}

impl Default for TimeConfig {
    fn default() -> Self {
        TimeConfig {
            t_max: 32.0,
            steps: 512,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Closed-form identities.
    pub algebra_tol: f64,
    /// Finite-difference oracles.
    pub grid_tol: f64,
    /// Quadrature on grid states and conserved trajectories.
    pub conservation_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            algebra_tol: 1e-12,
            grid_tol: 1e-6,
            conservation_tol: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    /// Number of spatial dimensions, 1 or 2.
    pub dim: usize,
    pub mass: f64,
    pub grid: GridConfig,
    pub packet: PacketConfig,
    pub time: TimeConfig,
    pub tolerances: Tolerances,
    /// CSV destination for `simulate`.
    pub output: Option<PathBuf>,
    /// Verification suites; empty means all.
    pub suites: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            dim: 1,
            mass: 1.0,
            grid: GridConfig::default(),
            packet: PacketConfig::default(),
            time: TimeConfig::default(),
            tolerances: Tolerances::default(),
            output: None,
            suites: Vec::new(),
        }
    }
}

fn invalid(key: &str, why: impl Into<String>) -> CliError {
    CliError::Config {
        file: None,
        key: Some(key.to_string()),
        message: why.into(),
    }
}

fn positive(key: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(invalid(
            key,
            format!("must be positive and finite, got {v}"),
        ))
    }
}

impl RunConfig {
    /// Parses and validates a JSON document.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Config {
            file: None,
            key: None,
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        Self::from_json(&text).map_err(|e| e.with_file(path))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.dim != 1 && self.dim != 2 {
            return Err(invalid("dim", format!("must be 1 or 2, got {}", self.dim)));
        }
        positive("mass", self.mass)?;
        if self.grid.n < diraclab_core::dynamics::MIN_NODES {
            return Err(invalid(
                "grid.n",
                format!(
                    "need at least {} nodes, got {}",
                    diraclab_core::dynamics::MIN_NODES,
                    self.grid.n
                ),
            ));
        }
        positive("grid.p_max", self.grid.p_max)?;
        positive("packet.width", self.packet.width)?;
        for (key, v) in [
            ("packet.center", &self.packet.center),
            ("packet.x0", &self.packet.x0),
        ] {
            if v.len() != self.dim {
                return Err(invalid(
                    key,
                    format!(
                        "needs {} entries for dim {}, got {}",
                        self.dim,
                        self.dim,
                        v.len()
                    ),
                ));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(invalid(key, "entries must be finite"));
            }
        }
        let (wp, wm) = (self.packet.w_plus.value(), self.packet.w_minus.value());
        if !(wp.re.is_finite() && wp.im.is_finite() && wm.re.is_finite() && wm.im.is_finite()) {
            return Err(invalid("packet.w_plus", "weights must be finite"));
        }
        let total = wp.norm_sqr() + wm.norm_sqr();
        if (total - 1.0).abs() > 1e-9 {
            return Err(invalid(
                "packet.w_plus",
                format!("|w_plus|^2 + |w_minus|^2 must be 1, got {total}"),
            ));
        }
        positive("time.t_max", self.time.t_max)?;
        if self.time.steps == 0 {
            return Err(invalid("time.steps", "must be at least 1"));
        }
        positive("tolerances.algebra_tol", self.tolerances.algebra_tol)?;
        positive("tolerances.grid_tol", self.tolerances.grid_tol)?;
        positive(
            "tolerances.conservation_tol",
            self.tolerances.conservation_tol,
        )?;
        self.selected_suites()?;
        Ok(())
    }

    pub fn spatial_dim(&self) -> Dim {
        if self.dim == 2 {
            Dim::Two
        } else {
            Dim::One
        }
    }

    fn pair(v: &[f64]) -> [f64; 2] {
        [
            v.first().copied().unwrap_or(0.0),
            v.get(1).copied().unwrap_or(0.0),
        ]
    }

    pub fn grid(&self) -> Result<MomentumGrid, CliError> {
        Ok(MomentumGrid::new(
            self.spatial_dim(),
            self.grid.n,
            self.grid.p_max,
        )?)
    }

    pub fn packet_spec(&self) -> WavepacketSpec {
        WavepacketSpec {
            center: Self::pair(&self.packet.center),
            width: self.packet.width,
            x0: Self::pair(&self.packet.x0),
            weights: [self.packet.w_plus.value(), self.packet.w_minus.value()],
        }
    }

    /// `2 E(p_bar)`, the expected trembling frequency.
    pub fn zbw_frequency(&self) -> f64 {
        let p = Self::pair(&self.packet.center);
        2.0 * (self.mass * self.mass + p[0] * p[0] + p[1] * p[1]).sqrt()
    }

    /// Position-space width `1 / (2 sigma_p)` of the packet.
    pub fn position_width(&self) -> f64 {
        0.5 / self.packet.width
    }

    /// Suites in canonical order; all of them when none are named.
    pub fn selected_suites(&self) -> Result<Vec<Suite>, CliError> {
        Suite::select(&self.suites).map_err(|name| {
            invalid(
                "suites",
                format!("unknown suite `{name}`, expected one of {}", Suite::names()),
            )
        })
    }
}
