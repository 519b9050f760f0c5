use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::spectrum::{CuboidGeometry, ModeBudget};

/// Where the discrete mode sum stops and the continuum tail takes over.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutoffPolicy {
    /// Sum modes with `w <= w_e`, integrate the rest. `0` gives the pure
    /// continuum (Stefan-Boltzmann) result.
    Fixed(f64),
    /// Enlarge `w_e` until the selected quantity stops changing by more than
    /// `tolerance` (relative).
    Adaptive { tolerance: f64 },
}

impl CutoffPolicy {
    pub const DEFAULT_TOLERANCE: f64 = 1e-6;

    pub fn adaptive(tolerance: f64) -> Self {
        Self::Adaptive { tolerance }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            CutoffPolicy::Fixed(w) if !(w >= 0.0 && w.is_finite()) => Err(Error::InvalidArgument(
                format!("fixed cutoff must be finite and non-negative, got {w}"),
            )),
            CutoffPolicy::Adaptive { tolerance } if !(tolerance > 0.0 && tolerance < 1e-2) => {
                Err(Error::InvalidArgument(format!(
                    "adaptive tolerance must lie in (0, 1e-2), got {tolerance}"
                )))
            }
            _ => Ok(()),
        }
    }
}

impl Default for CutoffPolicy {
    fn default() -> Self {
        Self::Adaptive {
            tolerance: Self::DEFAULT_TOLERANCE,
        }
    }
}

/// Evaluation context: cavity, reduced temperature `t = T a / B` and cutoff policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoState {
    pub geom: CuboidGeometry,
    pub t: f64,
    pub cutoff: CutoffPolicy,
    pub budget: ModeBudget,
}

impl ThermoState {
    pub fn new(geom: CuboidGeometry, t: f64, cutoff: CutoffPolicy) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "reduced temperature must be finite and positive, got {t}"
            )));
        }
        cutoff.validate()?;
        Ok(Self {
            geom,
            t,
            cutoff,
            budget: ModeBudget::from_env(),
        })
    }

    /// State for a cavity with edges in cm at a temperature in K.
    pub fn from_physical(
        geom: CuboidGeometry,
        temperature_k: f64,
        constants: &PhysicalConstants,
        cutoff: CutoffPolicy,
    ) -> Result<Self> {
        Self::new(geom, constants.reduced_temperature(temperature_k, geom.scale()), cutoff)
    }

    pub fn with_budget(mut self, budget: ModeBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_cutoff(mut self, cutoff: CutoffPolicy) -> Self {
        self.cutoff = cutoff;
        self
    }

    pub fn with_t(mut self, t: f64) -> Self {
        self.t = t;
        self
    }

    pub fn with_geom(mut self, geom: CuboidGeometry) -> Self {
        self.geom = geom;
        self
    }
}
