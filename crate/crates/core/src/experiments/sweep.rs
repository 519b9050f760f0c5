//! Temperature sweeps over a fixed cavity.

use serde::{Deserialize, Serialize};

use super::grid::ensure_increasing;
use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::spectrum::{CuboidGeometry, ModeBudget};
use crate::thermo::{evaluate, CutoffPolicy, ThermoReport, ThermoState};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub t: f64,
    /// Absolute temperature, when the sweep was driven in kelvin.
    pub temperature_k: Option<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub report: ThermoReport,
}

impl SweepRow {
    /// `p_i / p_av` with `p_av = E / (3V)`.
    pub fn pressure_ratios(&self) -> [f64; 3] {
        self.report.pressure_ratios()
    }
}

/// Reports for `geom` at each reduced temperature of an increasing grid.
pub fn sweep(
    geom: &CuboidGeometry,
    t_grid: &[f64],
    cutoff: CutoffPolicy,
    budget: ModeBudget,
) -> Result<Vec<SweepRow>> {
    ensure_increasing(t_grid)?;
    t_grid
        .iter()
        .map(|&t| {
            let state = ThermoState::new(*geom, t, cutoff)?.with_budget(budget);
            Ok(SweepRow {
                t,
                temperature_k: None,
                alpha: geom.alpha(),
                beta: geom.beta(),
                report: evaluate(&state)?,
            })
        })
        .collect()
}

/// Normalized energy curve for the shape `(alpha, beta)`. Only the shape
/// matters in reduced units, so the cavity is built with unit volume scale.
pub fn energy_curve(
    alpha: f64,
    beta: f64,
    t_grid: &[f64],
    cutoff: CutoffPolicy,
    budget: ModeBudget,
) -> Result<Vec<SweepRow>> {
    sweep(&CuboidGeometry::from_shape(alpha, beta, 1.0)?, t_grid, cutoff, budget)
}

/// Face pressures of a cavity with edges in cm over a kelvin grid.
pub fn pressure_curve(
    geom: &CuboidGeometry,
    temperatures_k: &[f64],
    constants: &PhysicalConstants,
    cutoff: CutoffPolicy,
    budget: ModeBudget,
) -> Result<Vec<SweepRow>> {
    ensure_increasing(temperatures_k)?;
    let scale = geom.scale();
    let t_grid: Vec<f64> = temperatures_k
        .iter()
        .map(|&temp| constants.reduced_temperature(temp, scale))
        .collect();
    let mut rows = sweep(geom, &t_grid, cutoff, budget)?;
    for (row, &temp) in rows.iter_mut().zip(temperatures_k) {
        row.temperature_k = Some(temp);
    }
    Ok(rows)
}
