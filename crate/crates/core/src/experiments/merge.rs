//! Removing the partitions between `M` identical cubic cavities.
//!
//! All temperatures here are reduced with the volume scale of one initial
//! cube, `t = T a / B`. The merged cavity has volume scale `M^(1/3) a`, so
//! at the same physical temperature its own reduced temperature is
//! `M^(1/3) t`.

use serde::{Deserialize, Serialize};

use super::solver::{solve_temperature_for_entropy, SolverOptions};
use crate::error::{Error, Result};
use crate::spectrum::{merge_block, CuboidGeometry, ModeBudget};
use crate::thermo::{evaluate, stefan_boltzmann_energy, CutoffPolicy, ThermoReport, ThermoState};

/// Cutoff tolerance used by merge experiments unless overridden. Merged
/// cavities are `M` times larger, so their mode sums are the expensive part.
pub const MERGE_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MergeConfig {
    /// Cube counts along each axis; `None` joins the cubes in a row along `X`.
    pub layout: Option<[u32; 3]>,
    pub cutoff: CutoffPolicy,
    pub budget: ModeBudget,
    pub solver: SolverOptions,
}

impl Default for MergeConfig {
    fn default() -> Self {
        Self {
            layout: None,
            cutoff: CutoffPolicy::adaptive(MERGE_TOLERANCE),
            budget: ModeBudget::from_env(),
            solver: SolverOptions::default(),
        }
    }
}

impl MergeConfig {
    pub fn merged_geometry(&self, cubes: u32, cube_edge: f64) -> Result<CuboidGeometry> {
        let counts = self.layout.unwrap_or([cubes, 1, 1]);
        if counts.iter().map(|&c| c as u64).product::<u64>() != cubes as u64 {
            return Err(Error::InvalidArgument(format!(
                "layout {counts:?} does not hold {cubes} cubes"
            )));
        }
        merge_block(counts, cube_edge)
    }

    fn state(&self, geom: CuboidGeometry, t: f64) -> Result<ThermoState> {
        Ok(ThermoState::new(geom, t, self.cutoff)?.with_budget(self.budget))
    }
}

/// Outcome of an adiabatic (entropy-conserving) merge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdiabaticMerge {
    pub t: f64,
    /// `T' / T`.
    pub t_ratio: f64,
    /// Photons in the merged cavity at `T'` over photons in the `M` cubes at `T`.
    pub n_ratio: f64,
    /// `|S_merged(T') - M S_cube(T)| / (M S_cube(T))`.
    pub entropy_residual: f64,
    /// Final reduced temperature of the merged cavity in its own scale.
    pub t_merged: f64,
}

/// All three merge effects at one initial temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MergeResult {
    pub t: f64,
    pub t_ratio: f64,
    /// Relative temperature drop `1 - T'/T`.
    pub relative_drop: f64,
    /// Absolute temperature drop `(T - T') a / B`, in reduced units of one cube.
    pub reduced_drop: f64,
    pub n_ratio: f64,
    /// Isothermal energy supply normalized to the Stefan-Boltzmann energy of the `M` cubes.
    pub de_iso: f64,
    pub entropy_residual: f64,
}

fn check_inputs(cubes: u32, t: f64, cube_edge: f64) -> Result<()> {
    if cubes == 0 {
        return Err(Error::InvalidArgument("need at least one cube".into()));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "reduced temperature must be finite and positive, got {t}"
        )));
    }
    if !(cube_edge > 0.0 && cube_edge.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "cube edge must be finite and positive, got {cube_edge}"
        )));
    }
    Ok(())
}

fn cube_report(t: f64, cube_edge: f64, cfg: &MergeConfig) -> Result<ThermoReport> {
    evaluate(&cfg.state(CuboidGeometry::cube(cube_edge)?, t)?)
}

fn adiabatic_from_cube(
    cubes: u32,
    t: f64,
    cube_edge: f64,
    cube: &ThermoReport,
    cfg: &MergeConfig,
) -> Result<AdiabaticMerge> {
    if cubes == 1 {
        return Ok(AdiabaticMerge {
            t,
            t_ratio: 1.0,
            n_ratio: 1.0,
            entropy_residual: 0.0,
            t_merged: t,
        });
    }
    let merged = cfg.merged_geometry(cubes, cube_edge)?;
    let m = cubes as f64;
    let t_same = t * merged.scale() / cube_edge;
    let target = m * cube.entropy;
    let solution = solve_temperature_for_entropy(
        &merged,
        target,
        (t_same * std::f64::consts::FRAC_1_SQRT_2, t_same),
        cfg.cutoff,
        cfg.budget,
        cfg.solver,
    )?;
    Ok(AdiabaticMerge {
        t,
        t_ratio: solution.t / t_same,
        n_ratio: solution.terms.photons / (m * cube.photons),
        entropy_residual: (solution.terms.entropy - target).abs() / target,
        t_merged: solution.t,
    })
}

fn isothermal_from_cube(
    cubes: u32,
    t: f64,
    cube_edge: f64,
    cube: &ThermoReport,
    cfg: &MergeConfig,
) -> Result<f64> {
    if cubes == 1 {
        return Ok(0.0);
    }
    let merged = cfg.merged_geometry(cubes, cube_edge)?;
    let m = cubes as f64;
    let t_same = t * merged.scale() / cube_edge;
    let merged_energy = evaluate(&cfg.state(merged, t_same)?)?.energy;
    // Reduced energies share the factor k_B T, so they subtract directly.
    Ok((merged_energy - m * cube.energy) / (m * stefan_boltzmann_energy(t)))
}

/// Removes the partitions at constant total entropy and reports `T'/T` and
/// the photon-number ratio.
pub fn adiabatic_merge(cubes: u32, t: f64, cube_edge: f64, cfg: &MergeConfig) -> Result<AdiabaticMerge> {
    check_inputs(cubes, t, cube_edge)?;
    let cube = cube_report(t, cube_edge, cfg)?;
    adiabatic_from_cube(cubes, t, cube_edge, &cube, cfg)
}

/// Energy that must be supplied to remove the partitions at constant
/// temperature, `[E_merged(T) - M E_cube(T)] / (M E_SB(T))`.
pub fn isothermal_merge(cubes: u32, t: f64, cube_edge: f64, cfg: &MergeConfig) -> Result<f64> {
    check_inputs(cubes, t, cube_edge)?;
    let cube = cube_report(t, cube_edge, cfg)?;
    isothermal_from_cube(cubes, t, cube_edge, &cube, cfg)
}

pub fn merge_effects(cubes: u32, t: f64, cube_edge: f64, cfg: &MergeConfig) -> Result<MergeResult> {
    check_inputs(cubes, t, cube_edge)?;
    let cube = cube_report(t, cube_edge, cfg)?;
    let adiabatic = adiabatic_from_cube(cubes, t, cube_edge, &cube, cfg)?;
    let de_iso = isothermal_from_cube(cubes, t, cube_edge, &cube, cfg)?;
    Ok(MergeResult {
        t,
        t_ratio: adiabatic.t_ratio,
        relative_drop: 1.0 - adiabatic.t_ratio,
        reduced_drop: t * (1.0 - adiabatic.t_ratio),
        n_ratio: adiabatic.n_ratio,
        de_iso,
        entropy_residual: adiabatic.entropy_residual,
    })
}

pub fn merge_sweep(cubes: u32, t_grid: &[f64], cube_edge: f64, cfg: &MergeConfig) -> Result<Vec<MergeResult>> {
    super::grid::ensure_increasing(t_grid)?;
    t_grid
        .iter()
        .map(|&t| merge_effects(cubes, t, cube_edge, cfg))
        .collect()
}
