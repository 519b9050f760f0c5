//! Numerical experiments built on the single-state thermodynamics: energy
//! curves for several shapes, partition removal between cubes, and face
//! pressure sweeps.

pub mod grid;
pub mod merge;
pub mod solver;
pub mod sweep;

pub use grid::{grid, Spacing};
pub use merge::{
    adiabatic_merge, isothermal_merge, merge_effects, merge_sweep, AdiabaticMerge, MergeConfig,
    MergeResult, MERGE_TOLERANCE,
};
pub use solver::{solve_temperature_for_entropy, EntropySolution, SolverOptions};
pub use sweep::{energy_curve, pressure_curve, sweep, SweepRow};
