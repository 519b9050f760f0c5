//! Thermodynamics of a photon gas in a finite cuboid cavity with ideally
//! conducting walls.
//!
//! Modes below a cutoff are summed exactly; above it the spectrum is
//! replaced by its continuum density and integrated in closed form. On top
//! of that sit the cavity-merging and pressure-anisotropy experiments.

// `!(x > 0.0)` is used on purpose so NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod error;
pub mod experiments;
pub mod spectrum;
pub mod summation;
pub mod thermo;

pub use constants::PhysicalConstants;
pub use error::{Error, Result};
pub use spectrum::{CuboidGeometry, ModeBudget, ModeRecord};
pub use thermo::{CutoffPolicy, Quantity, ThermoReport, ThermoState};
