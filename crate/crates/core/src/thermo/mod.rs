//! Thermodynamic functions of the photon gas for one cavity state.

mod derivatives;
mod eval;
mod kernels;
mod state;
mod table;
mod tail;

pub use derivatives::{
    five_point, resolved_cutoff, shape_forces, shape_forces_with_step,
    temperature_derivative_energy, temperature_derivative_heat, volume_derivative_pressure,
    SHAPE_STEP,
};
pub use eval::{
    auto_cutoff, entropy, evaluate, evaluate_fixed, face_pressures, free_energy, heat_capacity,
    initial_cutoff, internal_energy, phi, photon_number, stefan_boltzmann_energy, Quantity,
    ThermoReport, CUTOFF_GROWTH,
};
pub use kernels::{log_one_minus_exp, occupancy};
pub use state::{CutoffPolicy, ThermoState};
pub use table::{EntropyTerms, ModeTable};
pub use tail::{tail_integral, TailKind};
