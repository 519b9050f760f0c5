//! Mode sum plus continuum tail for every thermodynamic function at once.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::kernels::OscillatorTerms;
use super::state::{CutoffPolicy, ThermoState};
use super::tail::{tail_integral, TailKind};
use crate::error::{Error, Result};
use crate::spectrum::{for_each_mode_in_shell, CuboidGeometry, ModeBudget};
use crate::summation::CompensatedSum;

/// Growth factor between successive adaptive cutoffs.
pub const CUTOFF_GROWTH: f64 = 1.5;
const MAX_ENLARGEMENTS: usize = 80;

/// Reduced thermodynamic functions of one state. Energies are in units of
/// `k_B T`, entropy and heat capacity in units of `k_B`, face pressures as
/// `p_i V / (k_B T)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermoReport {
    pub t: f64,
    pub free_energy: f64,
    pub energy: f64,
    pub entropy: f64,
    pub photons: f64,
    pub heat_capacity: f64,
    pub pressure: [f64; 3],
    pub phi: f64,
    pub omega_e: f64,
}

impl ThermoReport {
    pub fn get(&self, quantity: Quantity) -> f64 {
        match quantity {
            Quantity::FreeEnergy => self.free_energy,
            Quantity::Energy => self.energy,
            Quantity::Entropy => self.entropy,
            Quantity::PhotonNumber => self.photons,
            Quantity::HeatCapacity => self.heat_capacity,
            Quantity::Phi => self.phi,
            Quantity::All => self.energy,
        }
    }

    /// Average pressure `p V / (k_B T) = E_red / 3`.
    pub fn average_pressure(&self) -> f64 {
        self.energy / 3.0
    }

    /// Face pressures normalized to the average pressure; they sum to 3.
    pub fn pressure_ratios(&self) -> [f64; 3] {
        let avg = self.average_pressure();
        self.pressure.map(|p| p / avg)
    }

    fn relative_change(&self, previous: &ThermoReport, quantity: Quantity) -> f64 {
        let rel = |a: f64, b: f64| {
            let scale = a.abs().max(b.abs());
            if scale == 0.0 {
                0.0
            } else {
                (a - b).abs() / scale
            }
        };
        match quantity {
            Quantity::All => [
                Quantity::FreeEnergy,
                Quantity::Energy,
                Quantity::Entropy,
                Quantity::PhotonNumber,
                Quantity::HeatCapacity,
            ]
            .into_iter()
            .map(|q| rel(self.get(q), previous.get(q)))
            .fold(0.0, f64::max),
            q => rel(self.get(q), previous.get(q)),
        }
    }
}

/// Which output drives adaptive cutoff convergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    FreeEnergy,
    Energy,
    Entropy,
    PhotonNumber,
    HeatCapacity,
    Phi,
    /// Worst of free energy, energy, entropy, photon number and heat capacity.
    All,
}

/// Running discrete sums over modes.
#[derive(Debug, Default, Clone, Copy)]
struct ModeSums {
    free: CompensatedSum,
    energy: CompensatedSum,
    photons: CompensatedSum,
    heat: CompensatedSum,
    pressure: [CompensatedSum; 3],
}

impl ModeSums {
    fn add_shell(&mut self, geom: &CuboidGeometry, t: f64, lower: f64, upper: f64) {
        let steps = geom.axis_steps();
        let inv_t = 1.0 / t;
        for_each_mode_in_shell(geom, lower, upper, |n, g, omega| {
            let x = omega * inv_t;
            let terms = OscillatorTerms::at(x);
            if terms.occupancy == 0.0 && terms.log_one_minus_exp == 0.0 {
                return;
            }
            let g = g as f64;
            let energy = g * x * terms.occupancy;
            self.free.add(g * terms.log_one_minus_exp);
            self.energy.add(energy);
            self.photons.add(g * terms.occupancy);
            self.heat.add(g * terms.heat);
            let inv_q = 1.0 / (omega * omega);
            for axis in 0..3 {
                let k = steps[axis] * n[axis] as f64;
                self.pressure[axis].add(energy * (k * k) * inv_q);
            }
        });
    }

    fn report(&self, t: f64, omega_e: f64) -> ThermoReport {
        let lower = omega_e / t;
        let weight = t * t * t / (PI * PI);
        let tail = |kind| weight * tail_integral(kind, lower);
        let tail_energy = tail(TailKind::Energy);

        let free_energy = self.free.value() + tail(TailKind::Free);
        let energy = self.energy.value() + tail_energy;
        let pressure = self.pressure.map(|p| p.value() + tail_energy / 3.0);
        ThermoReport {
            t,
            free_energy,
            energy,
            entropy: energy - free_energy,
            photons: self.photons.value() + tail(TailKind::Number),
            heat_capacity: self.heat.value() + tail(TailKind::Heat),
            pressure,
            phi: energy / stefan_boltzmann_energy(t),
            omega_e,
        }
    }
}

/// Reduced Stefan-Boltzmann energy `pi^2 t^3 / 15`.
pub fn stefan_boltzmann_energy(t: f64) -> f64 {
    PI * PI * t * t * t / 15.0
}

/// Evaluates every function with a fixed cutoff `omega_e` (0 = pure tail).
pub fn evaluate_fixed(
    geom: &CuboidGeometry,
    t: f64,
    omega_e: f64,
    budget: ModeBudget,
) -> Result<ThermoReport> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "reduced temperature must be finite and positive, got {t}"
        )));
    }
    if !(omega_e >= 0.0 && omega_e.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "cutoff must be finite and non-negative, got {omega_e}"
        )));
    }
    budget.check(geom, omega_e)?;
    let mut sums = ModeSums::default();
    sums.add_shell(geom, t, 0.0, omega_e);
    Ok(sums.report(t, omega_e))
}

/// First cutoff tried by the adaptive policy.
pub fn initial_cutoff(t: f64) -> f64 {
    (4.0 * PI).max(2.0 * t)
}

/// Grows the cutoff by [`CUTOFF_GROWTH`] until `quantity` changes by less
/// than `tolerance` on two consecutive enlargements. Returns the report at
/// the last cutoff. Each enlargement only sums the new shell.
pub fn auto_cutoff(state: &ThermoState, quantity: Quantity) -> Result<ThermoReport> {
    let tolerance = match state.cutoff {
        CutoffPolicy::Adaptive { tolerance } => tolerance,
        CutoffPolicy::Fixed(_) => {
            return Err(Error::InvalidArgument(
                "auto_cutoff needs an adaptive cutoff policy".into(),
            ))
        }
    };
    state.cutoff.validate()?;
    let (geom, t) = (&state.geom, state.t);

    let mut cutoff = initial_cutoff(t);
    state.budget.check(geom, cutoff)?;
    let mut sums = ModeSums::default();
    sums.add_shell(geom, t, 0.0, cutoff);
    let mut previous = sums.report(t, cutoff);
    let mut settled = 0;
    let mut change = f64::INFINITY;

    for _ in 0..MAX_ENLARGEMENTS {
        let next = cutoff * CUTOFF_GROWTH;
        state.budget.check(geom, next)?;
        sums.add_shell(geom, t, cutoff, next);
        cutoff = next;
        let current = sums.report(t, cutoff);
        change = current.relative_change(&previous, quantity);
        settled = if change < tolerance { settled + 1 } else { 0 };
        if settled == 2 {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::CutoffNotConverged {
        iterations: MAX_ENLARGEMENTS,
        cutoff,
        change,
    })
}

/// Full report for a state: one pass for a fixed cutoff, or adaptive
/// convergence of all functions together.
pub fn evaluate(state: &ThermoState) -> Result<ThermoReport> {
    evaluate_for(state, Quantity::All)
}

fn evaluate_for(state: &ThermoState, quantity: Quantity) -> Result<ThermoReport> {
    match state.cutoff {
        CutoffPolicy::Fixed(omega_e) => evaluate_fixed(&state.geom, state.t, omega_e, state.budget),
        CutoffPolicy::Adaptive { .. } => auto_cutoff(state, quantity),
    }
}

/// `F / (k_B T)`, vacuum term omitted (so always `<= 0`).
pub fn free_energy(state: &ThermoState) -> Result<f64> {
    Ok(evaluate_for(state, Quantity::FreeEnergy)?.free_energy)
}

/// `E / (k_B T)`.
pub fn internal_energy(state: &ThermoState) -> Result<f64> {
    Ok(evaluate_for(state, Quantity::Energy)?.energy)
}

/// `S / k_B = E_red - F_red`.
pub fn entropy(state: &ThermoState) -> Result<f64> {
    Ok(evaluate_for(state, Quantity::Entropy)?.entropy)
}

/// Mean photon number.
pub fn photon_number(state: &ThermoState) -> Result<f64> {
    Ok(evaluate_for(state, Quantity::PhotonNumber)?.photons)
}

/// `C_V / k_B`.
pub fn heat_capacity(state: &ThermoState) -> Result<f64> {
    Ok(evaluate_for(state, Quantity::HeatCapacity)?.heat_capacity)
}

/// Face pressures `p_i V / (k_B T)`. Low modes carry the anisotropy; the
/// continuum tail is isotropic and adds a third of its energy to each face.
pub fn face_pressures(state: &ThermoState) -> Result<[f64; 3]> {
    Ok(evaluate_for(state, Quantity::Energy)?.pressure)
}

/// Ratio of the cavity energy to the Stefan-Boltzmann value.
pub fn phi(state: &ThermoState) -> Result<f64> {
    Ok(evaluate_for(state, Quantity::Phi)?.phi)
}
