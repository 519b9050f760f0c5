//! Physical constants in CGS units.
//!
//! Everything in the library is computed in dimensionless form; these
//! constants only convert between kelvin/centimetre inputs and the reduced
//! temperature `t = T a / B`, and back to absolute energies and pressures.

use serde::{Deserialize, Serialize};

/// CODATA 2018 values (exact SI definitions converted to CGS).
pub const HBAR_ERG_S: f64 = 1.054_571_817e-27;
pub const C_CM_S: f64 = 2.997_924_58e10;
pub const K_B_ERG_K: f64 = 1.380_649e-16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, erg s.
    pub hbar: f64,
    /// Speed of light, cm/s.
    pub c: f64,
    /// Boltzmann constant, erg/K.
    pub k_b: f64,
    /// Optional override for `B = hbar c / k_B` in cm K. When absent it is
    /// derived from the three constants above.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_override: Option<f64>,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata()
    }
}

impl PhysicalConstants {
    pub const fn codata() -> Self {
        Self {
            hbar: HBAR_ERG_S,
            c: C_CM_S,
            k_b: K_B_ERG_K,
            b_override: None,
        }
    }

    /// `B = hbar c / k_B` in cm K (0.22899 with CODATA values).
    pub fn b(&self) -> f64 {
        self.b_override
            .unwrap_or(self.hbar * self.c / self.k_b)
    }

    /// Stefan-Boltzmann constant `pi^2 k_B^4 / (60 hbar^3 c^2)` in erg cm^-2 s^-1 K^-4.
    pub fn sigma(&self) -> f64 {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        pi2 * self.k_b.powi(4) / (60.0 * self.hbar.powi(3) * self.c * self.c)
    }

    /// Reduced temperature `t = T a / B` for temperature in K and volume scale in cm.
    pub fn reduced_temperature(&self, temperature_k: f64, scale_cm: f64) -> f64 {
        temperature_k * scale_cm / self.b()
    }

    /// Inverse of [`reduced_temperature`](Self::reduced_temperature).
    pub fn temperature_k(&self, reduced: f64, scale_cm: f64) -> f64 {
        reduced * self.b() / scale_cm
    }

    /// Converts a reduced quantity `Q / (k_B T)` to erg.
    pub fn energy_erg(&self, reduced: f64, temperature_k: f64) -> f64 {
        reduced * self.k_b * temperature_k
    }

    /// Converts a reduced pressure `p V / (k_B T)` to dyn/cm^2.
    pub fn pressure_dyn_cm2(&self, reduced: f64, temperature_k: f64, volume_cm3: f64) -> f64 {
        reduced * self.k_b * temperature_k / volume_cm3
    }

    /// Converts a reduced entropy or heat capacity (`S / k_B`) to erg/K.
    pub fn entropy_erg_k(&self, reduced: f64) -> f64 {
        reduced * self.k_b
    }
}
