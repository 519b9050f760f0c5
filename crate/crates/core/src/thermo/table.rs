use std::f64::consts::PI;

use super::kernels::OscillatorTerms;
use super::tail::{tail_integral, TailKind};
use crate::error::Result;
use crate::spectrum::{for_each_mode_in_shell, CuboidGeometry, ModeBudget};
use crate::summation::CompensatedSum;

/// Frequencies of one cavity below a fixed cutoff, kept in memory so that
/// repeated evaluations at different temperatures skip the enumeration.
#[derive(Debug, Clone)]
pub struct ModeTable {
    omega_e: f64,
    single: Vec<f64>,
    double: Vec<f64>,
}

/// Entropy-side functions from a [`ModeTable`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyTerms {
    pub entropy: f64,
    pub photons: f64,
    pub energy: f64,
}

impl ModeTable {
    pub fn build(geom: &CuboidGeometry, omega_e: f64, budget: ModeBudget) -> Result<Self> {
        budget.check(geom, omega_e)?;
        let mut single = Vec::new();
        let mut double = Vec::new();
        for_each_mode_in_shell(geom, 0.0, omega_e, |_, g, omega| {
            if g == 2 {
                double.push(omega)
            } else {
                single.push(omega)
            }
        });
        Ok(Self {
            omega_e,
            single,
            double,
        })
    }

    pub fn omega_e(&self) -> f64 {
        self.omega_e
    }

    pub fn len(&self) -> usize {
        self.single.len() + self.double.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entropy, photon number and energy at reduced temperature `t`.
    pub fn entropy_terms(&self, t: f64) -> EntropyTerms {
        let inv_t = 1.0 / t;
        // [entropy, photons, energy] for g = 1 and g = 2 modes
        let mut sums = [[CompensatedSum::new(); 3]; 2];
        for (acc, modes) in sums.iter_mut().zip([&self.single, &self.double]) {
            for &omega in modes {
                let x = omega * inv_t;
                let terms = OscillatorTerms::at(x);
                let energy = x * terms.occupancy;
                acc[0].add(energy - terms.log_one_minus_exp);
                acc[1].add(terms.occupancy);
                acc[2].add(energy);
            }
        }
        let discrete = |i: usize| sums[0][i].value() + 2.0 * sums[1][i].value();

        let lower = self.omega_e / t;
        let weight = t * t * t / (PI * PI);
        let tail_energy = weight * tail_integral(TailKind::Energy, lower);
        let tail_free = weight * tail_integral(TailKind::Free, lower);
        EntropyTerms {
            entropy: discrete(0) + (tail_energy - tail_free),
            photons: discrete(1) + weight * tail_integral(TailKind::Number, lower),
            energy: discrete(2) + tail_energy,
        }
    }
}
