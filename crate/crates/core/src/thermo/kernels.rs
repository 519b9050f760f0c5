//! Bose-Einstein kernels for a single oscillator at `x = hbar omega / (k_B T)`.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// Mean occupation `1 / (e^x - 1)`.
pub fn occupancy(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "occupancy needs a positive photon energy, got {x}"
        )));
    }
    Ok(OscillatorTerms::at(x).occupancy)
}

/// `ln(1 - e^-x)` for `x > 0`.
pub fn log_one_minus_exp(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "ln(1 - e^-x) needs x > 0, got {x}"
        )));
    }
    Ok(OscillatorTerms::at(x).log_one_minus_exp)
}

/// Per-oscillator contributions, all derived from one `exp(-x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct OscillatorTerms {
    /// `ln(1 - e^-x)`, the free energy in units of `k_B T`.
    pub log_one_minus_exp: f64,
    /// `1 / (e^x - 1)`.
    pub occupancy: f64,
    /// `x^2 e^x / (e^x - 1)^2`, the heat capacity in units of `k_B`.
    pub heat: f64,
}

impl OscillatorTerms {
    #[inline]
    pub fn at(x: f64) -> Self {
        let e = (-x).exp();
        if e == 0.0 {
            return Self {
                log_one_minus_exp: 0.0,
                occupancy: 0.0,
                heat: 0.0,
            };
        }
        // 1 - e^-x without cancellation; above ln 2 the subtraction is exact enough
        // and ln_1p keeps the log accurate as e^-x -> 0.
        let (one_minus_e, log) = if x < LN_2 {
            let d = -(-x).exp_m1();
            (d, d.ln())
        } else {
            (1.0 - e, (-e).ln_1p())
        };
        let occupancy = e / one_minus_e;
        Self {
            log_one_minus_exp: log,
            occupancy,
            heat: x * x * (e / one_minus_e) / one_minus_e,
        }
    }
}
