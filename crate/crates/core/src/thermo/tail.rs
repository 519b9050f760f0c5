//! High-frequency tail integrals.
//!
//! Above the cutoff the mode staircase is replaced by the continuum density
//! `w^2 / pi^2`. With `x = w / t` each thermodynamic tail becomes
//! `(t^3 / pi^2) * I(x_e)` where `I` is one of the Bose integrals below. They
//! are evaluated from `1/(e^x - 1) = sum_k e^(-k x)` integrated termwise,
//! which gives an exact exponentially convergent series for `x_e > 0`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::summation::CompensatedSum;

const ZETA_3: f64 = 1.202_056_903_159_594_2;
const MAX_TERMS: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TailKind {
    /// `int x^2 ln(1 - e^-x) dx`
    Free,
    /// `int x^3 / (e^x - 1) dx`
    Energy,
    /// `int x^2 / (e^x - 1) dx`
    Number,
    /// `int x^4 e^x / (e^x - 1)^2 dx`
    Heat,
}

impl TailKind {
    pub const ALL: [TailKind; 4] = [TailKind::Free, TailKind::Energy, TailKind::Number, TailKind::Heat];

    /// Value of the integral over `[0, inf)`.
    pub fn full_range(self) -> f64 {
        let pi4 = PI.powi(4);
        match self {
            TailKind::Free => -pi4 / 45.0,
            TailKind::Energy => pi4 / 15.0,
            TailKind::Number => 2.0 * ZETA_3,
            TailKind::Heat => 4.0 * pi4 / 15.0,
        }
    }

    #[inline]
    fn series_term(self, x: f64, k: f64, decay: f64) -> f64 {
        let x2 = x * x;
        let poly = match self {
            TailKind::Free => -(x2 / (k * k) + 2.0 * x / (k * k * k) + 2.0 / (k * k * k * k)),
            TailKind::Energy => {
                x2 * x / k + 3.0 * x2 / (k * k) + 6.0 * x / (k * k * k) + 6.0 / (k * k * k * k)
            }
            TailKind::Number => x2 / k + 2.0 * x / (k * k) + 2.0 / (k * k * k),
            TailKind::Heat => {
                x2 * x2
                    + 4.0 * x2 * x / k
                    + 12.0 * x2 / (k * k)
                    + 24.0 * x / (k * k * k)
                    + 24.0 / (k * k * k * k)
            }
        };
        decay * poly
    }
}

/// `int_{x_e}^inf` of the integrand selected by `kind`. Negative `x_e` is
/// treated as zero.
pub fn tail_integral(kind: TailKind, lower: f64) -> f64 {
    if !(lower > 0.0) {
        return kind.full_range();
    }
    let mut acc = CompensatedSum::new();
    let mut k = 1u64;
    loop {
        let kf = k as f64;
        let decay = (-kf * lower).exp();
        if decay == 0.0 {
            break;
        }
        let term = kind.series_term(lower, kf, decay);
        acc.add(term);
        if term.abs() < 1e-16 * acc.value().abs() || k >= MAX_TERMS {
            break;
        }
        k += 1;
    }
    acc.value()
}
