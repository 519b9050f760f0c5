//! Finite-difference derivatives of the free energy. The cutoff is resolved
//! once at the base state and then held fixed across the stencil, so the
//! differentiated function is smooth.

use super::eval::{auto_cutoff, evaluate_fixed, Quantity};
use super::state::{CutoffPolicy, ThermoState};
use crate::error::Result;
use crate::spectrum::CuboidGeometry;

/// Relative step for the shape derivatives.
pub const SHAPE_STEP: f64 = 1e-4;

/// Cutoff the state resolves to for `quantity`.
pub fn resolved_cutoff(state: &ThermoState, quantity: Quantity) -> Result<f64> {
    match state.cutoff {
        CutoffPolicy::Fixed(w) => Ok(w),
        CutoffPolicy::Adaptive { .. } => Ok(auto_cutoff(state, quantity)?.omega_e),
    }
}

/// Five-point centered derivative of `f` at `x` with absolute step `h`.
pub fn five_point<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (p1, m1) = (f(x + h)?, f(x - h)?);
    let (p2, m2) = (f(x + 2.0 * h)?, f(x - 2.0 * h)?);
    Ok((8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h))
}

/// `(Lambda_alpha, Lambda_beta) = dF/d(alpha), dF/d(beta)` at fixed `t` and
/// volume scale, in units of `k_B T`.
pub fn shape_forces(state: &ThermoState) -> Result<[f64; 2]> {
    shape_forces_with_step(state, SHAPE_STEP)
}

pub fn shape_forces_with_step(state: &ThermoState, rel_step: f64) -> Result<[f64; 2]> {
    let omega_e = resolved_cutoff(state, Quantity::FreeEnergy)?;
    let geom = state.geom;
    let (alpha, beta, scale) = (geom.alpha(), geom.beta(), geom.scale());
    let free = |a: f64, b: f64| -> Result<f64> {
        let g = CuboidGeometry::from_shape(a, b, scale)?;
        Ok(evaluate_fixed(&g, state.t, omega_e, state.budget)?.free_energy)
    };
    let central = |x: f64, f: &dyn Fn(f64) -> Result<f64>| -> Result<f64> {
        let h = x * rel_step;
        Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
    };
    Ok([
        central(alpha, &|a| free(a, beta))?,
        central(beta, &|b| free(alpha, b))?,
    ])
}

/// Fixed-shape pressure `-V dF/dV / (k_B T)` from a five-point volume
/// difference at constant temperature. Equals `E_red / 3` when the
/// thermodynamics are consistent.
pub fn volume_derivative_pressure(state: &ThermoState, rel_step: f64) -> Result<f64> {
    let omega_e = resolved_cutoff(state, Quantity::FreeEnergy)?;
    // t scales as V^(1/3) at fixed T.
    let free = |v: f64| -> Result<f64> {
        Ok(evaluate_fixed(&state.geom, state.t * v.cbrt(), omega_e, state.budget)?.free_energy)
    };
    Ok(-five_point(free, 1.0, rel_step)?)
}

/// `-T^2 d(F/T)/dT / (k_B T)` at fixed volume and shape. Equals `E_red`.
pub fn temperature_derivative_energy(state: &ThermoState, rel_step: f64) -> Result<f64> {
    let omega_e = resolved_cutoff(state, Quantity::FreeEnergy)?;
    let t = state.t;
    let free = |s: f64| -> Result<f64> {
        Ok(evaluate_fixed(&state.geom, t * s, omega_e, state.budget)?.free_energy)
    };
    Ok(-five_point(free, 1.0, rel_step)?)
}

/// `d(t E_red)/dt` at fixed geometry and cutoff; equals `C_V / k_B`.
pub fn temperature_derivative_heat(state: &ThermoState, rel_step: f64) -> Result<f64> {
    let omega_e = resolved_cutoff(state, Quantity::Energy)?;
    let t = state.t;
    let te = |s: f64| -> Result<f64> {
        Ok(t * s * evaluate_fixed(&state.geom, t * s, omega_e, state.budget)?.energy)
    };
    Ok(five_point(te, 1.0, rel_step)? / t)
}
