//! Reduced temperature at which a cavity holds a prescribed entropy.

use crate::error::{Error, Result};
use crate::spectrum::{CuboidGeometry, ModeBudget};
use crate::thermo::{resolved_cutoff, CutoffPolicy, EntropyTerms, ModeTable, Quantity, ThermoState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Relative tolerance on the entropy residual.
    pub rel_tol: f64,
    pub max_iterations: usize,
    /// Bracket doublings/halvings allowed before giving up.
    pub max_expansions: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_iterations: 200,
            max_expansions: 60,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropySolution {
    pub t: f64,
    /// Cutoff held fixed during the search.
    pub omega_e: f64,
    /// Functions at the solution, same cutoff.
    pub terms: EntropyTerms,
    pub iterations: usize,
}

/// Finds `t` with `S_red(geom, t) = target` by bisection.
///
/// `S_red` is strictly increasing in `t` at a fixed cutoff, so the root is
/// unique. The cutoff is resolved once at the geometric centre of `hint`
/// (adaptive policy) and then held fixed; the bracket is widened by factors
/// of two until it straddles the target.
pub fn solve_temperature_for_entropy(
    geom: &CuboidGeometry,
    target: f64,
    hint: (f64, f64),
    cutoff: CutoffPolicy,
    budget: ModeBudget,
    options: SolverOptions,
) -> Result<EntropySolution> {
    if !(target > 0.0 && target.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "entropy target must be finite and positive, got {target}"
        )));
    }
    let (mut lo, mut hi) = hint;
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "bracket hint must satisfy 0 < lo <= hi, got ({lo}, {hi})"
        )));
    }
    // The cutoff is resolved near the bracket; if widening moves the bracket
    // far from where it was resolved, resolve again there.
    let mut resolved_at = f64::NAN;
    let mut table = None;
    for _ in 0..4 {
        let centre = (lo * hi).sqrt();
            if (centre / resolved_at).ln().abs() < 2f64.ln() {
            break;
        }
        let state = ThermoState::new(*geom, centre, cutoff)?.with_budget(budget);
        let omega_e = resolved_cutoff(&state, Quantity::All)?;
        let t = ModeTable::build(geom, omega_e, budget)?;
        (lo, hi) = bracket(&t, target, lo, hi, options)?;
        resolved_at = centre;
        table = Some(t);
        if matches!(cutoff, CutoffPolicy::Fixed(_)) {
            break;
        }
    }
    let table = table.expect("at least one resolution round");
    let omega_e = table.omega_e();
    let entropy = |t: f64| table.entropy_terms(t);

    for iteration in 1..=options.max_iterations {
        let mid = 0.5 * (lo + hi);
        let terms = entropy(mid);
        let residual = terms.entropy - target;
        if residual.abs() <= options.rel_tol * target || mid <= lo || mid >= hi {
            return Ok(EntropySolution {
                t: mid,
                omega_e,
                terms,
                iterations: iteration,
            });
        }
        if residual < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::SolverFailure(format!(
        "bisection did not reach relative tolerance {:e} in {} iterations; bracket [{lo:e}, {hi:e}]",
        options.rel_tol, options.max_iterations
    )))
}

fn bracket(
    table: &ModeTable,
    target: f64,
    mut lo: f64,
    mut hi: f64,
    options: SolverOptions,
) -> Result<(f64, f64)> {
    let entropy = |t: f64| table.entropy_terms(t).entropy;
    let mut s_lo = entropy(lo);
    let mut s_hi = entropy(hi);
    let mut expansions = 0;
    while s_lo > target || s_hi < target {
        if expansions == options.max_expansions {
            return Err(Error::SolverFailure(format!(
                "no bracket after {expansions} expansions: S({lo:e}) = {s_lo:e}, S({hi:e}) = {s_hi:e}, target {target:e}"
            )));
        }
        if s_lo > target {
            lo *= 0.5;
            s_lo = entropy(lo);
        }
        if s_hi < target {
            hi *= 2.0;
            s_hi = entropy(hi);
        }
        expansions += 1;
    }
    Ok((lo, hi))
}
