use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// `points` values from `start` to `stop` inclusive. Both ends must be
/// positive and, for more than one point, `start < stop`.
pub fn grid(start: f64, stop: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if points == 0 {
        return Err(Error::InvalidArgument("grid needs at least one point".into()));
    }
    if !(start > 0.0 && stop > 0.0 && start.is_finite() && stop.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "grid bounds must be finite and positive, got {start}..{stop}"
        )));
    }
    if points == 1 {
        return Ok(vec![start]);
    }
    if !(start < stop) {
        return Err(Error::InvalidArgument(format!(
            "grid must be increasing, got {start}..{stop}"
        )));
    }
    let last = (points - 1) as f64;
    let values: Vec<f64> = (0..points)
        .map(|i| {
            let s = i as f64 / last;
            match spacing {
                Spacing::Linear => start + (stop - start) * s,
                Spacing::Log => (start.ln() + (stop.ln() - start.ln()) * s).exp(),
            }
        })
        .collect();
    let mut values = values;
    // pin the endpoints exactly
    values[0] = start;
    values[points - 1] = stop;
    ensure_increasing(&values)?;
    Ok(values)
}

pub fn ensure_increasing(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    if values.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidArgument("grid values must be finite and positive".into()));
    }
    if values.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidArgument("grid must be strictly increasing".into()));
    }
    Ok(())
}
