//! Electromagnetic eigenmodes of a cuboid cavity with ideally conducting walls.
//!
//! Frequencies are normalized as `w = omega a / c` with `a = (X Y Z)^(1/3)`, so
//! that a mode `(nx, ny, nz)` sits at
//!
//! ```text
//! w = pi a sqrt((nx/X)^2 + (ny/Y)^2 + (nz/Z)^2)
//!   = pi (alpha beta)^(-2/3) sqrt(nx^2 beta^2 + ny^2 alpha^2 + nz^2 alpha^2 beta^2)
//! ```
//!
//! A triple is a mode when at least two indices are nonzero. It carries two
//! polarizations when all three are nonzero and one otherwise. Distinct
//! triples that happen to share a frequency (cube symmetry and the like) are
//! kept as separate records, so `g` is only ever the polarization count.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable that caps the number of modes a single enumeration
/// or summation may visit.
pub const MODE_BUDGET_ENV: &str = "CAVITY_THERMO_MAX_MODES";

const DEFAULT_MODE_BUDGET: u64 = 400_000_000;

/// Cuboid cavity with edges `X`, `Y`, `Z` (any common length unit; cm at the
/// CLI boundary).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CuboidGeometry {
    x: f64,
    y: f64,
    z: f64,
}

impl CuboidGeometry {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        for (name, v) in [("X", x), ("Y", y), ("Z", z)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidGeometry(format!(
                    "edge {name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(Self { x, y, z })
    }

    pub fn cube(edge: f64) -> Result<Self> {
        Self::new(edge, edge, edge)
    }

    /// Builds the cuboid with `X/Z = alpha`, `Y/Z = beta` and `(XYZ)^(1/3) = scale`.
    pub fn from_shape(alpha: f64, beta: f64, scale: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("scale", scale)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidGeometry(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        let z = scale / (alpha * beta).cbrt();
        Self::new(alpha * z, beta * z, z)
    }

    pub fn edges(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn alpha(&self) -> f64 {
        self.x / self.z
    }

    pub fn beta(&self) -> f64 {
        self.y / self.z
    }

    /// Volume scale `a = V^(1/3)`.
    pub fn scale(&self) -> f64 {
        self.volume().cbrt()
    }

    pub fn volume(&self) -> f64 {
        self.x * self.y * self.z
    }

    /// Same shape, every edge multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.x * factor, self.y * factor, self.z * factor)
    }

    /// Same volume scale with a different shape.
    pub fn with_shape(&self, alpha: f64, beta: f64) -> Result<Self> {
        Self::from_shape(alpha, beta, self.scale())
    }

    /// Same shape with a different volume scale.
    pub fn with_scale(&self, scale: f64) -> Result<Self> {
        Self::from_shape(self.alpha(), self.beta(), scale)
    }

    /// Per-axis frequency steps `pi a / L_i`; `w^2 = sum (k_i n_i)^2`.
    pub fn axis_steps(&self) -> [f64; 3] {
        let a = self.scale();
        [PI * a / self.x, PI * a / self.y, PI * a / self.z]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeRecord {
    pub n: [u32; 3],
    /// Polarization degeneracy, 1 or 2.
    pub g: u8,
    /// Normalized frequency `omega a / c`.
    pub omega: f64,
}

/// Number of independent polarizations of the triple, or `None` if the
/// triple is not a mode (two or more zero indices).
pub fn polarization_degeneracy(n: [u32; 3]) -> Option<u8> {
    match n.iter().filter(|&&k| k == 0).count() {
        0 => Some(2),
        1 => Some(1),
        _ => None,
    }
}

#[inline]
fn squared_frequency(steps: &[f64; 3], n: [u32; 3]) -> f64 {
    let kx = steps[0] * n[0] as f64;
    let ky = steps[1] * n[1] as f64;
    let kz = steps[2] * n[2] as f64;
    (kx * kx + ky * ky) + kz * kz
}

pub fn normalized_frequency(n: [u32; 3], geom: &CuboidGeometry) -> Result<f64> {
    if polarization_degeneracy(n).is_none() {
        return Err(Error::NotAMode(n[0], n[1], n[2]));
    }
    Ok(squared_frequency(&geom.axis_steps(), n).sqrt())
}

/// Limit on how many modes one enumeration or summation may touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeBudget {
    pub max_modes: u64,
}

impl Default for ModeBudget {
    fn default() -> Self {
        Self {
            max_modes: DEFAULT_MODE_BUDGET,
        }
    }
}

impl ModeBudget {
    pub const fn new(max_modes: u64) -> Self {
        Self { max_modes }
    }

    /// Reads [`MODE_BUDGET_ENV`], falling back to the default when it is
    /// unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(MODE_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v >= 1.0)
            .map(|v| Self::new(v as u64))
            .unwrap_or_default()
    }

    pub fn check(&self, geom: &CuboidGeometry, cutoff: f64) -> Result<()> {
        let predicted = predicted_mode_count(geom, cutoff);
        if predicted > self.max_modes {
            return Err(Error::CutoffTooLarge {
                cutoff,
                predicted,
                budget: self.max_modes,
            });
        }
        Ok(())
    }
}

/// Estimated number of mode records (not weighted by `g`) with `w <= cutoff`:
/// the volume term of the lattice count plus the coordinate-plane modes.
pub fn predicted_mode_count(geom: &CuboidGeometry, cutoff: f64) -> u64 {
    if !(cutoff > 0.0) {
        return 0;
    }
    let [kx, ky, kz] = geom.axis_steps();
    let bulk = cutoff.powi(3) / (6.0 * PI * PI);
    let planes = PI * cutoff * cutoff / 4.0 * (1.0 / (kx * ky) + 1.0 / (ky * kz) + 1.0 / (kx * kz));
    (bulk + planes).ceil() as u64
}

/// Visits every mode with `lower < w <= upper` in lexicographic `(nx, ny, nz)`
/// order, passing the triple, its degeneracy and `w`.
///
/// Nothing is materialized; this is the streaming form of
/// [`enumerate_modes`] used by the thermodynamic sums.
pub fn for_each_mode_in_shell<F>(geom: &CuboidGeometry, lower: f64, upper: f64, mut visit: F)
where
    F: FnMut([u32; 3], u8, f64),
{
    if !(upper > lower) || !(upper > 0.0) {
        return;
    }
    let steps = geom.axis_steps();
    let lower = lower.max(0.0);
    let [kx, ky, kz] = steps;
    let nx_max = (upper / kx).ceil() as u32 + 1;
    let ny_max = (upper / ky).ceil() as u32 + 1;
    let lower_sq = lower * lower;

    for nx in 0..=nx_max {
        let fx = kx * nx as f64;
        let qx = fx * fx;
        if qx.sqrt() > upper {
            break;
        }
        for ny in 0..=ny_max {
            if nx == 0 && ny == 0 {
                continue;
            }
            let fy = ky * ny as f64;
            let qxy = qx + fy * fy;
            if qxy.sqrt() > upper {
                break;
            }
            // nz may be zero only when nx and ny are both nonzero.
            let nz_min: u32 = if nx == 0 || ny == 0 { 1 } else { 0 };
            let mut nz = if qxy < lower_sq {
                let skip = ((lower_sq - qxy).sqrt() / kz).floor() as u32;
                skip.saturating_sub(1).max(nz_min)
            } else {
                nz_min
            };
            loop {
                let fz = kz * nz as f64;
                let omega = (qxy + fz * fz).sqrt();
                if omega > upper {
                    break;
                }
                if omega > lower {
                    let g = if nx == 0 || ny == 0 || nz == 0 { 1 } else { 2 };
                    visit([nx, ny, nz], g, omega);
                }
                nz += 1;
            }
        }
    }
}

/// All modes with `w <= cutoff`, ascending in `w` with ties broken
/// lexicographically on the index triple.
pub fn enumerate_modes(
    geom: &CuboidGeometry,
    cutoff: f64,
    budget: ModeBudget,
) -> Result<Vec<ModeRecord>> {
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "cutoff must be finite and positive, got {cutoff}"
        )));
    }
    budget.check(geom, cutoff)?;
    let mut modes = Vec::with_capacity(predicted_mode_count(geom, cutoff) as usize);
    for_each_mode_in_shell(geom, 0.0, cutoff, |n, g, omega| {
        modes.push(ModeRecord { n, g, omega });
    });
    modes.sort_by(|a, b| a.omega.total_cmp(&b.omega).then(a.n.cmp(&b.n)));
    Ok(modes)
}

/// Weighted staircase `N(w) = sum g` over modes with frequency at most `omega`.
pub fn weighted_mode_count(geom: &CuboidGeometry, omega: f64) -> u64 {
    let mut total = 0u64;
    for_each_mode_in_shell(geom, 0.0, omega, |_, g, _| total += g as u64);
    total
}

/// `M` cubes of edge `cube_edge` joined in a row along `X`.
pub fn merge_inline(cubes: u32, cube_edge: f64) -> Result<CuboidGeometry> {
    merge_block([cubes, 1, 1], cube_edge)
}

/// `Mx * My * Mz` cubes joined into one `Mx a x My a x Mz a` block.
pub fn merge_block(counts: [u32; 3], cube_edge: f64) -> Result<CuboidGeometry> {
    if counts.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "cube counts must be at least 1, got {counts:?}"
        )));
    }
    CuboidGeometry::new(
        counts[0] as f64 * cube_edge,
        counts[1] as f64 * cube_edge,
        counts[2] as f64 * cube_edge,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit_cube() -> CuboidGeometry {
        CuboidGeometry::cube(1.0).unwrap()
    }

    #[test]
    fn cube_frequencies() {
        let g = unit_cube();
        let w110 = normalized_frequency([1, 1, 0], &g).unwrap();
        let w111 = normalized_frequency([1, 1, 1], &g).unwrap();
        assert!((w110 - PI * 2f64.sqrt()).abs() < 1e-14);
        assert!((w111 - PI * 3f64.sqrt()).abs() < 1e-14);
        assert!((w110 - 4.442_883).abs() < 1e-6);
        assert!((w111 - 5.441_398).abs() < 1e-6);
    }

    #[test]
    fn elongated_frequency_both_forms() {
        let g = CuboidGeometry::from_shape(10.0, 10.0, 1.0).unwrap();
        let w = normalized_frequency([1, 0, 1], &g).unwrap();
        let closed = PI * 10100f64.sqrt() / 100f64.powf(2.0 / 3.0);
        let [x, y, z] = g.edges();
        let edge_form = PI * g.scale() * ((1.0 / x).powi(2) + (0.0 / y).powi(2) + (1.0 / z).powi(2)).sqrt();
        assert!((w - closed).abs() < 1e-12 * closed);
        assert!((w - edge_form).abs() < 1e-12 * closed);
        assert!((w - 14.655).abs() < 1e-3);
    }

    #[test]
    fn not_a_mode() {
        assert_eq!(polarization_degeneracy([1, 0, 0]), None);
        assert_eq!(polarization_degeneracy([0, 0, 0]), None);
        assert_eq!(polarization_degeneracy([1, 1, 0]), Some(1));
        assert_eq!(polarization_degeneracy([2, 3, 1]), Some(2));
        assert_eq!(
            normalized_frequency([0, 0, 3], &unit_cube()),
            Err(Error::NotAMode(0, 0, 3))
        );
    }

    #[test]
    fn lowest_cube_shells() {
        let modes = enumerate_modes(&unit_cube(), 5.0, ModeBudget::default()).unwrap();
        let triples: Vec<_> = modes.iter().map(|m| m.n).collect();
        assert_eq!(triples, vec![[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert!(modes.iter().all(|m| m.g == 1));

        let modes = enumerate_modes(&unit_cube(), 5.5, ModeBudget::default()).unwrap();
        assert_eq!(modes.len(), 4);
        assert_eq!(modes.iter().map(|m| m.g as u32).sum::<u32>(), 5);
        assert_eq!(modes[3].n, [1, 1, 1]);
    }

    #[test]
    fn equality_at_cutoff_is_included() {
        let g = unit_cube();
        let w = normalized_frequency([1, 1, 0], &g).unwrap();
        let modes = enumerate_modes(&g, w, ModeBudget::default()).unwrap();
        assert_eq!(modes.len(), 3);
    }

    #[test]
    fn rejects_over_budget_cutoff() {
        let err = enumerate_modes(&unit_cube(), 500.0, ModeBudget::new(1000)).unwrap_err();
        assert!(matches!(err, Error::CutoffTooLarge { budget: 1000, .. }));
    }

    #[test]
    fn rejects_non_positive_cutoff() {
        assert!(enumerate_modes(&unit_cube(), 0.0, ModeBudget::default()).is_err());
    }

    #[test]
    fn shape_reconstruction_round_trip() {
        let g = CuboidGeometry::new(0.1, 0.2, 0.3).unwrap();
        let h = CuboidGeometry::from_shape(g.alpha(), g.beta(), g.scale()).unwrap();
        for (u, v) in g.edges().iter().zip(h.edges()) {
            assert!((u - v).abs() <= 1e-14 * u, "{u} vs {v}");
        }
    }

    #[test]
    fn invalid_geometry() {
        assert!(CuboidGeometry::new(0.0, 1.0, 1.0).is_err());
        assert!(CuboidGeometry::new(1.0, f64::NAN, 1.0).is_err());
        assert!(CuboidGeometry::from_shape(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn inline_merge() {
        let one = merge_inline(1, 0.3).unwrap();
        assert_eq!(one.edges(), [0.3, 0.3, 0.3]);

        let fifty = merge_inline(50, 0.3).unwrap();
        assert_eq!(fifty.edges(), [15.0, 0.3, 0.3]);
        assert!((fifty.volume() - 50.0 * 0.027).abs() < 1e-14);

        let two = merge_inline(2, 1.0).unwrap();
        assert_eq!(two.alpha(), 2.0);
        assert_eq!(two.beta(), 1.0);
        assert!((two.scale() - 2f64.cbrt()).abs() < 1e-15);

        assert!(merge_block([0, 1, 1], 1.0).is_err());
    }

    #[test]
    fn staircase_tracks_volume_term() {
        // N(w) -> w^3 / (3 pi^2) with a relative gap that closes as w grows.
        let g = unit_cube();
        let gap = |w: f64| {
            let smooth = w.powi(3) / (3.0 * PI * PI);
            (weighted_mode_count(&g, w) as f64 - smooth).abs() / smooth
        };
        let (g1, g2, g3) = (gap(20.0), gap(60.0), gap(180.0));
        assert!(g1 > g2 && g2 > g3, "{g1} {g2} {g3}");
        assert!(g3 < 0.03);
    }

    #[test]
    fn shell_visits_partition_the_ball() {
        let g = CuboidGeometry::new(1.0, 2.0, 3.0).unwrap();
        let mut whole = Vec::new();
        for_each_mode_in_shell(&g, 0.0, 30.0, |n, _, _| whole.push(n));
        let mut pieces = Vec::new();
        for (lo, hi) in [(0.0, 7.5), (7.5, 12.0), (12.0, 30.0)] {
            for_each_mode_in_shell(&g, lo, hi, |n, _, _| pieces.push(n));
        }
        whole.sort();
        pieces.sort();
        assert_eq!(whole, pieces);
    }

    proptest! {
        #[test]
        fn frequency_is_permutation_symmetric(
            nx in 0u32..6, ny in 1u32..6, nz in 1u32..6,
            x in 0.1f64..5.0, y in 0.1f64..5.0, z in 0.1f64..5.0,
        ) {
            let g = CuboidGeometry::new(x, y, z).unwrap();
            let w = normalized_frequency([nx, ny, nz], &g).unwrap();
            let h = CuboidGeometry::new(z, x, y).unwrap();
            let v = normalized_frequency([nz, nx, ny], &h).unwrap();
            prop_assert!((w - v).abs() <= 1e-12 * w);
        }

        #[test]
        fn frequency_ignores_volume_scale(
            nx in 1u32..6, ny in 0u32..6, nz in 1u32..6,
            x in 0.1f64..5.0, y in 0.1f64..5.0, z in 0.1f64..5.0,
            lambda in 1e-3f64..1e3,
        ) {
            let g = CuboidGeometry::new(x, y, z).unwrap();
            let w = normalized_frequency([nx, ny, nz], &g).unwrap();
            let v = normalized_frequency([nx, ny, nz], &g.scaled(lambda).unwrap()).unwrap();
            prop_assert!((w - v).abs() <= 1e-12 * w);
        }

        #[test]
        fn smaller_cutoff_is_a_prefix(
            x in 0.3f64..3.0, y in 0.3f64..3.0, c1 in 3.0f64..15.0, extra in 0.0f64..10.0,
        ) {
            let g = CuboidGeometry::new(x, y, 1.0).unwrap();
            let small = enumerate_modes(&g, c1, ModeBudget::default()).unwrap();
            let large = enumerate_modes(&g, c1 + extra, ModeBudget::default()).unwrap();
            prop_assert!(small.len() <= large.len());
            prop_assert_eq!(&large[..small.len()], &small[..]);
        }

        #[test]
        fn records_satisfy_mode_invariants(x in 0.2f64..4.0, y in 0.2f64..4.0, c in 1.0f64..20.0) {
            let g = CuboidGeometry::new(x, y, 1.0).unwrap();
            let modes = enumerate_modes(&g, c, ModeBudget::default()).unwrap();
            for m in &modes {
                prop_assert_eq!(Some(m.g), polarization_degeneracy(m.n));
                prop_assert!(m.omega > 0.0 && m.omega <= c);
                prop_assert_eq!(m.omega, normalized_frequency(m.n, &g).unwrap());
            }
            for w in modes.windows(2) {
                prop_assert!(w[0].omega < w[1].omega || (w[0].omega == w[1].omega && w[0].n < w[1].n));
            }
        }
    }
}
