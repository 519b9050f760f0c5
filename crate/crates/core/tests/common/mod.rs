//! Independent oracles for the integration tests. Nothing here calls into
//! the library's summation or tail code.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Adaptive Gauss-Kronrod (7/15) quadrature of `f` over `[a, b]`.
pub fn quad<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    const XGK: [f64; 8] = [
        0.991_455_371_120_812_6,
        0.949_107_912_342_758_5,
        0.864_864_423_359_769_1,
        0.741_531_185_599_394_4,
        0.586_087_235_467_691_1,
        0.405_845_151_377_397_2,
        0.207_784_955_007_898_5,
        0.0,
    ];
    const WGK: [f64; 8] = [
        0.022_935_322_010_529_22,
        0.063_092_092_629_978_55,
        0.104_790_010_322_250_2,
        0.140_653_259_715_525_9,
        0.169_004_726_639_267_9,
        0.190_350_578_064_785_4,
        0.204_432_940_075_298_9,
        0.209_482_141_084_727_8,
    ];
    const WG: [f64; 4] = [
        0.129_484_966_168_869_7,
        0.279_705_391_489_276_7,
        0.381_830_050_505_118_9,
        0.417_959_183_673_469_4,
    ];

    fn rule<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let fc = f(c);
        let mut kronrod = WGK[7] * fc;
        let mut gauss = WG[3] * fc;
        for i in 0..7 {
            let dx = h * XGK[i];
            let s = f(c - dx) + f(c + dx);
            kronrod += WGK[i] * s;
            if i % 2 == 1 {
                gauss += WG[i / 2] * s;
            }
        }
        (kronrod * h, ((kronrod - gauss) * h).abs())
    }

    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (value, err) = rule(f, a, b);
        if err <= tol.max(1e-13 * value.abs()) || depth == 0 {
            return value;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1) + recurse(f, m, b, 0.5 * tol, depth - 1)
    }

    recurse(f, a, b, tol, 18)
}

/// `int_{lower}^inf` of the Bose integrand named by `kind`, by quadrature.
pub fn bose_tail_by_quadrature(kind: &str, lower: f64) -> f64 {
    let f = |x: f64| -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let e = (-x).exp();
        match kind {
            "free" => x * x * (1.0 - e).ln(),
            "energy" => x * x * x * e / (1.0 - e),
            "number" => x * x * e / (1.0 - e),
            "heat" => x.powi(4) * e / ((1.0 - e) * (1.0 - e)),
            _ => panic!("unknown kind {kind}"),
        }
    };
    // Integrand is below 1e-30 of its peak well before lower + 120.
    let upper = lower + 120.0;
    // Split at integers so each panel sees a smooth piece.
    let mut total = 0.0;
    let mut a = lower;
    while a < upper {
        let b = (a.floor() + 1.0).min(upper);
        total += quad(&f, a, b, 1e-16);
        a = b;
    }
    total
}

/// Sums over every mode with normalized frequency up to `omega_max`, no tail.
#[derive(Debug, Clone, Copy)]
pub struct DirectSums {
    pub free: f64,
    pub energy: f64,
    pub photons: f64,
    pub pressure: [f64; 3],
}

impl DirectSums {
    pub fn entropy(&self) -> f64 {
        self.energy - self.free
    }
}

/// Naive triple loop over `(nx, ny, nz)` for a cavity with edges `edges`
/// at reduced temperature `t`. Face pressures follow the per-face formula
/// `p_i V / k_B T = pi (B/T) sum g n(x) (n_i/L_i)^2 / sqrt(sum (n_j/L_j)^2)`
/// written with `B/T = a/t`.
pub fn direct_sums(edges: [f64; 3], t: f64, omega_max: f64) -> DirectSums {
    let a = (edges[0] * edges[1] * edges[2]).cbrt();
    let bound = |l: f64| (omega_max * l / (PI * a)) as u32 + 2;
    let mut out = DirectSums {
        free: 0.0,
        energy: 0.0,
        photons: 0.0,
        pressure: [0.0; 3],
    };
    for nx in 0..bound(edges[0]) {
        for ny in 0..bound(edges[1]) {
            for nz in 0..bound(edges[2]) {
                let n = [nx, ny, nz];
                let zeros = n.iter().filter(|&&k| k == 0).count();
                if zeros >= 2 {
                    continue;
                }
                let g = if zeros == 0 { 2.0 } else { 1.0 };
                let r: [f64; 3] = [0, 1, 2].map(|i| n[i] as f64 / edges[i]);
                let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
                let omega = PI * a * norm;
                if omega > omega_max {
                    continue;
                }
                let x = omega / t;
                let occ = 1.0 / (x.exp() - 1.0);
                out.free += g * (1.0 - (-x).exp()).ln();
                out.energy += g * x * occ;
                out.photons += g * occ;
                for i in 0..3 {
                    out.pressure[i] += PI * (a / t) * g * occ * r[i] * r[i] / norm;
                }
            }
        }
    }
    out
}

/// Count of triples with at most one zero index and frequency <= omega, by
/// brute force over `n_i <= n_max`.
pub fn brute_force_mode_count(edges: [f64; 3], omega: f64, n_max: u32) -> (usize, u32) {
    let a = (edges[0] * edges[1] * edges[2]).cbrt();
    let mut records = 0;
    let mut weight = 0;
    for nx in 0..=n_max {
        for ny in 0..=n_max {
            for nz in 0..=n_max {
                let zeros = [nx, ny, nz].iter().filter(|&&k| k == 0).count();
                if zeros >= 2 {
                    continue;
                }
                let s = (nx as f64 / edges[0]).powi(2) + (ny as f64 / edges[1]).powi(2) + (nz as f64 / edges[2]).powi(2);
                if PI * a * s.sqrt() <= omega {
                    records += 1;
                    weight += if zeros == 0 { 2 } else { 1 };
                }
            }
        }
    }
    (records, weight)
}

/// Lowest two cube shells: three `g = 1` modes at `pi sqrt 2` and `(1,1,1)` with `g = 2` at `pi sqrt 3`.
pub fn two_shell_cube(t: f64) -> DirectSums {
    let shells = [(3.0, PI * 2f64.sqrt()), (2.0, PI * 3f64.sqrt())];
    let mut out = DirectSums {
        free: 0.0,
        energy: 0.0,
        photons: 0.0,
        pressure: [0.0; 3],
    };
    for (g, w) in shells {
        let x = w / t;
        let e = (-x).exp();
        out.free += g * (-e).ln_1p();
        out.energy += g * x * e / (1.0 - e);
        out.photons += g * e / (1.0 - e);
    }
    out
}

pub fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

/// Number of strict direction changes in a sampled curve.
pub fn turning_points(values: &[f64]) -> usize {
    let signs: Vec<f64> = values
        .windows(2)
        .map(|w| (w[1] - w[0]).signum())
        .filter(|s| *s != 0.0)
        .collect();
    signs.windows(2).filter(|s| s[0] != s[1]).count()
}

/// True if the curve rises then falls (or falls then rises) exactly once,
/// with the turning point strictly inside the sample.
pub fn single_interior_extremum(values: &[f64]) -> bool {
    if values.len() < 3 || turning_points(values) != 1 {
        return false;
    }
    let (imax, _) = values
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    let (imin, _) = values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
    let last = values.len() - 1;
    (imax != 0 && imax != last) || (imin != 0 && imin != last)
}
