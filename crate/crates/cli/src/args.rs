use std::path::PathBuf;

use cavity_thermo::experiments::{grid, Spacing};
use cavity_thermo::spectrum::CuboidGeometry;
use cavity_thermo::{CutoffPolicy, PhysicalConstants};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "cavity-thermo", version, about = "Photon-gas thermodynamics in a finite cuboid cavity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full thermodynamic report at one temperature
    Report(StateArgs),
    /// phi, E, S, N, C over a temperature grid
    EnergyCurve(StateArgs),
    /// Face pressure ratios p_i / p_av over a temperature grid
    PressureCurve(StateArgs),
    /// Temperature and photon-number change when M cubes merge at constant entropy
    MergeAdiabatic(MergeArgs),
    /// Energy needed to merge M cubes at constant temperature
    MergeIsothermal(MergeArgs),
    /// List of modes up to a frequency cutoff
    Modes(ModesArgs),
}

#[derive(Debug, Args)]
pub struct GeometryArgs {
    /// Edge along x, cm
    #[arg(long, value_name = "CM")]
    pub x_cm: Option<f64>,
    /// Edge along y, cm
    #[arg(long, value_name = "CM")]
    pub y_cm: Option<f64>,
    /// Edge along z, cm
    #[arg(long, value_name = "CM")]
    pub z_cm: Option<f64>,
    /// Shape ratio X/Z
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Shape ratio Y/Z
    #[arg(long)]
    pub beta: Option<f64>,
    /// Volume scale (XYZ)^(1/3), cm; defaults to 1 with --t-reduced
    #[arg(long, value_name = "CM")]
    pub edge_cm: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TemperatureArgs {
    /// Temperature in K: a value, a comma list, or a LO:HI range
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub temperature_k: Option<String>,
    /// Reduced temperature T a / B: a value, a comma list, or a LO:HI range
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub t_reduced: Option<String>,
    /// Number of points in a LO:HI range
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    pub spacing: SpacingArg,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Frequency cutoff: `auto` or a normalized frequency
    #[arg(long, default_value = "auto")]
    pub cutoff: String,
    /// Relative convergence tolerance for the automatic cutoff
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file; stdout when absent
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// JSON file with `hbar`, `c`, `k_b` (CGS) and optional `b_override`
    #[arg(long, value_name = "FILE")]
    pub constants: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[command(flatten)]
    pub temperature: TemperatureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MergeArgs {
    /// Number of cubes joined in a row
    #[arg(long, value_name = "M")]
    pub cubes: u32,
    /// Edge of one cube, cm; defaults to 1 with --t-reduced
    #[arg(long, value_name = "CM")]
    pub edge_cm: Option<f64>,
    #[command(flatten)]
    pub temperature: TemperatureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ModesArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Temperatures after parsing: kelvin or reduced, never both.
#[derive(Debug, Clone, PartialEq)]
pub enum Temperatures {
    Kelvin(Vec<f64>),
    Reduced(Vec<f64>),
}

impl Temperatures {
    pub fn len(&self) -> usize {
        match self {
            Self::Kelvin(v) | Self::Reduced(v) => v.len(),
        }
    }

    pub fn is_kelvin(&self) -> bool {
        matches!(self, Self::Kelvin(_))
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(usage(format!("--{name} must be finite and positive, got {v}")))
    }
}

impl GeometryArgs {
    /// Resolves the cavity. `default_scale` fills a missing `--edge-cm`.
    pub fn resolve(&self, default_scale: Option<f64>) -> Result<CuboidGeometry, CliError> {
        let edges = [self.x_cm, self.y_cm, self.z_cm];
        let shape = [self.alpha, self.beta, self.edge_cm];
        let any_edges = edges.iter().any(Option::is_some);
        let any_shape = shape.iter().any(Option::is_some);
        match (any_edges, any_shape) {
            (true, true) => Err(usage("give either --x-cm/--y-cm/--z-cm or --alpha/--beta/--edge-cm, not both")),
            (true, false) => match edges {
                [Some(x), Some(y), Some(z)] => Ok(CuboidGeometry::new(
                    positive("x-cm", x)?,
                    positive("y-cm", y)?,
                    positive("z-cm", z)?,
                )?),
                _ => Err(usage("--x-cm, --y-cm and --z-cm must be given together")),
            },
            (false, _) => {
                let (Some(alpha), Some(beta)) = (self.alpha, self.beta) else {
                    return Err(usage("geometry needs --x-cm/--y-cm/--z-cm or --alpha and --beta"));
                };
                let scale = match self.edge_cm.or(default_scale) {
                    Some(s) => positive("edge-cm", s)?,
                    None => return Err(usage("--edge-cm is required with --temperature-k")),
                };
                Ok(CuboidGeometry::from_shape(positive("alpha", alpha)?, positive("beta", beta)?, scale)?)
            }
        }
    }
}

fn parse_number(s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| usage(format!("cannot parse `{s}` as a number")))
}

/// `v`, `v1,v2,...` or `lo:hi` expanded over `points` with `spacing`.
pub fn parse_temperature_spec(spec: &str, points: usize, spacing: SpacingArg) -> Result<Vec<f64>, CliError> {
    let values = if let Some((lo, hi)) = spec.split_once(':') {
        let (lo, hi) = (parse_number(lo)?, parse_number(hi)?);
        let spacing = match spacing {
            SpacingArg::Log => Spacing::Log,
            SpacingArg::Linear => Spacing::Linear,
        };
        grid(lo, hi, points, spacing)?
    } else {
        spec.split(',').map(parse_number).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() || values.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(usage(format!("temperatures in `{spec}` must be finite and positive")));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(usage(format!("temperatures in `{spec}` must be strictly increasing")));
    }
    Ok(values)
}

impl TemperatureArgs {
    pub fn resolve(&self) -> Result<Temperatures, CliError> {
        if self.points == 0 {
            return Err(usage("--points must be at least 1"));
        }
        match (&self.temperature_k, &self.t_reduced) {
            (Some(k), None) => Ok(Temperatures::Kelvin(parse_temperature_spec(k, self.points, self.spacing)?)),
            (None, Some(t)) => Ok(Temperatures::Reduced(parse_temperature_spec(t, self.points, self.spacing)?)),
            (Some(_), Some(_)) => Err(usage("give either --temperature-k or --t-reduced, not both")),
            (None, None) => Err(usage("a temperature is required: --temperature-k or --t-reduced")),
        }
    }
}

impl OutputArgs {
    pub fn cutoff(&self, default_tol: f64) -> Result<CutoffPolicy, CliError> {
        let policy = match self.cutoff.trim() {
            "auto" => CutoffPolicy::adaptive(self.tol.unwrap_or(default_tol)),
            other => {
                if self.tol.is_some() {
                    return Err(usage("--tol only applies with --cutoff auto"));
                }
                CutoffPolicy::Fixed(parse_number(other)?)
            }
        };
        policy.validate().map_err(|e| usage(e.to_string()))?;
        Ok(policy)
    }

    pub fn constants(&self) -> Result<PhysicalConstants, CliError> {
        let Some(path) = &self.constants else {
            return Ok(PhysicalConstants::codata());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read constants file {}: {e}", path.display())))?;
        let k: PhysicalConstants = serde_json::from_str(&text)
            .map_err(|e| usage(format!("bad constants file {}: {e}", path.display())))?;
        if !(k.b() > 0.0 && k.b().is_finite()) {
            return Err(usage(format!("constants file {} gives B = {}", path.display(), k.b())));
        }
        Ok(k)
    }
}
