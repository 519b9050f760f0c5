use cavity_thermo::experiments::{adiabatic_merge, isothermal_merge, sweep, MergeConfig, SweepRow, MERGE_TOLERANCE};
use cavity_thermo::spectrum::{enumerate_modes, CuboidGeometry, ModeBudget};
use cavity_thermo::{CutoffPolicy, PhysicalConstants};

use crate::args::{Command, MergeArgs, ModesArgs, OutputArgs, StateArgs, Temperatures};
use crate::error::CliError;
use crate::output::{Cell, Metadata, Table};

pub const REPORT_COLUMNS: [&str; 12] = [
    "T_K", "t", "F_red", "E_red", "S_red", "N", "C_red", "phi", "px_red", "py_red", "pz_red", "omega_e",
];
pub const ENERGY_COLUMNS: [&str; 7] = ["t", "phi", "E_red", "S_red", "N", "C_red", "omega_e"];
pub const PRESSURE_COLUMNS: [&str; 5] = ["T_K", "t", "px_over_pav", "py_over_pav", "pz_over_pav"];
pub const ADIABATIC_COLUMNS: [&str; 6] = ["t", "T_ratio", "N_ratio", "relative_drop", "reduced_drop", "entropy_residual"];
pub const ISOTHERMAL_COLUMNS: [&str; 2] = ["t", "dE_iso"];
pub const MODES_COLUMNS: [&str; 5] = ["nx", "ny", "nz", "g", "omega"];

const DEFAULT_TOL: f64 = CutoffPolicy::DEFAULT_TOLERANCE;

pub struct Run {
    pub table: Table,
    pub meta: Metadata,
}

pub fn execute(command: &Command) -> Result<Run, CliError> {
    let n = name(command);
    match command {
        Command::Report(a) | Command::EnergyCurve(a) | Command::PressureCurve(a) => state_command(a, n),
        Command::MergeAdiabatic(a) | Command::MergeIsothermal(a) => merge_command(a, n),
        Command::Modes(a) => modes_command(a),
    }
}

pub fn name(command: &Command) -> &'static str {
    match command {
        Command::Report(_) => "report",
        Command::EnergyCurve(_) => "energy-curve",
        Command::PressureCurve(_) => "pressure-curve",
        Command::MergeAdiabatic(_) => "merge-adiabatic",
        Command::MergeIsothermal(_) => "merge-isothermal",
        Command::Modes(_) => "modes",
    }
}

pub fn output_args(command: &Command) -> &OutputArgs {
    match command {
        Command::Report(a) | Command::EnergyCurve(a) | Command::PressureCurve(a) => &a.output,
        Command::MergeAdiabatic(a) | Command::MergeIsothermal(a) => &a.output,
        Command::Modes(a) => &a.output,
    }
}

/// Reduced grid and, in kelvin mode, the constants used to get it.
fn reduced_grid(
    temps: &Temperatures,
    scale: f64,
    out: &OutputArgs,
) -> Result<(Vec<f64>, Option<PhysicalConstants>), CliError> {
    match temps {
        Temperatures::Reduced(t) => Ok((t.clone(), None)),
        Temperatures::Kelvin(kelvin) => {
            let k = out.constants()?;
            Ok((kelvin.iter().map(|&temp| k.reduced_temperature(temp, scale)).collect(), Some(k)))
        }
    }
}

fn kelvin_cell(temps: &Temperatures, i: usize) -> Cell {
    match temps {
        Temperatures::Kelvin(k) => Cell::Num(k[i]),
        Temperatures::Reduced(_) => Cell::Empty,
    }
}

fn state_command(a: &StateArgs, name: &'static str) -> Result<Run, CliError> {
    let temps = a.temperature.resolve()?;
    if name == "report" && temps.len() != 1 {
        return Err(CliError::Usage("report takes a single temperature".into()));
    }
    let default_scale = if temps.is_kelvin() { None } else { Some(1.0) };
    let geom: CuboidGeometry = a.geometry.resolve(default_scale)?;
    let cutoff = a.output.cutoff(DEFAULT_TOL)?;
    let (t_grid, constants) = reduced_grid(&temps, geom.scale(), &a.output)?;
    let rows: Vec<SweepRow> = sweep(&geom, &t_grid, cutoff, ModeBudget::from_env())?;

    let mut table = match name {
        "report" => Table::new(&REPORT_COLUMNS),
        "energy-curve" => Table::new(&ENERGY_COLUMNS),
        _ => Table::new(&PRESSURE_COLUMNS),
    };
    for (i, row) in rows.iter().enumerate() {
        let r = &row.report;
        let cells = match name {
            "report" => vec![
                kelvin_cell(&temps, i),
                Cell::Num(r.t),
                Cell::Num(r.free_energy),
                Cell::Num(r.energy),
                Cell::Num(r.entropy),
                Cell::Num(r.photons),
                Cell::Num(r.heat_capacity),
                Cell::Num(r.phi),
                Cell::Num(r.pressure[0]),
                Cell::Num(r.pressure[1]),
                Cell::Num(r.pressure[2]),
                Cell::Num(r.omega_e),
            ],
            "energy-curve" => vec![
                Cell::Num(r.t),
                Cell::Num(r.phi),
                Cell::Num(r.energy),
                Cell::Num(r.entropy),
                Cell::Num(r.photons),
                Cell::Num(r.heat_capacity),
                Cell::Num(r.omega_e),
            ],
            _ => {
                let [px, py, pz] = row.pressure_ratios();
                vec![kelvin_cell(&temps, i), Cell::Num(r.t), Cell::Num(px), Cell::Num(py), Cell::Num(pz)]
            }
        };
        table.push(cells);
    }
    Ok(Run {
        table,
        meta: Metadata {
            subcommand: name,
            constants,
            cutoff: Some(cutoff),
        },
    })
}

fn merge_command(a: &MergeArgs, name: &'static str) -> Result<Run, CliError> {
    if a.cubes == 0 {
        return Err(CliError::Usage("--cubes must be at least 1".into()));
    }
    let temps = a.temperature.resolve()?;
    let edge = match (a.edge_cm, temps.is_kelvin()) {
        (Some(e), _) if e > 0.0 && e.is_finite() => e,
        (Some(e), _) => return Err(CliError::Usage(format!("--edge-cm must be finite and positive, got {e}"))),
        (None, false) => 1.0,
        (None, true) => return Err(CliError::Usage("--edge-cm is required with --temperature-k".into())),
    };
    let cutoff = a.output.cutoff(MERGE_TOLERANCE)?;
    let (t_grid, constants) = reduced_grid(&temps, edge, &a.output)?;
    let cfg = MergeConfig {
        cutoff,
        budget: ModeBudget::from_env(),
        ..MergeConfig::default()
    };

    let mut table;
    if name == "merge-adiabatic" {
        table = Table::new(&ADIABATIC_COLUMNS);
        for &t in &t_grid {
            let m = adiabatic_merge(a.cubes, t, edge, &cfg)?;
            table.push(vec![
                Cell::Num(t),
                Cell::Num(m.t_ratio),
                Cell::Num(m.n_ratio),
                Cell::Num(1.0 - m.t_ratio),
                Cell::Num(t * (1.0 - m.t_ratio)),
                Cell::Num(m.entropy_residual),
            ]);
        }
    } else {
        table = Table::new(&ISOTHERMAL_COLUMNS);
        for &t in &t_grid {
            table.push(vec![Cell::Num(t), Cell::Num(isothermal_merge(a.cubes, t, edge, &cfg)?)]);
        }
    }
    Ok(Run {
        table,
        meta: Metadata {
            subcommand: name,
            constants,
            cutoff: Some(cutoff),
        },
    })
}

fn modes_command(a: &ModesArgs) -> Result<Run, CliError> {
    let geom = a.geometry.resolve(Some(1.0))?;
    let omega = match a.output.cutoff(DEFAULT_TOL)? {
        CutoffPolicy::Fixed(w) => w,
        CutoffPolicy::Adaptive { .. } => {
            return Err(CliError::Usage("modes needs a numeric --cutoff".into()));
        }
    };
    let mut table = Table::new(&MODES_COLUMNS);
    for m in enumerate_modes(&geom, omega, ModeBudget::from_env())? {
        table.push(vec![
            Cell::Int(m.n[0].into()),
            Cell::Int(m.n[1].into()),
            Cell::Int(m.n[2].into()),
            Cell::Int(m.g.into()),
            Cell::Num(m.omega),
        ]);
    }
    Ok(Run {
        table,
        meta: Metadata {
            subcommand: "modes",
            constants: None,
            cutoff: Some(CutoffPolicy::Fixed(omega)),
        },
    })
}
