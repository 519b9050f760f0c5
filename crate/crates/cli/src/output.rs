//! Table rendering. Floats are written with 17 significant digits so that
//! output is exact and byte-stable across runs.

use std::fmt::Write as _;

use cavity_thermo::{CutoffPolicy, PhysicalConstants};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(v) if v.is_finite() => format_float(*v),
            Cell::Num(_) | Cell::Empty => "null".into(),
            Cell::Int(v) => v.to_string(),
        }
    }
}

pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, meta: &Metadata) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"tool\": {},", quote(env!("CARGO_PKG_NAME")));
        let _ = writeln!(out, "  \"version\": {},", quote(env!("CARGO_PKG_VERSION")));
        let _ = writeln!(out, "  \"subcommand\": {},", quote(meta.subcommand));
        match &meta.constants {
            Some(k) => {
                let _ = writeln!(
                    out,
                    "  \"constants\": {{\"hbar\": {}, \"c\": {}, \"k_b\": {}, \"B\": {}}},",
                    format_float(k.hbar),
                    format_float(k.c),
                    format_float(k.k_b),
                    format_float(k.b())
                );
            }
            None => out.push_str("  \"constants\": null,\n"),
        }
        let cutoff = match meta.cutoff {
            Some(CutoffPolicy::Adaptive { tolerance }) => {
                format!("{{\"policy\": \"auto\", \"tolerance\": {}}}", format_float(tolerance))
            }
            Some(CutoffPolicy::Fixed(w)) => format!("{{\"policy\": \"fixed\", \"omega_e\": {}}}", format_float(w)),
            None => "null".into(),
        };
        let _ = writeln!(out, "  \"cutoff\": {cutoff},");
        let columns: Vec<String> = self.columns.iter().map(|c| quote(c)).collect();
        let _ = writeln!(out, "  \"columns\": [{}],", columns.join(", "));
        out.push_str("  \"rows\": [");
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row)
                .map(|(c, v)| format!("{}: {}", quote(c), v.json()))
                .collect();
            let _ = write!(out, "    {{{}}}", fields.join(", "));
        }
        out.push_str(if self.rows.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        out
    }
}

fn quote(s: &str) -> String {
    serde_json::Value::from(s).to_string()
}

/// Run context recorded in the JSON preamble.
#[derive(Debug, Clone)]
pub struct Metadata {
    pub subcommand: &'static str,
    /// `None` when the run never touched physical units.
    pub constants: Option<PhysicalConstants>,
    pub cutoff: Option<CutoffPolicy>,
}
