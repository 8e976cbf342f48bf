//! Command-line front end: accuracy tables for Hooke's-law atoms and STO atoms,
//! and per-radius dumps of the gradient-expansion terms.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::atoms::{parse_sto, StoBasisSet};
use crate::error::{Error, Result};
use crate::hooke::{kinetic_exact, kinetic_omega_half, solve_general, HookeParams, OmegaHalfDensity, RelativeOptions};
use crate::kedf::{tau_point, TauPoint};
use crate::radial::{read_table, tabulated_derivatives, DensityModel, GridOptions, RadialGrid};
use crate::resum::{integrate_method, partial_sum, ResumMethod, Resummed, SeriesOrder};

#[derive(Debug, Parser)]
#[command(name = "kedf-pade", version, about = "Gradient-expansion kinetic energies and their Padé resummation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Accuracy row for a Hooke's-law two-electron atom.
    Hooke(HookeArgs),
    /// Accuracy row for an atom from an STO basis file.
    Atom(AtomArgs),
    /// Per-radius table of the series terms and their resummations.
    Dump(DumpArgs),
}

#[derive(Debug, Args)]
pub struct HookeArgs {
    /// Confinement frequency (a.u.).
    #[arg(long, allow_negative_numbers = true, value_parser = positive)]
    pub omega: f64,
    /// Switch off the electron-electron repulsion.
    #[arg(long)]
    pub non_interacting: bool,
    /// Comma-separated methods (t0, t02, t024, pade11, pade21) or `all`.
    #[arg(long, default_value = "all")]
    pub methods: MethodSelection,
    /// Also write the row as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AtomArgs {
    /// STO basis file (JSON).
    #[arg(long)]
    pub basis: PathBuf,
    /// Comma-separated methods (t0, t02, t024, pade11, pade21) or `all`.
    #[arg(long, default_value = "all")]
    pub methods: MethodSelection,
    /// Also write the row as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["omega", "basis", "table"])))]
pub struct DumpArgs {
    /// Hooke's-law atom with this frequency.
    #[arg(long, allow_negative_numbers = true, value_parser = positive)]
    pub omega: Option<f64>,
    /// STO basis file.
    #[arg(long)]
    pub basis: Option<PathBuf>,
    /// Two-column `(r, rho)` table.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Outer radius of the dump (defaults to the density's integration range).
    #[arg(long, value_parser = positive)]
    pub rmax: Option<f64>,
    /// Number of radii.
    #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u32).range(2..))]
    pub points: u32,
    /// Output CSV file.
    #[arg(long)]
    pub csv: PathBuf,
}

fn positive(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be a positive number, got {v}"))
    }
}

/// Nonempty, ordered list of methods.
#[derive(Clone, Debug, PartialEq)]
pub struct MethodSelection(pub Vec<ResumMethod>);

impl FromStr for MethodSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self(ResumMethod::ALL.to_vec()));
        }
        let mut methods = Vec::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let m: ResumMethod = part.parse()?;
            if !methods.contains(&m) {
                methods.push(m);
            }
        }
        if methods.is_empty() {
            return Err(Error::InvalidArgument("no methods selected".into()));
        }
        Ok(Self(methods))
    }
}

/// One table row: a system, its reference kinetic energy and percent errors.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub label: String,
    pub t_ref: f64,
    /// `(method, T, percent error)` in selection order.
    pub results: Vec<(ResumMethod, f64, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    /// Header of the first column (`omega` or `element`).
    pub key: &'static str,
    pub reference: &'static str,
    pub rows: Vec<Row>,
}

/// Six significant digits.
pub fn format_energy(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (5 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn format_percent(x: f64) -> String {
    format!("{x:.2}")
}

impl Report {
    fn header(&self) -> Vec<String> {
        let mut h = vec![self.key.to_string(), self.reference.to_string()];
        if let Some(row) = self.rows.first() {
            h.extend(row.results.iter().map(|(m, _, _)| m.label().to_string()));
        }
        h
    }

    fn records(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                let mut rec = vec![row.label.clone(), format_energy(row.t_ref)];
                rec.extend(row.results.iter().map(|(_, _, e)| format_percent(*e)));
                rec
            })
            .collect()
    }

    /// Fixed-width text table with percent errors per method.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let lines: Vec<Vec<String>> = std::iter::once(self.header()).chain(self.records()).collect();
        for line in &lines {
            for (i, cell) in line.iter().enumerate() {
                let width = if i < 2 { 10 } else { 9 };
                let _ = write!(out, "{cell:>width$} ");
            }
            out.pop();
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let io = |e: csv::Error| Error::Io { path: path.display().to_string(), source: e.into() };
        let mut w = csv::Writer::from_path(path).map_err(io)?;
        w.write_record(self.header()).map_err(io)?;
        for rec in self.records() {
            w.write_record(rec).map_err(io)?;
        }
        w.flush().map_err(|source| Error::Io { path: path.display().to_string(), source })
    }
}

fn method_row<D: DensityModel<f64> + ?Sized>(
    label: String,
    density: &D,
    t_ref: f64,
    methods: &[ResumMethod],
) -> Result<Row> {
    let grid = RadialGrid::for_density(density, &GridOptions::default())?;
    let results = methods
        .iter()
        .map(|&m| integrate_method(density, m, &grid, t_ref).map(|r| (m, r.t, r.percent_error)))
        .collect::<Result<_>>()?;
    Ok(Row { label, t_ref, results })
}

/// Hooke's-law row; the closed-form density is used at `omega = 1/2` with repulsion.
pub fn cmd_hooke(omega: f64, interacting: bool, methods: &[ResumMethod]) -> Result<Report> {
    let params = HookeParams::new(omega, interacting)?;
    let row = if interacting && omega == 0.5 {
        method_row(format!("{omega}"), &OmegaHalfDensity, kinetic_omega_half()?, methods)?
    } else {
        let sol = solve_general(params, &RelativeOptions::default())?;
        method_row(format!("{omega}"), &sol.density, kinetic_exact(&sol), methods)?
    };
    Ok(Report { key: "omega", reference: "T_s", rows: vec![row] })
}

/// Atom row with the analytic Hartree–Fock kinetic energy as reference.
pub fn cmd_atom(basis: &StoBasisSet<f64>, methods: &[ResumMethod]) -> Result<Report> {
    let row = method_row(basis.element.clone(), basis, basis.hf_kinetic(), methods)?;
    Ok(Report { key: "element", reference: "T_HF", rows: vec![row] })
}

/// Where the dumped density comes from.
pub enum DumpSource {
    Hooke(f64),
    Basis(StoBasisSet<f64>),
    Table(Vec<(f64, f64)>),
}

pub const DUMP_COLUMNS: [&str; 11] =
    ["r", "rho", "tau0", "tau2", "tau4", "tau6", "sum2", "sum4", "pade11", "pade21", "flags"];

/// One dumped radius.
#[derive(Clone, Debug, PartialEq)]
pub struct DumpRow {
    pub r: f64,
    pub rho: f64,
    pub tau: TauPoint<f64>,
    pub pade11: Resummed<f64>,
    pub pade21: Resummed<f64>,
    /// `ordered` where `|τ6| < |τ4| < |τ2| < |τ0|`; `pole11`/`pole21` next to a sign change
    /// of the corresponding Padé denominator.
    pub flags: Vec<&'static str>,
}

/// Evaluates the series terms on `points` equally spaced radii in `(0, r_max]`.
pub fn dump_rows<D: DensityModel<f64> + ?Sized>(density: &D, r_max: f64, points: usize) -> Result<Vec<DumpRow>> {
    let mut rows: Vec<DumpRow> = Vec::with_capacity(points);
    for i in 1..=points {
        let r = r_max * i as f64 / points as f64;
        let d = density.eval(r);
        if !(d.rho > 0.0) {
            continue;
        }
        let tau = tau_point(&d, r)?;
        let mut flags = Vec::new();
        if tau.is_ordered() {
            flags.push("ordered");
        }
        rows.push(DumpRow {
            r,
            rho: d.rho,
            tau,
            pade11: ResumMethod::Pade11.evaluate(&tau),
            pade21: ResumMethod::Pade21.evaluate(&tau),
            flags,
        });
    }
    for (method, flag) in [(ResumMethod::Pade11, "pole11"), (ResumMethod::Pade21, "pole21")] {
        for i in 1..rows.len() {
            let a = method.denominator(&rows[i - 1].tau).unwrap();
            let b = method.denominator(&rows[i].tau).unwrap();
            if a == 0.0 || a * b < 0.0 {
                for j in [i - 1, i] {
                    if !rows[j].flags.contains(&flag) {
                        rows[j].flags.push(flag);
                    }
                }
            }
        }
    }
    Ok(rows)
}

fn cell(v: Resummed<f64>) -> String {
    match v {
        Resummed::Value(x) => format!("{x:e}"),
        Resummed::Pole => "inf".into(),
    }
}

pub fn write_dump(rows: &[DumpRow], path: &Path) -> Result<()> {
    let io = |e: csv::Error| Error::Io { path: path.display().to_string(), source: e.into() };
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(DUMP_COLUMNS).map_err(io)?;
    for row in rows {
        let t = &row.tau;
        let rec = [
            format!("{:e}", row.r),
            format!("{:e}", row.rho),
            format!("{:e}", t.tau0),
            format!("{:e}", t.tau2),
            format!("{:e}", t.tau4),
            format!("{:e}", t.tau6),
            format!("{:e}", partial_sum(t, SeriesOrder::Two)),
            format!("{:e}", partial_sum(t, SeriesOrder::Four)),
            cell(row.pade11),
            cell(row.pade21),
            row.flags.join(";"),
        ];
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn cmd_dump(source: &DumpSource, r_max: Option<f64>, points: usize) -> Result<Vec<DumpRow>> {
    let default_rmax = |d: &dyn DensityModel<f64>| -> Result<f64> {
        Ok(RadialGrid::for_density(d, &GridOptions::default())?.r_max())
    };
    match source {
        DumpSource::Hooke(omega) if *omega == 0.5 => {
            dump_rows(&OmegaHalfDensity, r_max.map_or_else(|| default_rmax(&OmegaHalfDensity), Ok)?, points)
        }
        DumpSource::Hooke(omega) => {
            let sol = solve_general(HookeParams::interacting(*omega)?, &RelativeOptions::default())?;
            dump_rows(&sol.density, r_max.map_or_else(|| default_rmax(&sol.density), Ok)?, points)
        }
        DumpSource::Basis(b) => dump_rows(b, r_max.map_or_else(|| default_rmax(b), Ok)?, points),
        DumpSource::Table(t) => {
            let d = tabulated_derivatives(t)?;
            let last = d.r_range().1;
            dump_rows(&d, r_max.unwrap_or(last).min(last), points)
        }
    }
}

/// Process exit status for an error: 2 usage, 3 data, 4 numerical.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => 2,
        e if e.is_data_error() => 3,
        _ => 4,
    }
}

/// Runs one command, printing the table to stdout.
pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Hooke(a) => {
            let report = cmd_hooke(a.omega, !a.non_interacting, &a.methods.0)?;
            print!("{}", report.render());
            if let Some(p) = a.csv {
                report.write_csv(&p)?;
            }
        }
        Command::Atom(a) => {
            let basis = parse_sto(&a.basis)?;
            let report = cmd_atom(&basis, &a.methods.0)?;
            print!("{}", report.render());
            if let Some(p) = a.csv {
                report.write_csv(&p)?;
            }
        }
        Command::Dump(a) => {
            let source = if let Some(w) = a.omega {
                DumpSource::Hooke(w)
            } else if let Some(b) = &a.basis {
                DumpSource::Basis(parse_sto(b)?)
            } else if let Some(t) = &a.table {
                DumpSource::Table(read_table(t)?)
            } else {
                unreachable!("clap enforces one source")
            };
            let rows = cmd_dump(&source, a.rmax, a.points as usize)?;
            write_dump(&rows, &a.csv)?;
            println!("wrote {} rows to {}", rows.len(), a.csv.display());
        }
    }
    Ok(())
}
