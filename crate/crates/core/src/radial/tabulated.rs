use std::path::Path;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::scalar::Real;

use super::quadrature::integrate_radial;
use super::spline::QuinticSpline;
use super::{DensityDerivatives, DensityKind, DensityModel, RadialGrid};

/// Fewest samples accepted for a tabulated density.
pub const MIN_SAMPLES: usize = 12;

/// Density interpolated from `(r, rho)` samples through a quintic spline of `ln rho`.
///
/// Outside the last sample the density is zero.
#[derive(Clone, Debug)]
pub struct TabulatedDensity<T> {
    spline: QuinticSpline<T>,
    electrons: T,
}

impl<T: Real> TabulatedDensity<T> {
    pub fn r_range(&self) -> (T, T) {
        self.spline.domain()
    }
}

impl<T: Real> DensityModel<T> for TabulatedDensity<T> {
    fn eval(&self, r: T) -> DensityDerivatives<T> {
        let (_, r_hi) = self.spline.domain();
        if r > r_hi {
            return DensityDerivatives::uniform(T::zero());
        }
        let log_rho = Jet::from_derivatives(self.spline.eval(r));
        DensityDerivatives::from_jet(&log_rho.exp())
    }

    fn electron_count(&self) -> T {
        self.electrons
    }

    fn kind(&self) -> DensityKind {
        DensityKind::Tabulated
    }
}

/// Builds a tabulated density from `(r, rho)` samples.
///
/// Trailing zero densities are dropped (the support ends at the last positive
/// sample); zeros elsewhere and negative values are rejected.
pub fn tabulated_derivatives<T: Real>(table: &[(T, T)]) -> Result<TabulatedDensity<T>> {
    if let Some(&(r, rho)) = table.iter().find(|(_, rho)| *rho < T::zero()) {
        return Err(Error::Table(format!("negative density {rho} at r = {r}")));
    }
    let end = table.iter().rposition(|(_, rho)| *rho > T::zero()).map_or(0, |i| i + 1);
    let table = &table[..end];
    if table.len() < MIN_SAMPLES {
        return Err(Error::InsufficientSamples { got: table.len(), need: MIN_SAMPLES });
    }
    if let Some(&(r, _)) = table.iter().find(|(_, rho)| *rho == T::zero()) {
        return Err(Error::Table(format!("zero density inside the table at r = {r}")));
    }
    let x: Vec<T> = table.iter().map(|p| p.0).collect();
    if x[0] < T::zero() {
        return Err(Error::Table("negative radius".into()));
    }
    let y: Vec<T> = table.iter().map(|p| p.1.ln()).collect();
    let spline = QuinticSpline::interpolate(&x, &y)?;
    let mut density = TabulatedDensity { spline, electrons: T::zero() };

    let mut nodes = x.clone();
    if nodes[0] > T::zero() {
        nodes.insert(0, T::zero());
    }
    let grid = RadialGrid::new(nodes)?;
    density.electrons = integrate_radial(|r| density.eval(r).rho, &grid)?;
    Ok(density)
}

/// Reads `(r, rho)` pairs from a text table.
///
/// Columns are separated by whitespace or commas; only the first two are used.
/// Lines starting with `#` are comments, and a non-numeric first line is taken
/// as a header.
pub fn read_table(path: impl AsRef<Path>) -> Result<Vec<(f64, f64)>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_table(&text).map_err(|e| match e {
        Error::Table(msg) => Error::Table(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub(crate) fn parse_table(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut seen_data = false;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty());
        let (a, b) = (fields.next(), fields.next());
        let parsed = match (a, b) {
            (Some(a), Some(b)) => a.parse::<f64>().ok().zip(b.parse::<f64>().ok()),
            _ => None,
        };
        match parsed {
            Some(pair) => {
                out.push(pair);
                seen_data = true;
            }
            None if !seen_data => seen_data = true,
            None => return Err(Error::Table(format!("line {}: expected two numeric columns", lineno + 1))),
        }
    }
    Ok(out)
}
