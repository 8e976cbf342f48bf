//! Restricted Hartree–Fock atomic densities expanded in Slater-type orbitals.

use std::path::Path;

use serde::Deserialize;

use crate::error::{BasisError, Error, Result};
use crate::jet::Jet;
use crate::radial::{integrate_radial, DensityDerivatives, DensityModel, GridOptions, RadialGrid};
use crate::scalar::Real;

/// Normalization of each orbital must hold to this before it is rescaled exactly.
pub const NORM_TOLERANCE: f64 = 1e-6;
/// Largest overlap accepted between orbitals of equal `l`.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-5;

const SYMBOLS: [&str; 54] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar", "K", "Ca",
    "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",
    "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I", "Xe",
];

/// Nuclear charge for a symbol up to xenon.
pub fn atomic_number(symbol: &str) -> Option<usize> {
    SYMBOLS.iter().position(|s| s.eq_ignore_ascii_case(symbol)).map(|i| i + 1)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `N r^(n-1) exp(-zeta r)` with `N = (2 zeta)^(n+1/2) / sqrt((2n)!)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StoPrimitive<T> {
    pub n: u32,
    pub zeta: T,
}

impl<T: Real> StoPrimitive<T> {
    pub fn norm(&self) -> T {
        let two_zeta = T::lit(2.0) * self.zeta;
        two_zeta.powf(T::from_count(self.n as usize) + T::lit(0.5)) / T::lit(factorial(2 * self.n)).sqrt()
    }

    /// `∫ r^k exp(-z r) dr` over the half line, `k! / z^(k+1)`.
    fn moment(k: u32, z: T) -> T {
        T::lit(factorial(k)) / z.powi(k as i32 + 1)
    }

    /// `∫ χ_a χ_b r² dr`.
    pub fn overlap(&self, other: &Self) -> T {
        self.norm() * other.norm() * Self::moment(self.n + other.n, self.zeta + other.zeta)
    }

    /// `½ ∫ [χ_a' χ_b' + l(l+1) χ_a χ_b / r²] r² dr`.
    pub fn kinetic(&self, other: &Self, l: u32) -> T {
        let z = self.zeta + other.zeta;
        let k = self.n + other.n;
        let (na, nb) = (T::from_count(self.n as usize - 1), T::from_count(other.n as usize - 1));
        let ll = T::from_count((l * (l + 1)) as usize);
        let m = |j: u32| Self::moment(j, z);
        let sum = (na * nb + ll) * m(k - 2) - (na * other.zeta + nb * self.zeta) * m(k - 1)
            + self.zeta * other.zeta * m(k);
        T::lit(0.5) * self.norm() * other.norm() * sum
    }

    /// Jet of the unnormalized radial part `r^(n-1) exp(-zeta r)`.
    fn jet(&self, x: Jet<T>) -> Jet<T> {
        x.powi(self.n - 1) * x.scale(-self.zeta).exp()
    }
}

/// One occupied orbital shell: `R(r) = Σ_k c_k χ_k(r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RhfOrbital<T> {
    pub label: String,
    pub l: u32,
    pub occ: T,
    pub primitives: Vec<StoPrimitive<T>>,
    pub coeffs: Vec<T>,
}

impl<T: Real> RhfOrbital<T> {
    fn quadratic_form(&self, other: &Self, op: impl Fn(&StoPrimitive<T>, &StoPrimitive<T>) -> T) -> T {
        let mut s = T::zero();
        for (ca, pa) in self.coeffs.iter().zip(&self.primitives) {
            for (cb, pb) in other.coeffs.iter().zip(&other.primitives) {
                s = s + *ca * *cb * op(pa, pb);
            }
        }
        s
    }

    /// `∫ R² r² dr`.
    pub fn norm_squared(&self) -> T {
        self.quadratic_form(self, StoPrimitive::overlap)
    }

    pub fn overlap(&self, other: &Self) -> T {
        self.quadratic_form(other, StoPrimitive::overlap)
    }

    /// Kinetic energy of one electron in this orbital.
    pub fn kinetic(&self) -> T {
        let l = self.l;
        self.quadratic_form(self, |a, b| a.kinetic(b, l))
    }

    /// Jet of `R(r)`.
    pub fn radial_jet(&self, r: T) -> Jet<T> {
        let x = Jet::variable(r);
        self.coeffs
            .iter()
            .zip(&self.primitives)
            .fold(Jet::constant(T::zero()), |acc, (c, p)| acc + p.jet(x).scale(*c * p.norm()))
    }
}

/// A closed-shell (or spherically averaged) atom.
#[derive(Clone, Debug, PartialEq)]
pub struct StoBasisSet<T = f64> {
    pub element: String,
    pub electron_count: T,
    pub orbitals: Vec<RhfOrbital<T>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasis {
    element: String,
    electron_count: f64,
    shells: Vec<RawShell>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawShell {
    #[serde(default)]
    label: Option<String>,
    l: u32,
    occ: f64,
    primitives: Vec<RawPrimitive>,
    coeffs: Vec<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPrimitive {
    n: u32,
    zeta: f64,
}

fn field(field: String, reason: impl Into<String>) -> BasisError {
    BasisError::Field { field, reason: reason.into() }
}

fn validate(raw: RawBasis) -> Result<StoBasisSet<f64>, BasisError> {
    if raw.shells.is_empty() {
        return Err(field("shells".into(), "no shells"));
    }
    if !(raw.electron_count > 0.0) {
        return Err(field("electron_count".into(), "must be positive"));
    }
    let mut orbitals = Vec::with_capacity(raw.shells.len());
    for (i, sh) in raw.shells.into_iter().enumerate() {
        let at = |f: &str| format!("shells[{i}].{f}");
        if sh.primitives.is_empty() {
            return Err(field(at("primitives"), "empty"));
        }
        if sh.coeffs.len() != sh.primitives.len() {
            return Err(field(
                at("coeffs"),
                format!("{} coefficients for {} primitives", sh.coeffs.len(), sh.primitives.len()),
            ));
        }
        let max_occ = f64::from(2 * (2 * sh.l + 1));
        if !(sh.occ > 0.0 && sh.occ <= max_occ) {
            return Err(field(at("occ"), format!("{} outside (0, {max_occ}]", sh.occ)));
        }
        for (k, p) in sh.primitives.iter().enumerate() {
            if p.n < 1 || p.n <= sh.l {
                return Err(field(at(&format!("primitives[{k}].n")), format!("n = {} invalid for l = {}", p.n, sh.l)));
            }
            if !(p.zeta > 0.0 && p.zeta.is_finite()) {
                return Err(field(at(&format!("primitives[{k}].zeta")), format!("{} is not a positive exponent", p.zeta)));
            }
        }
        if let Some(k) = sh.coeffs.iter().position(|c| !c.is_finite()) {
            return Err(field(at(&format!("coeffs[{k}]")), "not finite"));
        }
        let label = sh.label.unwrap_or_else(|| format!("shell {i}"));
        let mut orb = RhfOrbital {
            label,
            l: sh.l,
            occ: sh.occ,
            primitives: sh.primitives.iter().map(|p| StoPrimitive { n: p.n, zeta: p.zeta }).collect(),
            coeffs: sh.coeffs,
        };
        let norm = orb.norm_squared();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(BasisError::NotNormalized { orbital: orb.label, norm });
        }
        // published coefficients are rounded; make the normalization exact
        let s = norm.sqrt().recip();
        orb.coeffs.iter_mut().for_each(|c| *c *= s);
        orbitals.push(orb);
    }
    for (i, a) in orbitals.iter().enumerate() {
        for b in orbitals[i + 1..].iter().filter(|b| b.l == a.l) {
            let overlap = a.overlap(b);
            if overlap.abs() > ORTHOGONALITY_TOLERANCE {
                return Err(BasisError::NotOrthogonal { a: a.label.clone(), b: b.label.clone(), overlap });
            }
        }
    }
    let sum: f64 = orbitals.iter().map(|o| o.occ).sum();
    let declared = raw.electron_count;
    if (sum - declared).abs() > 1e-9 * declared {
        return Err(BasisError::ElectronCount { declared, sum });
    }
    if let Some(z) = atomic_number(&raw.element) {
        if (z as f64 - declared).abs() > 1e-9 {
            return Err(BasisError::ElectronCount { declared: z as f64, sum });
        }
    }
    Ok(StoBasisSet { element: raw.element, electron_count: declared, orbitals })
}

impl StoBasisSet<f64> {
    /// Parses and validates a basis from JSON text; `origin` names the source in errors.
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        let wrap = |kind| Error::Basis { path: origin.to_string(), kind };
        let raw: RawBasis = serde_json::from_str(text).map_err(|e| wrap(BasisError::Schema(e.to_string())))?;
        validate(raw).map_err(wrap)
    }

    /// One of the basis sets shipped with the crate (He, Li, Be, Ne, Ar, Kr, Xe).
    pub fn bundled(symbol: &str) -> Result<Self> {
        let text = match symbol.to_ascii_lowercase().as_str() {
            "he" => include_str!("../data/sto/he.json"),
            "li" => include_str!("../data/sto/li.json"),
            "be" => include_str!("../data/sto/be.json"),
            "ne" => include_str!("../data/sto/ne.json"),
            "ar" => include_str!("../data/sto/ar.json"),
            "kr" => include_str!("../data/sto/kr.json"),
            "xe" => include_str!("../data/sto/xe.json"),
            _ => return Err(Error::InvalidArgument(format!("no bundled basis for {symbol:?}"))),
        };
        Self::from_json(text, &format!("bundled:{symbol}"))
    }

    /// Symbols of the bundled basis sets.
    pub const BUNDLED: [&'static str; 7] = ["He", "Li", "Be", "Ne", "Ar", "Kr", "Xe"];

    pub fn convert<U: Real>(&self) -> StoBasisSet<U> {
        StoBasisSet {
            element: self.element.clone(),
            electron_count: U::lit(self.electron_count),
            orbitals: self
                .orbitals
                .iter()
                .map(|o| RhfOrbital {
                    label: o.label.clone(),
                    l: o.l,
                    occ: U::lit(o.occ),
                    primitives: o.primitives.iter().map(|p| StoPrimitive { n: p.n, zeta: U::lit(p.zeta) }).collect(),
                    coeffs: o.coeffs.iter().map(|&c| U::lit(c)).collect(),
                })
                .collect(),
        }
    }
}

/// Reads and validates an STO basis file.
pub fn parse_sto(path: impl AsRef<Path>) -> Result<StoBasisSet<f64>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    StoBasisSet::from_json(&text, &path.display().to_string())
}

impl<T: Real> StoBasisSet<T> {
    /// Density and derivatives, `ρ = (1/4π) Σ occ_i R_i²`.
    pub fn density_derivs(&self, r: T) -> DensityDerivatives<T> {
        let rho = self.orbitals.iter().fold(Jet::constant(T::zero()), |acc, o| {
            let rj = o.radial_jet(r);
            acc + (rj * rj).scale(o.occ)
        });
        DensityDerivatives::from_jet(&rho.scale(T::one() / (T::lit(4.0) * T::PI())))
    }

    /// Analytic kinetic energy `Σ occ_i <R_i| -½∇² |R_i>`.
    pub fn hf_kinetic(&self) -> T {
        self.orbitals.iter().fold(T::zero(), |acc, o| acc + o.occ * o.kinetic())
    }

    /// The same kinetic energy by radial quadrature of `R (-½∇²R)`.
    pub fn hf_kinetic_quadrature(&self, grid: &RadialGrid<T>) -> Result<T> {
        let four_pi = T::lit(4.0) * T::PI();
        integrate_radial(
            |r| {
                let mut t = T::zero();
                for o in &self.orbitals {
                    let [v, d1, d2, _, _] = o.radial_jet(r).derivatives();
                    let ll = T::from_count((o.l * (o.l + 1)) as usize);
                    // r² ∇²R = r² R'' + 2 r R' - l(l+1) R, kept finite at the origin
                    let r2_lap = r * r * d2 + T::lit(2.0) * r * d1 - ll * v;
                    t = t + o.occ * v * T::lit(-0.5) * r2_lap;
                }
                if r > T::zero() {
                    t / (r * r * four_pi)
                } else {
                    T::zero()
                }
            },
            grid,
        )
    }

    /// `-ρ'(0) / (2ρ(0))`, close to the nuclear charge for a good basis.
    pub fn cusp_estimate(&self) -> T {
        let d = self.density_derivs(T::zero());
        -d.d1 / (T::lit(2.0) * d.rho)
    }

    /// Radial grid suited to this density.
    pub fn grid(&self) -> Result<RadialGrid<T>> {
        RadialGrid::for_density(self, &GridOptions::default())
    }
}

impl<T: Real> DensityModel<T> for StoBasisSet<T> {
    fn eval(&self, r: T) -> DensityDerivatives<T> {
        self.density_derivs(r)
    }

    fn electron_count(&self) -> T {
        self.electron_count
    }
}
