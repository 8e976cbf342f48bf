//! Pointwise resummation of the gradient series and integration to kinetic energies.
//!
//! The pointwise evaluators only use field operations, so they work for exact
//! rationals as well as floats.

use std::fmt;
use std::str::FromStr;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::kedf::{tau_point, TauPoint};
use crate::radial::{
    find_poles, integrate_radial_with, principal_value_integrate_with, DensityModel, QuadratureOptions, RadialGrid,
};
use crate::scalar::Real;

/// Outcome of a pointwise Padé evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Resummed<T> {
    Value(T),
    /// The denominator vanishes while the numerator does not.
    Pole,
}

impl<T> Resummed<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Resummed::Value(v) => Some(v),
            Resummed::Pole => None,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, Resummed::Pole)
    }
}

/// Truncation order of a partial sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    Zero,
    Two,
    Four,
}

pub fn partial_sum<T: Num + Copy>(p: &TauPoint<T>, order: SeriesOrder) -> T {
    match order {
        SeriesOrder::Zero => p.tau0,
        SeriesOrder::Two => p.tau0 + p.tau2,
        SeriesOrder::Four => p.tau0 + p.tau2 + p.tau4,
    }
}

/// `τ0 + a² / (a - b)`, returning `base` when `a = b = 0`.
fn rational_tail<T: Num + Copy>(base: T, a: T, b: T) -> Resummed<T> {
    let den = a - b;
    if den == T::zero() {
        if a == T::zero() {
            Resummed::Value(base)
        } else {
            Resummed::Pole
        }
    } else {
        Resummed::Value(base + a * a / den)
    }
}

/// `τ0 + τ2² / (τ2 - τ4)`.
pub fn pade11<T: Num + Copy>(p: &TauPoint<T>) -> Resummed<T> {
    rational_tail(p.tau0, p.tau2, p.tau4)
}

/// `τ0 + τ2 + τ4² / (τ4 - τ6)`.
pub fn pade21<T: Num + Copy>(p: &TauPoint<T>) -> Resummed<T> {
    rational_tail(p.tau0 + p.tau2, p.tau4, p.tau6)
}

/// `f(x) = τ0 + τ2 x + τ4² x² / (τ4 - τ6 x)`, the [2/1] approximant as a function of
/// the expansion variable; `pade21` is its value at `x = 1`.
pub fn pade21_of_x<T: Num + Copy>(p: &TauPoint<T>, x: T) -> Resummed<T> {
    let den = p.tau4 - p.tau6 * x;
    let num = p.tau4 * p.tau4 * x * x;
    let base = p.tau0 + p.tau2 * x;
    if den == T::zero() {
        if num == T::zero() {
            Resummed::Value(base)
        } else {
            Resummed::Pole
        }
    } else {
        Resummed::Value(base + num / den)
    }
}

/// The five summation methods, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResumMethod {
    T0,
    T02,
    T024,
    Pade11,
    Pade21,
}

impl ResumMethod {
    pub const ALL: [ResumMethod; 5] =
        [ResumMethod::T0, ResumMethod::T02, ResumMethod::T024, ResumMethod::Pade11, ResumMethod::Pade21];

    pub fn label(self) -> &'static str {
        match self {
            ResumMethod::T0 => "T0",
            ResumMethod::T02 => "T0+T2",
            ResumMethod::T024 => "T0+T2+T4",
            ResumMethod::Pade11 => "T[1/1]",
            ResumMethod::Pade21 => "T[2/1]",
        }
    }

    pub fn is_pade(self) -> bool {
        matches!(self, ResumMethod::Pade11 | ResumMethod::Pade21)
    }

    pub fn evaluate<T: Num + Copy>(self, p: &TauPoint<T>) -> Resummed<T> {
        match self {
            ResumMethod::T0 => Resummed::Value(partial_sum(p, SeriesOrder::Zero)),
            ResumMethod::T02 => Resummed::Value(partial_sum(p, SeriesOrder::Two)),
            ResumMethod::T024 => Resummed::Value(partial_sum(p, SeriesOrder::Four)),
            ResumMethod::Pade11 => pade11(p),
            ResumMethod::Pade21 => pade21(p),
        }
    }

    /// Denominator whose roots are the poles of the method, if it has one.
    pub fn denominator<T: Num + Copy>(self, p: &TauPoint<T>) -> Option<T> {
        match self {
            ResumMethod::Pade11 => Some(p.tau2 - p.tau4),
            ResumMethod::Pade21 => Some(p.tau4 - p.tau6),
            _ => None,
        }
    }
}

impl fmt::Display for ResumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ResumMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.trim().to_ascii_lowercase().chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        match key.as_str() {
            "t0" => Ok(ResumMethod::T0),
            "t02" | "t0t2" => Ok(ResumMethod::T02),
            "t024" | "t0t2t4" => Ok(ResumMethod::T024),
            "pade11" | "t11" | "11" => Ok(ResumMethod::Pade11),
            "pade21" | "t21" | "21" => Ok(ResumMethod::Pade21),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

/// Integrated kinetic energy for one method against a reference value.
#[derive(Clone, Debug, PartialEq)]
pub struct KineticReport<T> {
    pub method: ResumMethod,
    pub t: T,
    pub t_ref: T,
    pub percent_error: T,
    /// Radii where the Padé denominator changes sign (empty for partial sums).
    pub poles: Vec<T>,
}

/// `100 (T - T_ref) / T_ref`; negative when `T` underestimates.
pub fn percent_error<T: Real>(t: T, t_ref: T) -> Result<T> {
    if t_ref == T::zero() {
        return Err(Error::InvalidArgument("reference energy is zero".into()));
    }
    Ok(T::lit(100.0) * (t - t_ref) / t_ref)
}

fn tau_at<T: Real, D: DensityModel<T> + ?Sized>(density: &D, r: T) -> Result<TauPoint<T>> {
    tau_point(&density.eval(r), r)
}

/// Total kinetic energy `4 pi ∫ r² τ_m dr` for one method.
///
/// Padé methods locate the sign changes of their denominator on the grid and
/// take the Cauchy principal value across them.
pub fn integrate_method<T, D>(density: &D, method: ResumMethod, grid: &RadialGrid<T>, t_ref: T) -> Result<KineticReport<T>>
where
    T: Real,
    D: DensityModel<T> + ?Sized,
{
    integrate_method_with(density, method, grid, t_ref, &QuadratureOptions::default())
}

pub fn integrate_method_with<T, D>(
    density: &D,
    method: ResumMethod,
    grid: &RadialGrid<T>,
    t_ref: T,
    opts: &QuadratureOptions<T>,
) -> Result<KineticReport<T>>
where
    T: Real,
    D: DensityModel<T> + ?Sized,
{
    let integrand = |r: T| -> Result<T> {
        let p = tau_at(density, r)?;
        method.evaluate(&p).value().ok_or(Error::NonFinite { r: r.to_f64().unwrap(), value: f64::INFINITY })
    };
    let (t, poles) = if method.is_pade() {
        // denominators at rounding level of the series (a flat density) carry no sign
        let denominator = |r: T| match tau_at(density, r) {
            Ok(p) => {
                let d = method.denominator(&p).unwrap();
                let scale = p.as_array().iter().fold(T::zero(), |acc, t| acc + t.abs());
                if d.abs() <= T::lit(1e-14) * scale {
                    T::zero()
                } else {
                    d
                }
            }
            Err(_) => T::nan(),
        };
        let poles = find_poles(denominator, grid);
        let pv = principal_value_integrate_with(integrand, &poles, grid, opts)?;
        (pv.value, poles)
    } else {
        (integrate_radial_with(integrand, grid, opts)?.value, Vec::new())
    };
    Ok(KineticReport { method, t, t_ref, percent_error: percent_error(t, t_ref)?, poles })
}

/// Log-log slope of `|τ^[1/1] - τ0|` against `ρ` over the outer part of the grid.
///
/// Diagnostic for the tail behavior of the [1/1] correction; `None` when fewer
/// than three usable points remain.
pub fn pade11_tail_exponent<T, D>(density: &D, grid: &RadialGrid<T>, from_fraction: T) -> Option<T>
where
    T: Real,
    D: DensityModel<T> + ?Sized,
{
    let r_start = grid.r_max() * from_fraction;
    let pts: Vec<(T, T)> = grid
        .nodes()
        .iter()
        .filter(|&&r| r >= r_start && r > T::zero())
        .filter_map(|&r| {
            let d = density.eval(r);
            let p = tau_point(&d, r).ok()?;
            let corr = (pade11(&p).value()? - p.tau0).abs();
            (corr > T::zero() && corr.is_finite()).then(|| (d.rho.ln(), corr.ln()))
        })
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let n = T::from_count(pts.len());
    let (sx, sy) = pts.iter().fold((T::zero(), T::zero()), |(a, b), p| (a + p.0, b + p.1));
    let (mx, my) = (sx / n, sy / n);
    let (sxy, sxx) = pts
        .iter()
        .fold((T::zero(), T::zero()), |(a, b), p| (a + (p.0 - mx) * (p.1 - my), b + (p.0 - mx) * (p.0 - mx)));
    Some(sxy / sxx)
}
