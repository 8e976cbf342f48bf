//! Radial grids, spherically symmetric densities, and radial integration.

mod grid;
mod poles;
mod quadrature;
mod spline;
mod tabulated;

pub use grid::{GridOptions, RadialGrid};
pub use poles::{
    find_poles, principal_value_integrate, principal_value_integrate_with, pv_window, residue, PoleWindow, PvIntegral,
};
pub use quadrature::{
    gauss_legendre, integrate_adaptive, integrate_gauss, integrate_radial, integrate_radial_with, Estimate,
    QuadratureOptions,
};
pub use spline::QuinticSpline;
pub use tabulated::{read_table, tabulated_derivatives, TabulatedDensity, MIN_SAMPLES};

use crate::jet::Jet;
use crate::scalar::Real;

/// The density and its first four radial derivatives at one radius (atomic units).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityDerivatives<T> {
    pub rho: T,
    pub d1: T,
    pub d2: T,
    pub d3: T,
    pub d4: T,
}

impl<T: Real> DensityDerivatives<T> {
    pub fn new(rho: T, d1: T, d2: T, d3: T, d4: T) -> Self {
        Self { rho, d1, d2, d3, d4 }
    }

    /// A constant density with vanishing derivatives.
    pub fn uniform(rho: T) -> Self {
        let z = T::zero();
        Self::new(rho, z, z, z, z)
    }

    pub fn from_jet(j: &Jet<T>) -> Self {
        let [rho, d1, d2, d3, d4] = j.derivatives();
        Self { rho, d1, d2, d3, d4 }
    }

    pub fn to_jet(&self) -> Jet<T> {
        Jet::from_derivatives(self.as_array())
    }

    pub fn as_array(&self) -> [T; 5] {
        [self.rho, self.d1, self.d2, self.d3, self.d4]
    }

    /// Derivatives of `g * rho`.
    pub fn scaled(&self, g: T) -> Self {
        Self::new(self.rho * g, self.d1 * g, self.d2 * g, self.d3 * g, self.d4 * g)
    }

    pub fn is_valid(&self) -> bool {
        self.rho >= T::zero() && self.as_array().iter().all(|x| x.is_finite())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityKind {
    Analytic,
    Tabulated,
}

/// A spherically symmetric electron density with derivatives through fourth order.
pub trait DensityModel<T: Real>: Sync {
    /// Density and radial derivatives at `r >= 0`.
    fn eval(&self, r: T) -> DensityDerivatives<T>;

    /// Number of electrons the density integrates to.
    fn electron_count(&self) -> T;

    fn kind(&self) -> DensityKind {
        DensityKind::Analytic
    }
}

impl<T: Real, D: DensityModel<T> + ?Sized> DensityModel<T> for &D {
    fn eval(&self, r: T) -> DensityDerivatives<T> {
        (**self).eval(r)
    }
    fn electron_count(&self) -> T {
        (**self).electron_count()
    }
    fn kind(&self) -> DensityKind {
        (**self).kind()
    }
}

/// Density given by a closed-form expression evaluated on jets.
pub struct AnalyticDensity<F> {
    f: F,
    electrons: f64,
}

impl<F> AnalyticDensity<F> {
    pub fn new(electrons: f64, f: F) -> Self {
        Self { f, electrons }
    }
}

impl<T, F> DensityModel<T> for AnalyticDensity<F>
where
    T: Real,
    F: Fn(Jet<T>) -> Jet<T> + Sync,
{
    fn eval(&self, r: T) -> DensityDerivatives<T> {
        DensityDerivatives::from_jet(&(self.f)(Jet::variable(r)))
    }

    fn electron_count(&self) -> T {
        T::lit(self.electrons)
    }
}

/// `g * rho(r)` for a wrapped density.
pub struct ScaledDensity<D> {
    pub inner: D,
    pub factor: f64,
}

impl<T: Real, D: DensityModel<T>> DensityModel<T> for ScaledDensity<D> {
    fn eval(&self, r: T) -> DensityDerivatives<T> {
        self.inner.eval(r).scaled(T::lit(self.factor))
    }

    fn electron_count(&self) -> T {
        self.inner.electron_count() * T::lit(self.factor)
    }

    fn kind(&self) -> DensityKind {
        self.inner.kind()
    }
}
