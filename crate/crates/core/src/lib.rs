//! Gradient expansion of the kinetic-energy density functional through sixth
//! order for spherically symmetric densities, resummed pointwise with Padé
//! approximants and integrated with principal values across their poles.
//!
//! The numerical core is generic over the scalar type ([`Real`]); the aliases
//! below fix it to `f64`.

// negated comparisons reject NaN along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod atoms;
pub mod cli;
pub mod error;
pub mod hooke;
pub mod jet;
pub mod kedf;
pub mod radial;
pub mod resum;
pub mod scalar;

pub use error::{BasisError, Error, Result};
pub use kedf::{tau0, tau2, tau4, tau6, tau_point, tau_w};
pub use radial::{DensityKind, DensityModel};
pub use resum::{integrate_method, pade11, pade21, pade21_of_x, partial_sum, percent_error, ResumMethod, Resummed};
pub use scalar::{Erf, Real};

pub type Jet = jet::Jet<f64>;
pub type DensityDerivatives = radial::DensityDerivatives<f64>;
pub type TauPoint = kedf::TauPoint<f64>;
pub type RadialGrid = radial::RadialGrid<f64>;
pub type TabulatedDensity = radial::TabulatedDensity<f64>;
pub type KineticReport = resum::KineticReport<f64>;
pub type StoBasisSet = atoms::StoBasisSet<f64>;
