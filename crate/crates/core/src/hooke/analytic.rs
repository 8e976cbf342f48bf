//! Closed-form density of the Hooke's-law atom at `omega = 1/2`.

use std::f64::consts::{FRAC_2_SQRT_PI, PI, SQRT_2};

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::radial::{DensityDerivatives, DensityModel};

/// Squared normalization of the two-electron wavefunction `N0 (1 + r12/2) exp(-(r1² + r2²)/4)`.
pub fn n0_squared() -> f64 {
    1.0 / (4.0 * PI.powf(2.5) * (8.0 + 5.0 * PI.sqrt()))
}

/// Factor that turns the printed density expression into one integrating to two electrons.
pub const DENSITY_RESCALE: f64 = 8.0 * PI;

/// Below this radius `erf(r/√2)/r` is summed from its Maclaurin series.
const SERIES_RADIUS: f64 = 1.0;

/// `erf(x/√2) / x`, regular at the origin.
fn erf_over_x(x: Jet<f64>) -> Jet<f64> {
    if x.value().abs() < SERIES_RADIUS {
        // sqrt(2/pi) * sum_k (-1)^k (x²/2)^k / (k! (2k+1))
        let mut coeffs = [0.0; 18];
        let mut term = FRAC_2_SQRT_PI / SQRT_2;
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = term / (2 * k + 1) as f64;
            term *= -0.5 / (k + 1) as f64;
        }
        (x * x).horner(&coeffs)
    } else {
        x.scale(1.0 / SQRT_2).erf() / x
    }
}

fn density_jet(x: Jet<f64>) -> Jet<f64> {
    let x2 = x * x;
    let gauss = x2.scale(-0.5).exp();
    let bracket = (x2.scale(0.25).add_scalar(1.75) + x2.add_scalar(1.0) * erf_over_x(x)).scale((PI / 2.0).sqrt());
    (gauss * (bracket + gauss)).scale(DENSITY_RESCALE * n0_squared())
}

/// Density and radial derivatives of the `omega = 1/2` Hooke's-law atom.
pub fn density_omega_half(r: f64) -> Result<DensityDerivatives<f64>> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidArgument(format!("radius must be finite and >= 0, got {r}")));
    }
    Ok(DensityDerivatives::from_jet(&density_jet(Jet::variable(r))))
}

/// Relative-motion radial function `u(s) = s (1 + s/2) exp(-s²/8)` of the `omega = 1/2`
/// ground state, unnormalized. Its eigenvalue is 5/4.
pub fn relative_orbital_omega_half(s: f64) -> f64 {
    s * (1.0 + 0.5 * s) * (-s * s / 8.0).exp()
}

/// The `omega = 1/2` density as a [`DensityModel`].
#[derive(Clone, Copy, Debug, Default)]
pub struct OmegaHalfDensity;

impl DensityModel<f64> for OmegaHalfDensity {
    fn eval(&self, r: f64) -> DensityDerivatives<f64> {
        // the expression is even in r, so negative radii mirror the positive side
        DensityDerivatives::from_jet(&density_jet(Jet::variable(r)))
    }

    fn electron_count(&self) -> f64 {
        2.0
    }
}
