//! Hooke's-law two-electron atom: `H = -½(∇₁² + ∇₂²) + ½ω²(r₁² + r₂²) + 1/r₁₂`.
//!
//! The Hamiltonian separates into centre-of-mass and relative motion. The
//! centre of mass is an exact Gaussian; the relative motion is solved
//! numerically (or in closed form without the repulsion), and the density is
//! reconstructed from both.

mod analytic;
mod density;
mod relative;

pub use analytic::{density_omega_half, n0_squared, relative_orbital_omega_half, OmegaHalfDensity, DENSITY_RESCALE};
pub use density::HookeDensity;
pub use relative::{solve_relative, RelativeOptions, RelativeSolution};

use crate::error::{Error, Result};
use crate::kedf::tau_w;
use crate::radial::{integrate_radial, DensityModel, GridOptions, RadialGrid};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HookeParams {
    omega: f64,
    interacting: bool,
}

impl HookeParams {
    pub fn new(omega: f64, interacting: bool) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidArgument(format!("omega must be positive and finite, got {omega}")));
        }
        Ok(Self { omega, interacting })
    }

    pub fn interacting(omega: f64) -> Result<Self> {
        Self::new(omega, true)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn is_interacting(&self) -> bool {
        self.interacting
    }
}

/// Ground state of a Hooke's-law atom.
#[derive(Clone, Debug)]
pub struct HookeSolution {
    pub params: HookeParams,
    pub density: HookeDensity,
    /// Relative-motion eigenvalue.
    pub eps_rel: f64,
    /// Kohn–Sham kinetic energy of the density, `∫ (∇ρ)²/(8ρ)` for the two-electron singlet.
    pub t_s: f64,
    /// Kinetic expectation of the interacting wavefunction, `3ω/4 + <T_rel>`.
    pub t_interacting: f64,
    /// `3ω/2 + ε_rel`.
    pub e_total: f64,
    /// `4π ∫ r² ρ dr`.
    pub electrons: f64,
}

impl HookeSolution {
    /// A radial grid covering the density out to its kinetic-energy tail.
    pub fn grid(&self) -> Result<RadialGrid<f64>> {
        RadialGrid::for_density(&self.density, &GridOptions::default())
    }
}

/// Largest tolerated deviation of the integrated density from two electrons.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-6;

/// Solves the ground state for any `omega > 0`.
pub fn solve_general(params: HookeParams, opts: &RelativeOptions) -> Result<HookeSolution> {
    let omega = params.omega;
    let rel = if params.interacting {
        solve_relative(omega, 1.0, opts)?
    } else {
        RelativeSolution::harmonic(omega, opts)?
    };
    let density = HookeDensity::new(&rel);
    let grid = RadialGrid::for_density(&density, &GridOptions::default())?;
    let electrons = integrate_radial(|r| density.eval(r).rho, &grid)?;
    if (electrons - 2.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::Normalization { found: electrons, expected: 2.0 });
    }
    let t_s = integrate_radial(|r| tau_w(&density.eval(r)), &grid)?;
    Ok(HookeSolution {
        params,
        density,
        eps_rel: rel.eps,
        t_s,
        t_interacting: 0.75 * omega + rel.kinetic,
        e_total: 1.5 * omega + rel.eps,
        electrons,
    })
}

/// Reference kinetic energy of the density (the `T_s` of the accuracy tables).
pub fn kinetic_exact(sol: &HookeSolution) -> f64 {
    sol.t_s
}

/// `T_s` of the closed-form `omega = 1/2` density, by quadrature.
pub fn kinetic_omega_half() -> Result<f64> {
    let grid = RadialGrid::for_density(&OmegaHalfDensity, &GridOptions::default())?;
    integrate_radial(|r| tau_w(&OmegaHalfDensity.eval(r)), &grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_reject_nonpositive_omega() {
        assert!(HookeParams::new(0.0, true).is_err());
        assert!(HookeParams::new(-1.0, false).is_err());
        assert!(HookeParams::new(f64::NAN, true).is_err());
        assert!(HookeParams::new(0.25, true).is_ok());
    }

    #[test]
    fn relative_eigenvalue_at_omega_half() {
        let rel = solve_relative(0.5, 1.0, &RelativeOptions::default()).unwrap();
        assert!((rel.eps - 1.25).abs() < 1.25e-9, "eps = {}", rel.eps);
    }

    #[test]
    fn relative_orbital_matches_closed_form() {
        let rel = solve_relative(0.5, 1.0, &RelativeOptions::default()).unwrap();
        let exact: Vec<f64> = (0..rel.u.len()).map(|i| relative_orbital_omega_half(rel.s(i))).collect();
        let norm = (rel.h * exact.iter().map(|v| v * v).sum::<f64>()).sqrt();
        let worst = rel.u.iter().zip(&exact).map(|(a, b)| (a - b / norm).abs()).fold(0.0, f64::max);
        assert!(worst < 1e-8, "max deviation {worst}");
    }

    #[test]
    fn harmonic_eigenvalue_from_numerov() {
        let rel = solve_relative(1.0, 0.0, &RelativeOptions::default()).unwrap();
        assert!((rel.eps - 1.5).abs() < 1.5e-9);
        assert!((rel.kinetic - 0.75).abs() < 1e-8);
    }
}
