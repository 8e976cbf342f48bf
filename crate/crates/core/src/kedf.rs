//! Gradient-expansion kinetic-energy densities through sixth order.
//!
//! Every vector and tensor contraction is reduced to radial derivatives of a
//! spherically symmetric density; see [`contractions`].

use crate::error::{Error, Result};
use crate::radial::DensityDerivatives;
use crate::scalar::Real;

/// `3 pi^2`.
fn three_pi_sq<T: Real>() -> T {
    T::lit(3.0) * T::PI() * T::PI()
}

/// Thomas–Fermi constant `(3/10) (3 pi^2)^(2/3)`.
pub fn c_tf<T: Real>() -> T {
    T::ratio(3, 10) * three_pi_sq::<T>().powf(T::ratio(2, 3))
}

/// The scalar contractions entering the fourth- and sixth-order terms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Contractions<T> {
    /// `(∇ρ)²`
    pub g2: T,
    /// `∇²ρ`
    pub lap: T,
    /// `(∇∇²ρ)²`
    pub glap2: T,
    /// `∇⁴ρ = ∇²∇²ρ`
    pub lap4: T,
    /// `∇ρ · ∇∇²ρ`
    pub g_dot_glap: T,
    /// `(∇ρ · ∇∇ρ)²`, the Hessian applied to the gradient, squared.
    pub g_hess2: T,
}

/// Spherical reduction of the contractions at radius `r > 0`.
///
/// With `L = ρ'' + 2ρ'/r`: `∇²ρ = L`, `∇∇²ρ = L' r̂`, `∇⁴ρ = ρ'''' + 4ρ'''/r`,
/// and the Hessian maps `ρ' r̂` to `ρ'ρ'' r̂`.
pub fn contractions<T: Real>(d: &DensityDerivatives<T>, r: T) -> Result<Contractions<T>> {
    if !(r > T::zero()) {
        return Err(Error::InvalidArgument(format!("contractions need r > 0, got {r}")));
    }
    let two = T::lit(2.0);
    let lap = d.d2 + two * d.d1 / r;
    let dlap = d.d3 + two * d.d2 / r - two * d.d1 / (r * r);
    let lap4 = d.d4 + T::lit(4.0) * d.d3 / r;
    let gh = d.d1 * d.d2;
    Ok(Contractions {
        g2: d.d1 * d.d1,
        lap,
        glap2: dlap * dlap,
        lap4,
        g_dot_glap: d.d1 * dlap,
        g_hess2: gh * gh,
    })
}

/// `C_TF ρ^(5/3)`.
pub fn tau0<T: Real>(rho: T) -> Result<T> {
    if rho < T::zero() {
        return Err(Error::InvalidArgument(format!("negative density {rho}")));
    }
    Ok(c_tf::<T>() * rho.powf(T::ratio(5, 3)))
}

/// `(∇ρ)² / (72 ρ)`.
pub fn tau2<T: Real>(c: &Contractions<T>, rho: T) -> Result<T> {
    if rho > T::zero() {
        Ok(c.g2 / (T::lit(72.0) * rho))
    } else if c.g2 == T::zero() && rho == T::zero() {
        Ok(T::zero())
    } else {
        Err(Error::VanishingDensity { r: f64::NAN })
    }
}

/// Fourth-order term.
pub fn tau4<T: Real>(c: &Contractions<T>, rho: T) -> Result<T> {
    if !(rho > T::zero()) {
        return Err(Error::VanishingDensity { r: f64::NAN });
    }
    let prefactor = three_pi_sq::<T>().powf(T::ratio(-2, 3)) / T::lit(540.0);
    let a = c.lap / rho;
    let b = c.g2 / (rho * rho);
    let bracket = a * a - T::ratio(9, 8) * a * b + T::ratio(1, 3) * b * b;
    Ok(prefactor * rho.cbrt() * bracket)
}

/// Sixth-order term; its eight contributions are assembled from the contractions.
pub fn tau6<T: Real>(c: &Contractions<T>, rho: T) -> Result<T> {
    if !(rho > T::zero()) {
        return Err(Error::VanishingDensity { r: f64::NAN });
    }
    let prefactor = three_pi_sq::<T>().powf(T::ratio(-4, 3)) / T::lit(45360.0);
    let rho2 = rho * rho;
    let a = c.lap / rho;
    let b = c.g2 / rho2;
    let bracket = T::lit(13.0) * c.glap2 / rho2
        + T::ratio(2575, 144) * a * a * a
        + T::ratio(249, 16) * b * (c.lap4 / rho)
        + T::ratio(1499, 18) * b * a * a
        - T::ratio(1307, 36) * b * (c.g_dot_glap / rho2)
        + T::ratio(343, 18) * c.g_hess2 / (rho2 * rho2)
        + T::ratio(8341, 72) * a * b * b
        - T::ratio(1_600_495, 2592) * b * b * b;
    Ok(prefactor * bracket / rho.cbrt())
}

/// The four series coefficients at one radius.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct TauPoint<T> {
    pub tau0: T,
    pub tau2: T,
    pub tau4: T,
    pub tau6: T,
}

impl<T: Copy> TauPoint<T> {
    pub fn new(tau0: T, tau2: T, tau4: T, tau6: T) -> Self {
        Self { tau0, tau2, tau4, tau6 }
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.tau0, self.tau2, self.tau4, self.tau6]
    }
}

impl<T: Real> TauPoint<T> {
    /// `|τ6| < |τ4| < |τ2| < |τ0|`: the series looks convergent here.
    pub fn is_ordered(&self) -> bool {
        self.tau6.abs() < self.tau4.abs() && self.tau4.abs() < self.tau2.abs() && self.tau2.abs() < self.tau0.abs()
    }
}

/// All four terms at radius `r` from one set of contractions.
pub fn tau_point<T: Real>(d: &DensityDerivatives<T>, r: T) -> Result<TauPoint<T>> {
    let at = |e: Error| match e {
        Error::VanishingDensity { .. } => Error::VanishingDensity { r: r.to_f64().unwrap_or(f64::NAN) },
        other => other,
    };
    let c = contractions(d, r)?;
    Ok(TauPoint {
        tau0: tau0(d.rho)?,
        tau2: tau2(&c, d.rho).map_err(at)?,
        tau4: tau4(&c, d.rho).map_err(at)?,
        tau6: tau6(&c, d.rho).map_err(at)?,
    })
}

/// Von Weizsäcker density `(∇ρ)² / (8ρ)`; equals `9 τ2`.
pub fn tau_w<T: Real>(d: &DensityDerivatives<T>) -> T {
    if d.rho > T::zero() {
        d.d1 * d.d1 / (T::lit(8.0) * d.rho)
    } else {
        T::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn dd(v: [f64; 5]) -> DensityDerivatives<f64> {
        DensityDerivatives::new(v[0], v[1], v[2], v[3], v[4])
    }

    #[test]
    fn thomas_fermi_constant() {
        assert!((tau0(1.0_f64).unwrap() - 2.871234).abs() < 1e-6);
        assert_eq!(tau0(0.0_f64).unwrap(), 0.0);
        assert_relative_eq!(tau0(8.0_f64).unwrap(), 32.0 * c_tf::<f64>(), max_relative = 1e-15);
        assert!(tau0(-1.0_f64).is_err());
    }

    #[test]
    fn laplacian_of_r_squared() {
        let c = contractions(&dd([1.0, 2.0, 2.0, 0.0, 0.0]), 1.0).unwrap();
        assert_eq!(c.lap, 6.0);
    }

    #[test]
    fn bilaplacian_of_r_fourth() {
        // rho = r^4 at r = 1
        let c = contractions(&dd([1.0, 4.0, 12.0, 24.0, 24.0]), 1.0).unwrap();
        assert_eq!(c.lap4, 120.0);
    }

    #[test]
    fn contractions_reject_origin() {
        assert!(contractions(&dd([1.0, 0.0, 0.0, 0.0, 0.0]), 0.0).is_err());
    }

    #[test]
    fn tau2_exponential_and_gaussian() {
        // rho = e^{-r}: (rho')^2 / rho = rho
        for r in [0.0_f64, 0.5, 2.0] {
            let e = (-r).exp();
            let c = contractions(&dd([e, -e, e, -e, e]), r.max(1e-9)).unwrap();
            assert_relative_eq!(tau2(&c, e).unwrap(), e / 72.0, max_relative = 1e-15);
        }
        let e1 = (-1.0_f64).exp();
        let c = contractions(&dd([e1, -2.0 * e1, 2.0 * e1, 4.0 * e1, -20.0 * e1]), 1.0).unwrap();
        assert_relative_eq!(tau2(&c, e1).unwrap(), e1 / 18.0, max_relative = 1e-15);
    }

    #[test]
    fn uniform_density_has_no_gradient_terms() {
        let p = tau_point(&DensityDerivatives::uniform(1.0_f64), 0.7).unwrap();
        assert!((p.tau0 - 2.871234).abs() < 1e-6);
        assert_eq!((p.tau2, p.tau4, p.tau6), (0.0, 0.0, 0.0));
    }

    #[test]
    fn vanishing_density_errors() {
        let c = contractions(&dd([0.0, 1.0, 0.0, 0.0, 0.0]), 1.0).unwrap();
        assert!(matches!(tau2(&c, 0.0), Err(Error::VanishingDensity { .. })));
        assert!(tau4(&c, 0.0).is_err());
        assert!(tau6(&c, 0.0).is_err());
        let flat = contractions(&dd([0.0, 0.0, 0.0, 0.0, 0.0]), 1.0).unwrap();
        assert_eq!(tau2(&flat, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn scaling_factors_for_g_eight() {
        let d = dd([0.3, -0.4, 0.2, 0.5, -0.7]);
        let p = tau_point(&d, 0.9).unwrap();
        let q = tau_point(&d.scaled(8.0), 0.9).unwrap();
        assert_relative_eq!(q.tau4, 2.0 * p.tau4, max_relative = 1e-14);
        assert_relative_eq!(q.tau6, 0.5 * p.tau6, max_relative = 1e-14);
    }

    #[test]
    fn generic_over_f32() {
        let p = tau_point(&DensityDerivatives::new(1.0_f32, -1.0, 1.0, -1.0, 1.0), 1.0).unwrap();
        assert!(p.tau0 > 0.0 && p.tau2 > 0.0);
    }
}
