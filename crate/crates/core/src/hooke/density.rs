//! One-electron density of a Hooke's-law atom from its relative-motion orbital.
//!
//! With the centre of mass in its Gaussian ground state, averaging over the
//! direction of the relative coordinate gives
//!
//! `ρ(r) = 2 (2ω/π)^{3/2} ∫ u(s)² exp(-2ω(r - s/2)²) J(2ωrs) ds`,
//! `J(z) = (1 - exp(-2z)) / (2z)`.

use std::f64::consts::PI;

use crate::jet::Jet;
use crate::radial::{gauss_legendre, DensityDerivatives, DensityModel};

use super::relative::RelativeSolution;

/// Below this argument `(1 - e^{-x})/x` is summed from its series.
const SERIES_ARGUMENT: f64 = 0.5;

/// Cache node spacing and extent in units of `1/√ω`.
const NODE_SPACING: f64 = 0.04;
const CACHE_RADIUS: f64 = 18.0;

/// `(1 - e^{-x}) / x` on a jet, regular at zero.
fn one_minus_exp_over(x: Jet<f64>) -> Jet<f64> {
    if x.value().abs() < SERIES_ARGUMENT {
        // sum_j (-x)^j / (j+1)!
        let mut coeffs = [0.0; 20];
        let mut term = 1.0;
        for (j, c) in coeffs.iter_mut().enumerate() {
            term /= (j + 1) as f64;
            *c = if j % 2 == 0 { term } else { -term };
        }
        x.horner(&coeffs)
    } else {
        (Jet::constant(1.0) - (-x).exp()) / x
    }
}

/// Radial density built from a relative-motion solution.
///
/// The reconstruction sum is evaluated exactly at nodes spaced `0.04/√ω`;
/// between them `ln ρ` is interpolated by two-point Hermite polynomials of
/// degree nine that match its derivatives through fourth order at both ends.
/// Past the last node `ln ρ` continues as its fourth-order Taylor polynomial.
#[derive(Clone, Debug)]
pub struct HookeDensity {
    omega: f64,
    prefactor: f64,
    /// `(s_i, h u_i²)` for the nonzero samples.
    weights: Vec<(f64, f64)>,
    spacing: f64,
    /// Normalized Taylor coefficients of `ln ρ` at `r_j = j * spacing`.
    nodes: Vec<[f64; 5]>,
}

impl HookeDensity {
    pub fn new(rel: &RelativeSolution) -> Self {
        let omega = rel.omega;
        let weights = rel
            .u
            .iter()
            .enumerate()
            .filter(|(_, u)| **u != 0.0)
            .map(|(i, u)| (rel.s(i), rel.h * u * u))
            .collect();
        let mut density = Self {
            omega,
            prefactor: 2.0 * (2.0 * omega / PI).powf(1.5),
            weights,
            spacing: NODE_SPACING / omega.sqrt(),
            nodes: Vec::new(),
        };
        let count = (CACHE_RADIUS / NODE_SPACING).round() as usize;
        for j in 0..=count {
            let jet = density.direct_jet(j as f64 * density.spacing);
            if !(jet.value() > 1e-300) {
                break;
            }
            density.nodes.push(jet.ln().c);
        }
        density
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Radius beyond which the density is extrapolated.
    pub fn cache_radius(&self) -> f64 {
        (self.nodes.len() - 1) as f64 * self.spacing
    }

    fn direct_jet(&self, r: f64) -> Jet<f64> {
        let x = Jet::variable(r);
        let two_w = 2.0 * self.omega;
        let mut acc = Jet::constant(0.0);
        for &(s, w) in &self.weights {
            let a = r - 0.5 * s;
            if two_w * a * a > 700.0 {
                continue;
            }
            let shifted = x.add_scalar(-0.5 * s);
            let gauss = (shifted * shifted).scale(-two_w).exp();
            let kernel = gauss * one_minus_exp_over(x.scale(2.0 * two_w * s));
            acc = acc + kernel.scale(w);
        }
        acc.scale(self.prefactor)
    }

    /// Density from the reconstruction sum, bypassing the interpolation cache.
    pub fn eval_direct(&self, r: f64) -> DensityDerivatives<f64> {
        DensityDerivatives::from_jet(&self.direct_jet(r))
    }

    /// Density with the direction average done by `n`-point Gauss–Legendre
    /// quadrature over `cos θ` instead of in closed form.
    pub fn eval_angular(&self, r: f64, n: usize) -> f64 {
        let (mu, wt) = gauss_legendre::<f64>(n);
        let two_w = 2.0 * self.omega;
        let mut acc = 0.0;
        for &(s, w) in &self.weights {
            let avg: f64 = mu
                .iter()
                .zip(&wt)
                .map(|(m, q)| q * (-two_w * (r * r + 0.25 * s * s - r * s * m)).exp())
                .sum::<f64>()
                * 0.5;
            acc += w * avg;
        }
        acc * self.prefactor
    }

    fn log_jet(&self, r: f64) -> Jet<f64> {
        let last = self.nodes.len() - 1;
        let h = self.spacing;
        if r >= last as f64 * h {
            let t = r - last as f64 * h;
            let c = self.nodes[last];
            let mut out = [0.0; 5];
            // re-expand the Taylor polynomial about r
            for (k, o) in out.iter_mut().enumerate() {
                let mut binom = 1.0;
                for (j, cj) in c.iter().enumerate().skip(k) {
                    *o += cj * binom * t.powi((j - k) as i32);
                    binom = binom * (j + 1) as f64 / (j + 1 - k) as f64;
                }
            }
            return Jet { c: out };
        }
        let j = ((r / h).floor() as usize).min(last - 1);
        let t = r / h - j as f64;
        let (a, b) = (self.nodes[j], self.nodes[j + 1]);
        let p = hermite9(&a, &b, h, t);
        let mut c = p.c;
        let mut scale = 1.0;
        for ck in c.iter_mut() {
            *ck *= scale;
            scale /= h;
        }
        Jet { c }
    }
}

/// Two-point Hermite interpolant on `[0, 1]` in the scaled variable, as a jet at `t`.
///
/// `a`, `b` are normalized Taylor coefficients in the unscaled variable at the
/// left and right ends of an interval of length `h`.
fn hermite9(a: &[f64; 5], b: &[f64; 5], h: f64, t: f64) -> Jet<f64> {
    const Z: [f64; 10] = [0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0];
    let mut ta = [0.0; 5];
    let mut tb = [0.0; 5];
    let mut hk = 1.0;
    for k in 0..5 {
        ta[k] = a[k] * hk;
        tb[k] = b[k] * hk;
        hk *= h;
    }
    // confluent divided differences, computed in place
    let mut dd: [f64; 10] = std::array::from_fn(|i| if i < 5 { ta[0] } else { tb[0] });
    for level in 1..10 {
        for i in (level..10).rev() {
            dd[i] = if Z[i] == Z[i - level] {
                if Z[i] == 0.0 {
                    ta[level]
                } else {
                    tb[level]
                }
            } else {
                (dd[i] - dd[i - 1]) / (Z[i] - Z[i - level])
            };
        }
    }
    let x = Jet::variable(t);
    let mut p = Jet::constant(dd[9]);
    for k in (0..9).rev() {
        p = (p * x.add_scalar(-Z[k])).add_scalar(dd[k]);
    }
    p
}

impl DensityModel<f64> for HookeDensity {
    fn eval(&self, r: f64) -> DensityDerivatives<f64> {
        DensityDerivatives::from_jet(&self.log_jet(r.abs()).exp())
    }

    fn electron_count(&self) -> f64 {
        2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_matches_closed_form() {
        let a = one_minus_exp_over(Jet::variable(SERIES_ARGUMENT - 1e-13)).derivatives();
        let b = one_minus_exp_over(Jet::variable(SERIES_ARGUMENT + 1e-13)).derivatives();
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-9, "{x} vs {y}");
        }
    }

    #[test]
    fn hermite_reproduces_degree_nine() {
        let coeffs = [0.3, -1.0, 0.5, 0.2, -0.1, 0.05, 0.01, -0.02, 0.003, 0.001];
        let p = |x: Jet<f64>| x.horner(&coeffs);
        let h = 0.7;
        let (x0, x1) = (0.4, 0.4 + h);
        let a = p(Jet::variable(x0)).c;
        let b = p(Jet::variable(x1)).c;
        let t = 0.37;
        let got = hermite9(&a, &b, h, t);
        let want = p(Jet::variable(x0 + t * h));
        let mut scale = 1.0;
        for k in 0..5 {
            assert!((got.c[k] * scale - want.c[k]).abs() < 1e-12 * (1.0 + want.c[k].abs()));
            scale /= h;
        }
    }
}
