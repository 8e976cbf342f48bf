//! Spherical reductions checked against brute-force Cartesian finite differences.
//!
//! The oracle samples `ρ(|x|)` on a 3D tensor-product stencil, builds the
//! gradient, Hessian, `∇∇²ρ` and `∇⁴ρ` component by component, and assembles
//! the fourth- and sixth-order densities from their vector forms.

mod common;

use common::{
    cartesian, dressed_gaussian, dressed_gaussian_r, exponential, exponential_r, gaussian, gaussian_r, oracle_tau4,
    oracle_tau6,
};
use kedf_pade::kedf::contractions;
use kedf_pade::{tau_point, DensityModel};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Runs the oracle over a set of radii and returns the worst relative errors of (τ4, τ6).
fn sweep(density: &dyn DensityModel<f64>, f: fn(f64) -> f64, radii: &[f64], h: f64) -> (f64, f64) {
    let mut worst = (0.0f64, 0.0f64);
    for &r in radii {
        let d = density.eval(r);
        assert!(d.rho > 1e-6);
        let p = tau_point(&d, r).unwrap();
        let x = cartesian(f, r, h);
        let t4 = oracle_tau4(&x);
        let t6 = oracle_tau6(&x);
        let e4 = rel(p.tau4, t4);
        let e6 = rel(p.tau6, t6);
        assert!(e4 <= 1e-5, "tau4 at r = {r}: {} vs oracle {t4} (rel {e4:e})", p.tau4);
        assert!(e6 <= 1e-5, "tau6 at r = {r}: {} vs oracle {t6} (rel {e6:e})", p.tau6);
        worst = (worst.0.max(e4), worst.1.max(e6));
    }
    worst
}

fn radii(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

#[test]
fn gaussian_contractions_at_point_seven() {
    let r = 0.7;
    let spherical = contractions(&gaussian().eval(r), r).unwrap();
    let x = cartesian(gaussian_r, r, 0.02);
    let pairs = [
        ("g2", spherical.g2, x.c.g2),
        ("lap", spherical.lap, x.c.lap),
        ("glap2", spherical.glap2, x.c.glap2),
        ("lap4", spherical.lap4, x.c.lap4),
        ("g_dot_glap", spherical.g_dot_glap, x.c.g_dot_glap),
        ("g_hess2", spherical.g_hess2, x.c.g_hess2),
    ];
    for (name, s, c) in pairs {
        assert!(rel(s, c) <= 1e-6, "{name}: spherical {s} vs cartesian {c}");
    }
}

#[test]
fn gaussian_tau4_at_point_seven_to_1e8() {
    let r = 0.7;
    let p = tau_point(&gaussian().eval(r), r).unwrap();
    let x = cartesian(gaussian_r, r, 0.02);
    let t4 = oracle_tau4(&x);
    assert!(rel(p.tau4, t4) <= 1e-8, "{} vs {t4}", p.tau4);
}

#[test]
fn gaussian_oracle_sweep() {
    let (e4, e6) = sweep(&gaussian(), gaussian_r, &radii(0.3, 3.6, 12), 0.02);
    println!("gaussian: worst tau4 {e4:e}, tau6 {e6:e}");
}

#[test]
fn exponential_oracle_sweep() {
    // the stencil must stay clear of the cusp at the origin
    let (e4, e6) = sweep(&exponential(), exponential_r, &radii(0.5, 13.0, 12), 0.02);
    println!("exponential: worst tau4 {e4:e}, tau6 {e6:e}");
}

#[test]
fn dressed_gaussian_oracle_sweep() {
    let (e4, e6) = sweep(&dressed_gaussian(), dressed_gaussian_r, &radii(0.3, 3.9, 12), 0.02);
    println!("gaussian x (1 + r^2): worst tau4 {e4:e}, tau6 {e6:e}");
}

#[test]
fn exponential_tau2_at_two() {
    let r = 2.0;
    let p = tau_point(&exponential().eval(r), r).unwrap();
    assert!(rel(p.tau2, (-2.0f64).exp() / 72.0) < 1e-14);
    let x = cartesian(exponential_r, r, 0.02);
    assert!(rel(p.tau4, oracle_tau4(&x)) < 1e-6);
    assert!(rel(p.tau6, oracle_tau6(&x)) < 1e-5);
}

#[test]
fn positivity_of_leading_terms() {
    let densities: [&dyn DensityModel<f64>; 3] = [&gaussian(), &exponential(), &dressed_gaussian()];
    for d in densities {
        for r in radii(0.01, 6.0, 300) {
            let p = tau_point(&d.eval(r), r).unwrap();
            assert!(p.tau0 >= 0.0 && p.tau2 >= 0.0, "r = {r}: {p:?}");
        }
    }
}
