//! Hooke's-law atom: closed form against the numerical solver, energies and
//! structural properties of the reconstructed density.

use std::sync::OnceLock;

use kedf_pade::hooke::{
    density_omega_half, kinetic_exact, kinetic_omega_half, relative_orbital_omega_half, solve_general, solve_relative,
    HookeParams, HookeSolution, OmegaHalfDensity, RelativeOptions,
};
use kedf_pade::radial::integrate_radial;
use kedf_pade::{tau_point, DensityModel, Error};

fn solved(omega: f64) -> &'static HookeSolution {
    static CACHE: OnceLock<Vec<HookeSolution>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        [0.25, 0.5, 1.0, 4.0]
            .into_iter()
            .map(|w| solve_general(HookeParams::interacting(w).unwrap(), &RelativeOptions::default()).unwrap())
            .collect()
    });
    all.iter().find(|s| s.params.omega() == omega).expect("omega not cached")
}

fn free(omega: f64) -> HookeSolution {
    solve_general(HookeParams::new(omega, false).unwrap(), &RelativeOptions::default()).unwrap()
}

#[test]
fn numeric_density_matches_closed_form() {
    let sol = solved(0.5);
    let mut worst = 0.0f64;
    for i in 0..=500 {
        let r = 5.0 * i as f64 / 500.0;
        let exact = density_omega_half(r).unwrap().rho;
        let numeric = sol.density.eval(r).rho;
        worst = worst.max(((numeric - exact) / exact).abs());
    }
    assert!(worst <= 1e-6, "worst relative deviation {worst:e}");
}

#[test]
fn numeric_derivatives_follow_closed_form() {
    let sol = solved(0.5);
    for r in [0.3, 1.1, 2.7, 4.4] {
        let a = density_omega_half(r).unwrap().as_array();
        let b = sol.density.eval(r).as_array();
        for k in 0..5 {
            let scale = a[0] * 4f64.powi(k as i32);
            assert!((a[k] - b[k]).abs() <= 1e-6 * scale, "r = {r}, d{k}: {} vs {}", b[k], a[k]);
        }
    }
}

#[test]
fn relative_orbital_at_omega_half() {
    let rel = solve_relative(0.5, 1.0, &RelativeOptions::default()).unwrap();
    assert!((rel.eps - 1.25).abs() <= 1.25e-9, "{}", rel.eps);
    let norm = (rel.h * (0..rel.u.len()).map(|i| relative_orbital_omega_half(rel.s(i)).powi(2)).sum::<f64>()).sqrt();
    for i in (0..rel.u.len()).step_by(97) {
        let exact = relative_orbital_omega_half(rel.s(i)) / norm;
        assert!((rel.u[i] - exact).abs() <= 1e-8);
    }
}

#[test]
fn total_energy_at_omega_half_is_two() {
    assert!((solved(0.5).e_total - 2.0).abs() <= 1e-6, "{}", solved(0.5).e_total);
}

#[test]
fn kinetic_references() {
    let cases = [(0.25, 0.30036, 3e-4), (0.5, 0.63525, 2e-4), (1.0, 1.32757, 5e-4), (4.0, 5.62884, 6e-3)];
    for (omega, want, tol) in cases {
        let t = kinetic_exact(solved(omega));
        assert!((t - want).abs() <= tol, "omega = {omega}: {t} vs {want}");
    }
}

#[test]
fn both_kinetic_routes_agree_at_omega_half() {
    let analytic = kinetic_omega_half().unwrap();
    let numeric = kinetic_exact(solved(0.5));
    assert!(((analytic - numeric) / analytic).abs() <= 1e-7, "{analytic} vs {numeric}");
}

#[test]
fn electron_count_is_two() {
    for omega in [0.25, 0.5, 1.0, 4.0] {
        let sol = solved(omega);
        assert!((sol.electrons - 2.0).abs() <= 1e-8, "omega = {omega}: {}", sol.electrons);
        assert_eq!(sol.density.electron_count(), 2.0);
        assert!(sol.t_s > 0.0);
    }
}

#[test]
fn non_interacting_energies() {
    for omega in [0.5, 1.0, 2.0] {
        let sol = free(omega);
        assert!((sol.e_total - 3.0 * omega).abs() <= 1e-12 * omega, "E = {}", sol.e_total);
        assert!((sol.t_interacting - 1.5 * omega).abs() <= 1e-12 * omega);
        // a single Gaussian orbital: the von Weizsäcker energy is the full kinetic energy
        assert!((sol.t_s - 1.5 * omega).abs() <= 1e-8 * omega, "T_s = {}", sol.t_s);
    }
    assert!((kinetic_exact(&free(0.5)) - 0.75).abs() <= 1e-8);
}

#[test]
fn non_interacting_density_is_gaussian() {
    let omega = 1.0;
    let sol = free(omega);
    for r in [0.0, 0.4, 1.3, 2.2] {
        let want = 2.0 * (omega / std::f64::consts::PI).powf(1.5) * (-omega * r * r).exp();
        let got = sol.density.eval(r).rho;
        assert!(((got - want) / want).abs() <= 1e-9, "r = {r}: {got} vs {want}");
    }
}

#[test]
fn direction_average_is_independent_of_angular_rule() {
    let sol = solved(1.0);
    for r in [0.05, 0.6, 1.5, 3.0] {
        let closed = sol.density.eval_direct(r).rho;
        for n in [24, 32, 48] {
            let angular = sol.density.eval_angular(r, n);
            assert!(((angular - closed) / closed).abs() <= 1e-8, "r = {r}, n = {n}: {angular} vs {closed}");
        }
    }
}

#[test]
fn cached_interpolation_matches_direct_sum() {
    for omega in [0.25, 4.0] {
        let d = &solved(omega).density;
        let h = 0.04 / omega.sqrt();
        for i in 0..200 {
            // midpoints between cache nodes are the worst case for the interpolant
            let r = (i as f64 + 0.5) * h * 1.7;
            if r > d.cache_radius() {
                break;
            }
            let a = d.eval_direct(r);
            let b = d.eval(r);
            assert!(((a.rho - b.rho) / a.rho).abs() <= 1e-9, "omega = {omega}, r = {r}");
            let scale = a.rho * (4.0 * omega.sqrt()).powi(4);
            assert!((a.d4 - b.d4).abs() <= 1e-6 * scale);
        }
    }
}

#[test]
fn tail_decreases_monotonically() {
    for omega in [0.25, 0.5, 1.0, 4.0] {
        let d = &solved(omega).density;
        let step = 0.01 / omega.sqrt();
        let values: Vec<f64> = (0..2000).map(|i| d.eval(i as f64 * step).rho).collect();
        let peak = values.iter().enumerate().fold(0, |best, (i, v)| if *v > values[best] { i } else { best });
        for w in values[peak..].windows(2) {
            assert!(w[1] < w[0], "omega = {omega}: density rises in the tail");
        }
    }
}

#[test]
fn closed_form_normalization_and_origin() {
    let d = OmegaHalfDensity;
    let grid = kedf_pade::RadialGrid::for_density(&d, &Default::default()).unwrap();
    let n = integrate_radial(|r| d.eval(r).rho, &grid).unwrap();
    assert!((n - 2.0).abs() <= 1e-9);
    let origin = density_omega_half(0.0).unwrap();
    assert!(origin.rho.is_finite() && origin.rho > 0.0);
    assert!(density_omega_half(-1.0).is_err());
}

#[test]
fn convergent_window_exists_at_omega_half() {
    let ordered: Vec<f64> = (1..2000)
        .map(|i| i as f64 * 0.005)
        .filter(|&r| tau_point(&density_omega_half(r).unwrap(), r).unwrap().is_ordered())
        .collect();
    assert!(!ordered.is_empty());
    println!("|tau6| < |tau4| < |tau2| < |tau0| for r in [{}, {}]", ordered[0], ordered[ordered.len() - 1]);
}

#[test]
fn invalid_frequencies_rejected() {
    for omega in [0.0, -1.0, f64::INFINITY, f64::NAN] {
        assert!(matches!(HookeParams::interacting(omega), Err(Error::InvalidArgument(_))));
    }
}
