//! Simple-pole location and Cauchy principal-value integration.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::quadrature::{integrate_adaptive, integrate_gauss, Estimate, QuadratureOptions};
use super::RadialGrid;

/// Roots of `denominator` bracketed by sign changes between adjacent positive grid nodes.
///
/// Each root is refined by bisection to an interval no wider than `1e-12 * r_max`.
/// Non-finite and exactly zero samples are skipped, so an identically vanishing
/// denominator has no poles. The result is sorted ascending.
pub fn find_poles<T, F>(mut denominator: F, grid: &RadialGrid<T>) -> Vec<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let width = T::lit(1e-12) * grid.r_max();
    let mut poles = Vec::new();
    let mut prev: Option<(T, T)> = None;
    for &r in grid.nodes().iter().filter(|&&r| r > T::zero()) {
        let v = denominator(r);
        if !v.is_finite() {
            continue;
        }
        // exact zeros carry no sign; a root there is caught by the neighbours
        if v == T::zero() {
            continue;
        }
        if let Some((r0, v0)) = prev {
            if v0.signum() != v.signum() {
                poles.push(bisect(&mut denominator, r0, v0, r, width));
            }
        }
        prev = Some((r, v));
    }
    poles
}

fn bisect<T: Real, F: FnMut(T) -> T>(f: &mut F, mut a: T, va: T, mut b: T, width: T) -> T {
    let sa = va.signum();
    while b - a > width {
        let m = (a + b) * T::lit(0.5);
        if m <= a || m >= b {
            break;
        }
        let vm = f(m);
        if vm == T::zero() {
            return m;
        }
        if vm.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    (a + b) * T::lit(0.5)
}

/// Innermost part of a folded window, as a fraction of its half-width, and the
/// Gauss–Legendre order used there.
const CORE_FRACTION: f64 = 1e-3;
const CORE_ORDER: usize = 12;

/// Symmetric window around one pole and the residue of the integrand there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoleWindow<T> {
    pub pole: T,
    pub half_width: T,
    /// `lim (r - pole) * 4 pi r^2 f(r)`.
    pub residue: T,
    /// Window contribution to the principal value.
    pub value: T,
}

/// Result of a principal-value integration.
#[derive(Clone, Debug, PartialEq)]
pub struct PvIntegral<T> {
    pub value: T,
    pub error: T,
    pub windows: Vec<PoleWindow<T>>,
}

/// Half-width of the exclusion window around `poles[i]`:
/// `min(0.05 r*, half the distance to the nearest pole or endpoint)`.
pub fn pv_window<T: Real>(poles: &[T], i: usize, r_max: T) -> T {
    let p = poles[i];
    let half = T::lit(0.5);
    let left = if i == 0 { p } else { (p - poles[i - 1]) * half };
    let right = if i + 1 == poles.len() { r_max - p } else { (poles[i + 1] - p) * half };
    (T::lit(0.05) * p).min(left).min(right)
}

/// Residue of `g` at a simple pole by Richardson extrapolation of `(r - pole) g(r)`.
///
/// Left and right one-sided limits are extrapolated separately and must agree;
/// the returned value is the extrapolated symmetric average, which carries only
/// even powers of the offset.
pub fn residue<T, G>(g: &mut G, pole: T, half_width: T) -> Result<T>
where
    T: Real,
    G: FnMut(T) -> Result<T>,
{
    const LEVELS: usize = 6;
    let mut right = [T::zero(); LEVELS];
    let mut left = [T::zero(); LEVELS];
    let mut h = half_width * T::lit(0.25);
    for k in 0..LEVELS {
        right[k] = h * g(pole + h)?;
        left[k] = -h * g(pole - h)?;
        h = h * T::lit(0.5);
    }
    let sym: Vec<T> = right.iter().zip(&left).map(|(a, b)| (*a + *b) * T::lit(0.5)).collect();
    let a_right = richardson(&right, T::lit(2.0));
    let a_left = richardson(&left, T::lit(2.0));
    let a_sym = richardson(&sym, T::lit(4.0));

    let scale = half_width * (g(pole + half_width)?.abs().max(g(pole - half_width)?.abs()));
    let tol = T::lit(1e-4) * a_right.abs().max(a_left.abs()) + T::lit(1e-9) * scale;
    if !((a_right - a_left).abs() <= tol) || !a_sym.is_finite() {
        return Err(Error::ResidueNotConverged {
            pole: pole.to_f64().unwrap(),
            left: a_left.to_f64().unwrap(),
            right: a_right.to_f64().unwrap(),
        });
    }
    Ok(a_sym)
}

/// Neville–Richardson extrapolation to zero step for a sequence with step halving,
/// where `factor` is the ratio of successive error terms (2 for all powers, 4 for even).
fn richardson<T: Real>(seq: &[T], factor: T) -> T {
    let mut table = seq.to_vec();
    let mut f = factor;
    for level in 1..seq.len() {
        for k in (level..seq.len()).rev() {
            table[k] = table[k] + (table[k] - table[k - 1]) / (f - T::one());
        }
        f = f * factor;
    }
    table[seq.len() - 1]
}

/// Principal value of `4 pi ∫_0^{r_max} r^2 f(r) dr` across simple poles.
///
/// Around each pole the residue `A` is subtracted: `∫ [g - A/(r - r*)]` over the
/// symmetric window, where the subtracted term integrates to zero. The window is
/// folded onto `t = |r - r*|` so the two sides share nodes.
pub fn principal_value_integrate<T, F>(f: F, poles: &[T], grid: &RadialGrid<T>) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    principal_value_integrate_with(f, poles, grid, &QuadratureOptions::default()).map(|p| p.value)
}

pub fn principal_value_integrate_with<T, F>(
    mut f: F,
    poles: &[T],
    grid: &RadialGrid<T>,
    opts: &QuadratureOptions<T>,
) -> Result<PvIntegral<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let r_max = grid.r_max();
    let min_gap = T::lit(1e-9) * r_max;
    for (i, &p) in poles.iter().enumerate() {
        if !(p > T::zero() && p < r_max) {
            return Err(Error::InvalidArgument(format!("pole {p} outside (0, {r_max})")));
        }
        if i > 0 && p - poles[i - 1] <= min_gap {
            return Err(Error::OverlappingPoles {
                first: poles[i - 1].to_f64().unwrap(),
                second: p.to_f64().unwrap(),
            });
        }
    }

    let four_pi = T::lit(4.0) * T::PI();
    let mut g = |r: T| -> Result<T> { Ok(four_pi * r * r * f(r)?) };

    let mut value = T::zero();
    let mut error = T::zero();
    let mut windows = Vec::with_capacity(poles.len());
    let mut start = T::zero();
    for i in 0..poles.len() {
        let p = poles[i];
        let delta = pv_window(poles, i, r_max);
        let lo = p - delta;
        if lo > start {
            let est = integrate_adaptive(&mut g, &grid.breakpoints(start, lo, opts.seed_panels), opts)?;
            value = value + est.value;
            error = error + est.error;
        }
        let a = residue(&mut g, p, delta)?;
        // the window value may cancel to zero, so its tolerance is set by the integrand's scale
        let scale = delta * (g(p + delta)?.abs() + g(p - delta)?.abs());
        let mut folded = |t: T| -> Result<T> { Ok((g(p + t)? - a / t) + (g(p - t)? + a / t)) };
        // Near t = 0 the two sides cancel to rounding noise of order 1/t², which an
        // adaptive rule would chase; the innermost slice gets a fixed rule instead,
        // whose nodes stay clear of the pole (the folded integrand is smooth there).
        let t_core = delta * T::lit(CORE_FRACTION);
        let core = integrate_gauss(&mut folded, T::zero(), t_core, CORE_ORDER)?;
        let seeds = [t_core, delta * T::lit(0.01), delta * T::lit(0.1), delta * T::lit(0.25), delta];
        let window_opts = QuadratureOptions { abs_tol: opts.abs_tol.max(opts.rel_tol * scale), ..*opts };
        let est: Estimate<T> = integrate_adaptive(&mut folded, &seeds, &window_opts)?;
        let window = core + est.value;
        value = value + window;
        error = error + est.error;
        windows.push(PoleWindow { pole: p, half_width: delta, residue: a, value: window });
        start = p + delta;
    }
    if r_max > start {
        let est = integrate_adaptive(&mut g, &grid.breakpoints(start, r_max, opts.seed_panels), opts)?;
        value = value + est.value;
        error = error + est.error;
    }
    Ok(PvIntegral { value, error, windows })
}
