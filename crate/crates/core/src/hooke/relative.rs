//! Radial equation of the relative motion, `-u'' + (ω²/4) s² u + (λ/s) u = ε u`.
//!
//! Numerov integration on a uniform grid. The eigenvalue is bracketed by
//! counting nodes of the outward solution, then refined by a safeguarded
//! secant on the log-derivative mismatch at the outer turning point.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeOptions {
    /// Number of Numerov intervals on `[0, s_max]`.
    pub intervals: usize,
    /// Box size in units of `1/√ω`.
    pub s_max_scaled: f64,
    /// Relative eigenvalue tolerance of the secant phase.
    pub tolerance: f64,
}

impl Default for RelativeOptions {
    fn default() -> Self {
        Self { intervals: 5200, s_max_scaled: 26.0, tolerance: 1e-14 }
    }
}

/// Normalized ground state of the relative motion sampled at `s_i = i h`.
#[derive(Clone, Debug)]
pub struct RelativeSolution {
    pub omega: f64,
    pub lambda: f64,
    pub h: f64,
    /// `u(s_i)` with `h Σ u_i² = 1`, positive.
    pub u: Vec<f64>,
    pub eps: f64,
    /// Kinetic expectation `∫ u'² ds` of the relative motion.
    pub kinetic: f64,
}

impl RelativeSolution {
    pub fn s(&self, i: usize) -> f64 {
        i as f64 * self.h
    }

    pub fn s_max(&self) -> f64 {
        self.s(self.u.len() - 1)
    }

    /// Closed-form solution for `λ = 0`: `u ∝ s exp(-ω s²/4)`, `ε = 3ω/2`.
    pub fn harmonic(omega: f64, opts: &RelativeOptions) -> Result<Self> {
        let (h, m) = grid(omega, opts)?;
        let mut u: Vec<f64> = (0..=m).map(|i| i as f64 * h).map(|s| s * (-0.25 * omega * s * s).exp()).collect();
        normalize(&mut u, h);
        Ok(Self { omega, lambda: 0.0, h, u, eps: 1.5 * omega, kinetic: 0.75 * omega })
    }
}

fn grid(omega: f64, opts: &RelativeOptions) -> Result<(f64, usize)> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::InvalidArgument(format!("omega must be positive, got {omega}")));
    }
    if opts.intervals < 16 || !(opts.s_max_scaled > 0.0) {
        return Err(Error::InvalidArgument("relative grid needs >= 16 intervals and a positive box".into()));
    }
    Ok((opts.s_max_scaled / omega.sqrt() / opts.intervals as f64, opts.intervals))
}

fn normalize(u: &mut [f64], h: f64) {
    let norm = (h * u.iter().map(|v| v * v).sum::<f64>()).sqrt();
    let sign = if u.iter().copied().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    u.iter_mut().for_each(|v| *v *= sign / norm);
}

struct Numerov {
    omega: f64,
    lambda: f64,
    h: f64,
    m: usize,
}

impl Numerov {
    fn potential(&self, s: f64) -> f64 {
        0.25 * self.omega * self.omega * s * s + self.lambda / s
    }

    /// `u'' = f u` with `f = V - ε`, for `i >= 1`.
    fn f(&self, i: usize, eps: f64) -> f64 {
        self.potential(i as f64 * self.h) - eps
    }

    /// Regular solution `s + a2 s² + ...` at `s = h`.
    fn series_start(&self, eps: f64) -> f64 {
        let l = self.lambda;
        let a2 = 0.5 * l;
        let a3 = (l * a2 - eps) / 6.0;
        let a4 = (l * a3 - eps * a2) / 12.0;
        let a5 = (l * a4 - eps * a3 + 0.25 * self.omega * self.omega) / 20.0;
        let h = self.h;
        h * (1.0 + h * (a2 + h * (a3 + h * (a4 + h * a5))))
    }

    /// Outward solution on `0..=end` and its number of sign changes.
    fn outward(&self, eps: f64, end: usize) -> (Vec<f64>, usize) {
        let h2 = self.h * self.h;
        let mut u = vec![0.0; end + 1];
        u[1] = self.series_start(eps);
        // (f u)(0) = λ u'(0) = λ
        let mut y_prev = -h2 * self.lambda / 12.0;
        let mut f_cur = self.f(1, eps);
        let mut y_cur = (1.0 - h2 * f_cur / 12.0) * u[1];
        let mut nodes = 0;
        for i in 1..end {
            let f_next = self.f(i + 1, eps);
            let y_next = 2.0 * y_cur - y_prev + h2 * f_cur * u[i];
            u[i + 1] = y_next / (1.0 - h2 * f_next / 12.0);
            if u[i + 1] * u[i] < 0.0 {
                nodes += 1;
            }
            let (mut a, mut b) = (y_cur, y_next);
            if u[i + 1].abs() > 1e250 {
                let k = 1e-250;
                u[..=i + 1].iter_mut().for_each(|v| *v *= k);
                a *= k;
                b *= k;
            }
            y_prev = a;
            y_cur = b;
            f_cur = f_next;
        }
        (u, nodes)
    }

    /// Inward solution on `start..=m` with `u(s_max) = 0`.
    fn inward(&self, eps: f64, start: usize) -> Vec<f64> {
        let (m, h2) = (self.m, self.h * self.h);
        let mut u = vec![0.0; m + 1];
        u[m - 1] = 1e-200;
        let mut y_prev = 0.0;
        let mut f_cur = self.f(m - 1, eps);
        let mut y_cur = (1.0 - h2 * f_cur / 12.0) * u[m - 1];
        for i in (start + 1..m).rev() {
            let f_next = self.f(i - 1, eps);
            let y_next = 2.0 * y_cur - y_prev + h2 * f_cur * u[i];
            u[i - 1] = y_next / (1.0 - h2 * f_next / 12.0);
            let (mut a, mut b) = (y_cur, y_next);
            if u[i - 1].abs() > 1e250 {
                let k = 1e-250;
                u[i - 1..].iter_mut().for_each(|v| *v *= k);
                a *= k;
                b *= k;
            }
            y_prev = a;
            y_cur = b;
            f_cur = f_next;
        }
        u
    }

    /// Index of the outer classical turning point, kept away from the ends.
    fn turning_index(&self, eps: f64) -> usize {
        let i_min = ((2.0 * self.lambda / (self.omega * self.omega)).cbrt() / self.h) as usize;
        let mut i = i_min.clamp(2, self.m - 3);
        while i < self.m - 3 && self.f(i + 1, eps) < 0.0 {
            i += 1;
        }
        i.max(8.min(self.m - 3))
    }

    /// Difference of outward and inward log-derivatives at index `k`.
    fn mismatch(&self, eps: f64, k: usize) -> f64 {
        let (out, _) = self.outward(eps, k + 1);
        let inn = self.inward(eps, k - 1);
        let d_out = (out[k + 1] - out[k - 1]) / out[k];
        let d_in = (inn[k + 1] - inn[k - 1]) / inn[k];
        (d_out - d_in) / (2.0 * self.h)
    }
}

/// Ground state of the relative motion; `lambda` scales the `1/s` repulsion.
pub fn solve_relative(omega: f64, lambda: f64, opts: &RelativeOptions) -> Result<RelativeSolution> {
    let (h, m) = grid(omega, opts)?;
    if !(lambda >= 0.0) {
        return Err(Error::InvalidArgument(format!("repulsion strength must be >= 0, got {lambda}")));
    }
    let nv = Numerov { omega, lambda, h, m };
    let nodes = |eps: f64| nv.outward(eps, m).1;

    // bracket the lowest level: zero nodes below it, at least one above
    let mut lo = 0.0;
    if nodes(lo) != 0 {
        return Err(Error::NotBracketed(format!("outward solution has nodes at eps = {lo}")));
    }
    let mut hi = 1.5 * omega + lambda * omega.sqrt() + 1.0;
    let mut tries = 0;
    while nodes(hi) == 0 {
        lo = hi;
        hi *= 2.0;
        tries += 1;
        if tries > 60 {
            return Err(Error::NotBracketed(format!("no node found below eps = {hi}")));
        }
    }
    while hi - lo > 1e-4 * hi {
        let mid = 0.5 * (lo + hi);
        if nodes(mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // regula falsi with the Illinois modification on the matching condition
    let k = nv.turning_index(0.5 * (lo + hi));
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (nv.mismatch(a, k), nv.mismatch(b, k));
    if !(fa * fb < 0.0) {
        return Err(Error::NotBracketed(format!("matching function does not change sign on [{a}, {b}]")));
    }
    let mut last_kept = 0i8;
    let mut eps = 0.5 * (a + b);
    for _ in 0..200 {
        eps = (a * fb - b * fa) / (fb - fa);
        if !(eps > a && eps < b) {
            eps = 0.5 * (a + b);
        }
        let fe = nv.mismatch(eps, k);
        if fe == 0.0 {
            break;
        }
        if fe * fa > 0.0 {
            a = eps;
            fa = fe;
            if last_kept == 1 {
                fb *= 0.5;
            }
            last_kept = 1;
        } else {
            b = eps;
            fb = fe;
            if last_kept == -1 {
                fa *= 0.5;
            }
            last_kept = -1;
        }
        if b - a < opts.tolerance * eps.abs() {
            break;
        }
    }

    let (out, _) = nv.outward(eps, k);
    let mut u = nv.inward(eps, k);
    let scale = out[k] / u[k];
    u.iter_mut().for_each(|v| *v *= scale);
    u[..=k].copy_from_slice(&out);
    normalize(&mut u, h);

    // <V> by the trapezoid rule plus its endpoint correction (f'(0) = λ)
    let v_mean = h * (1..m).map(|i| nv.potential(i as f64 * h) * u[i] * u[i]).sum::<f64>() + h * h * lambda / 12.0;
    Ok(RelativeSolution { omega, lambda, h, u, eps, kinetic: eps - v_mean })
}
