//! Fixtures shared by the integration tests: closed-form densities and a
//! finite-difference toolkit that never touches the library's jet arithmetic.

#![allow(dead_code)]

use std::f64::consts::PI;

use kedf_pade::kedf::Contractions;
use kedf_pade::radial::AnalyticDensity;
use kedf_pade::Jet;

pub type JetFn = fn(Jet) -> Jet;

/// `exp(-r²)`.
pub fn gaussian_jet(x: Jet) -> Jet {
    (x * x).scale(-1.0).exp()
}

/// `exp(-r)`.
pub fn exponential_jet(x: Jet) -> Jet {
    x.scale(-1.0).exp()
}

/// `exp(-r²) (1 + r²)`.
pub fn dressed_gaussian_jet(x: Jet) -> Jet {
    let x2 = x * x;
    x2.scale(-1.0).exp() * x2.add_scalar(1.0)
}

pub fn gaussian() -> AnalyticDensity<JetFn> {
    AnalyticDensity::new(PI.powf(1.5), gaussian_jet)
}

pub fn exponential() -> AnalyticDensity<JetFn> {
    AnalyticDensity::new(8.0 * PI, exponential_jet)
}

pub fn dressed_gaussian() -> AnalyticDensity<JetFn> {
    AnalyticDensity::new(2.5 * PI.powf(1.5), dressed_gaussian_jet)
}

/// Plain `f64` versions of the same densities, as functions of `r`.
pub fn gaussian_r(r: f64) -> f64 {
    (-r * r).exp()
}

pub fn exponential_r(r: f64) -> f64 {
    (-r).exp()
}

pub fn dressed_gaussian_r(r: f64) -> f64 {
    (-r * r).exp() * (1.0 + r * r)
}

/// Fornberg weights for derivatives `0..=max_order` at `x0` on the given nodes.
pub fn fornberg(x0: f64, nodes: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] *= c4 / c3;
        }
        c1 = c2;
    }
    c
}

/// Central-difference weights on `2 * half + 1` unit-spaced offsets.
pub fn central_weights(half: usize, max_order: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let offsets: Vec<f64> = (0..=2 * half).map(|i| i as f64 - half as f64).collect();
    let w = fornberg(0.0, &offsets, max_order);
    (offsets, w)
}

/// `d^k f / dx^k` at `x` by a central stencil of `2 * half + 1` points with step `h`.
pub fn derivative_1d(f: impl Fn(f64) -> f64, x: f64, k: usize, h: f64, half: usize) -> f64 {
    let (offsets, w) = central_weights(half, k);
    offsets.iter().zip(&w[k]).map(|(o, wk)| wk * f(x + o * h)).sum::<f64>() / h.powi(k as i32)
}

/// Mixed partial `∂x^a ∂y^b ∂z^c F` at `p` by a tensor-product central stencil.
pub struct Stencil3 {
    offsets: Vec<f64>,
    weights: Vec<Vec<f64>>,
    h: f64,
}

impl Stencil3 {
    pub fn new(half: usize, h: f64) -> Self {
        let (offsets, weights) = central_weights(half, 4);
        Self { offsets, weights, h }
    }

    pub fn partial(&self, f: &impl Fn([f64; 3]) -> f64, p: [f64; 3], orders: [usize; 3]) -> f64 {
        let n = self.offsets.len();
        let mut acc = 0.0;
        for i in 0..n {
            let wi = self.weights[orders[0]][i];
            if wi == 0.0 {
                continue;
            }
            for j in 0..n {
                let wj = self.weights[orders[1]][j];
                if wj == 0.0 {
                    continue;
                }
                for k in 0..n {
                    let wk = self.weights[orders[2]][k];
                    if wk == 0.0 {
                        continue;
                    }
                    let q = [
                        p[0] + self.offsets[i] * self.h,
                        p[1] + self.offsets[j] * self.h,
                        p[2] + self.offsets[k] * self.h,
                    ];
                    acc += wi * wj * wk * f(q);
                }
            }
        }
        acc / self.h.powi((orders[0] + orders[1] + orders[2]) as i32)
    }
}

/// Direction of the sample point; deliberately off every axis and diagonal.
const DIRECTION: [f64; 3] = [0.48, 0.6, 0.64];

pub struct Cartesian {
    pub rho: f64,
    pub c: Contractions<f64>,
}

fn unit(i: usize) -> [usize; 3] {
    let mut o = [0; 3];
    o[i] = 1;
    o
}

/// Contractions of `ρ(|x|)` at distance `r` along [`DIRECTION`], each component
/// taken from a 13-point tensor-product stencil.
pub fn cartesian(f: impl Fn(f64) -> f64, r: f64, h: f64) -> Cartesian {
    let field = |q: [f64; 3]| f((q[0] * q[0] + q[1] * q[1] + q[2] * q[2]).sqrt());
    let p = DIRECTION.map(|u| u * r);
    let st = Stencil3::new(6, h);
    let d = |orders: [usize; 3]| st.partial(&field, p, orders);

    let grad: Vec<f64> = (0..3).map(|i| d(unit(i))).collect();
    let mut hess = [[0.0; 3]; 3];
    for (i, row) in hess.iter_mut().enumerate() {
        for (j, h) in row.iter_mut().enumerate() {
            let mut o = unit(i);
            o[j] += 1;
            *h = d(o);
        }
    }
    let lap = hess[0][0] + hess[1][1] + hess[2][2];
    let grad_lap: Vec<f64> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let mut o = unit(i);
                    o[j] += 2;
                    d(o)
                })
                .sum()
        })
        .collect();
    let mut lap4 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let mut o = [0; 3];
            o[i] += 2;
            o[j] += 2;
            lap4 += d(o);
        }
    }
    let hg: Vec<f64> = (0..3).map(|i| (0..3).map(|j| hess[i][j] * grad[j]).sum()).collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    Cartesian {
        rho: d([0, 0, 0]),
        c: Contractions {
            g2: dot(&grad, &grad),
            lap,
            glap2: dot(&grad_lap, &grad_lap),
            lap4,
            g_dot_glap: dot(&grad, &grad_lap),
            g_hess2: dot(&hg, &hg),
        },
    }
}

pub fn oracle_tau4(x: &Cartesian) -> f64 {
    let rho = x.rho;
    let l = x.c.lap / rho;
    let g = x.c.g2 / (rho * rho);
    (3.0 * PI * PI).powf(-2.0 / 3.0) / 540.0 * rho.cbrt() * (l * l - 9.0 / 8.0 * l * g + g * g / 3.0)
}

/// The sixth-order density assembled term by term.
pub fn oracle_tau6(x: &Cartesian) -> f64 {
    let rho = x.rho;
    let c = &x.c;
    let l = c.lap / rho;
    let g = c.g2 / (rho * rho);
    let terms = [
        13.0 * c.glap2 / (rho * rho),
        2575.0 / 144.0 * l * l * l,
        249.0 / 16.0 * g * c.lap4 / rho,
        1499.0 / 18.0 * g * l * l,
        -1307.0 / 36.0 * g * c.g_dot_glap / (rho * rho),
        343.0 / 18.0 * c.g_hess2 / rho.powi(4),
        8341.0 / 72.0 * l * g * g,
        -1600495.0 / 2592.0 * g * g * g,
    ];
    let pre = (3.0 * PI * PI).powf(-4.0 / 3.0) / 45360.0 / rho.cbrt();
    pre * terms.iter().sum::<f64>()
}

/// Reference rows: `(omega, T_s, [T0, T0+T2, T0+T2+T4, [1/1], [2/1]] percent errors)`.
pub const HOOKE_REFERENCE: [(f64, f64, [f64; 5]); 4] = [
    (0.25, 0.30036, [-12.7, -1.67, 15.6, 0.48, -1.15]),
    (0.5, 0.63525, [-11.9, -0.78, 16.5, 1.27, -0.26]),
    (1.0, 1.32757, [-11.3, -0.19, 15.4, 1.81, 0.33]),
    (4.0, 5.62884, [-10.7, 0.45, 15.1, 2.4, 0.98]),
];

/// Reference rows: `(symbol, T_HF, percent errors)`.
pub const ATOM_REFERENCE: [(&str, f64, [f64; 5]); 3] = [
    ("He", 2.8617, [-10.5, 0.59, 3.57, 2.01, 0.53]),
    ("Ne", 128.55, [-8.4, -0.55, 0.95, 0.50, -0.51]),
    ("Ar", 526.81, [-7.0, -0.49, 0.69, 0.32, -0.43]),
];
