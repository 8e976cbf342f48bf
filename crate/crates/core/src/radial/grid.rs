use crate::error::{Error, Result};
use crate::kedf;
use crate::scalar::Real;

use super::DensityModel;

/// Ordered radial nodes on `[0, r_max]`.
///
/// Nodes drive pole scanning and seed the panels of adaptive quadrature.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialGrid<T> {
    nodes: Vec<T>,
}

/// Controls for [`RadialGrid::for_density`].
#[derive(Clone, Copy, Debug)]
pub struct GridOptions {
    /// First positive node (bohr).
    pub r_first: f64,
    /// Number of intervals.
    pub intervals: usize,
    /// Upper bound on the tail weight `4 pi r^2 (tau0 + |tau2| + |tau4|)` at `r_max`.
    pub tail_tolerance: f64,
    /// Fixed outer radius; skips the tail search when set.
    pub r_max: Option<f64>,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self { r_first: 1e-4, intervals: 2000, tail_tolerance: 1e-12, r_max: None }
    }
}

impl<T: Real> RadialGrid<T> {
    pub fn new(nodes: Vec<T>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::InvalidGrid("need at least two nodes".into()));
        }
        if nodes[0] < T::zero() {
            return Err(Error::InvalidGrid(format!("first node {} is negative", nodes[0])));
        }
        if let Some(i) = nodes.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidGrid(format!("nodes not strictly increasing at index {}", i + 1)));
        }
        if nodes.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidGrid("non-finite node".into()));
        }
        Ok(Self { nodes })
    }

    /// `intervals + 1` equally spaced nodes from 0 to `r_max`.
    pub fn uniform(r_max: T, intervals: usize) -> Result<Self> {
        if intervals == 0 || !(r_max > T::zero()) {
            return Err(Error::InvalidGrid("uniform grid needs r_max > 0 and intervals > 0".into()));
        }
        let h = r_max / T::from_count(intervals);
        let mut nodes: Vec<T> = (0..intervals).map(|i| h * T::from_count(i)).collect();
        nodes.push(r_max);
        Self::new(nodes)
    }

    /// Nodes `r_i = a (exp(beta i) - 1)`, `i = 0..=intervals`, with `r_1 = r_first`
    /// and `r_intervals = r_max`. Dense near the origin, geometric further out.
    pub fn exponential(r_first: T, r_max: T, intervals: usize) -> Result<Self> {
        if intervals < 2 || !(r_first > T::zero()) || !(r_max > r_first) {
            return Err(Error::InvalidGrid("exponential grid needs 0 < r_first < r_max and intervals >= 2".into()));
        }
        let ratio = (r_max / r_first).to_f64().unwrap();
        let n = intervals as f64;
        if ratio <= n {
            // a geometric grid would be coarser than uniform spacing
            return Self::uniform(r_max, intervals);
        }
        // (exp(beta n) - 1) / (exp(beta) - 1) = ratio, increasing in beta
        let target = |beta: f64| ((beta * n).exp_m1() / beta.exp_m1()).ln() - ratio.ln();
        let (mut lo, mut hi) = (1e-12_f64, 1.0_f64);
        while target(hi) < 0.0 {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if target(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let beta = 0.5 * (lo + hi);
        let a = r_first.to_f64().unwrap() / beta.exp_m1();
        let mut nodes: Vec<T> = (0..intervals).map(|i| T::lit(a * (beta * i as f64).exp_m1())).collect();
        nodes[0] = T::zero();
        nodes.push(r_max);
        Self::new(nodes)
    }

    /// Exponential grid whose outer radius satisfies the tail tolerance for `density`.
    pub fn for_density<D: DensityModel<T> + ?Sized>(density: &D, opts: &GridOptions) -> Result<Self> {
        let r_max = match opts.r_max {
            Some(r) => T::lit(r),
            None => tail_radius(density, T::lit(opts.tail_tolerance)),
        };
        Self::exponential(T::lit(opts.r_first), r_max, opts.intervals)
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn r_max(&self) -> T {
        *self.nodes.last().unwrap()
    }

    /// Up to `max_panels + 1` node values spanning `[lo, hi]`, always including both ends.
    pub fn breakpoints(&self, lo: T, hi: T, max_panels: usize) -> Vec<T> {
        let inner: Vec<T> = self.nodes.iter().copied().filter(|&x| x > lo && x < hi).collect();
        let mut out = vec![lo];
        if inner.len() <= max_panels.saturating_sub(1) {
            out.extend(inner);
        } else {
            let stride = inner.len() as f64 / max_panels as f64;
            let mut last = usize::MAX;
            for k in 1..max_panels {
                let i = ((k as f64) * stride) as usize;
                if i < inner.len() && i != last {
                    out.push(inner[i]);
                    last = i;
                }
            }
        }
        out.push(hi);
        out
    }

    /// Tail weight `4 pi r^2 (tau0 + |tau2| + |tau4|)` at the outer node.
    pub fn tail_weight<D: DensityModel<T> + ?Sized>(&self, density: &D) -> T {
        tail_weight(density, self.r_max())
    }
}

fn tail_weight<T: Real, D: DensityModel<T> + ?Sized>(density: &D, r: T) -> T {
    let d = density.eval(r);
    if !(d.rho > T::zero()) {
        return T::zero();
    }
    match kedf::tau_point(&d, r) {
        Ok(p) => T::lit(4.0) * T::PI() * r * r * (p.tau0 + p.tau2.abs() + p.tau4.abs()),
        Err(_) => T::zero(),
    }
}

/// Smallest scanned radius beyond which the tail weight stays below `tol` up to 1.5 r.
fn tail_radius<T: Real, D: DensityModel<T> + ?Sized>(density: &D, tol: T) -> T {
    let step = T::lit(1.02);
    let tiny = T::lit(1e-250);
    let mut radii = Vec::new();
    let mut r = T::lit(0.5);
    loop {
        let w = tail_weight(density, r);
        radii.push((r, w));
        if density.eval(r).rho < tiny || radii.len() > 5000 {
            break;
        }
        r = r * step;
    }
    let n = radii.len();
    for i in 0..n {
        let (ri, _) = radii[i];
        let limit = ri * T::lit(1.5);
        let mut ok = true;
        let mut reached = false;
        for &(rj, wj) in &radii[i..] {
            if rj > limit {
                reached = true;
                break;
            }
            if !(wj < tol) {
                ok = false;
                break;
            }
        }
        if ok && (reached || density.eval(radii[n - 1].0).rho < tiny) {
            return ri;
        }
    }
    radii[n - 1].0
}
