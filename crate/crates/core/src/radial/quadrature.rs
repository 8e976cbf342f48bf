//! Globally adaptive 21-point Gauss–Kronrod quadrature.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::RadialGrid;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_600_525_478,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

// 10-point Gauss weights for XGK[1], XGK[3], ..., XGK[9]
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

/// Nodes and weights of `n`-point Gauss–Legendre quadrature on `[-1, 1]`.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    let mut x = vec![T::zero(); n];
    let mut w = vec![T::zero(); n];
    let nf = T::from_count(n);
    for i in 0..n.div_ceil(2) {
        let mut z = (T::PI() * (T::from_count(i) + T::lit(0.75)) / (nf + T::lit(0.5))).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            let (mut p0, mut p1) = (T::one(), z);
            for k in 2..=n {
                let kf = T::from_count(k);
                let p2 = ((kf + kf - T::one()) * z * p1 - (kf - T::one()) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (z * p1 - p0) / (z * z - T::one());
            let dz = p1 / dp;
            z = z - dz;
            if dz.abs() <= T::epsilon() {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = T::lit(2.0) / ((T::one() - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Fixed-order Gauss–Legendre rule on `[a, b]`.
pub fn integrate_gauss<T, F>(mut f: F, a: T, b: T, n: usize) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let (x, w) = gauss_legendre::<T>(n);
    let (mid, half) = ((a + b) * T::lit(0.5), (b - a) * T::lit(0.5));
    let mut s = T::zero();
    for (xi, wi) in x.iter().zip(&w) {
        let r = mid + half * *xi;
        let v = f(r)?;
        if !v.is_finite() {
            return Err(Error::NonFinite { r: r.to_f64().unwrap_or(f64::NAN), value: v.to_f64().unwrap_or(f64::NAN) });
        }
        s = s + *wi * v;
    }
    Ok(s * half)
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureOptions<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    pub max_panels: usize,
    /// Cap on the number of grid panels used to seed the subdivision.
    pub seed_panels: usize,
}

impl<T: Real> Default for QuadratureOptions<T> {
    fn default() -> Self {
        Self { rel_tol: T::lit(1e-11), abs_tol: T::lit(1e-15), max_panels: 20_000, seed_panels: 64 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error: T,
    pub evaluations: usize,
}

struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gk21<T: Real, F>(f: &mut F, a: T, b: T) -> Result<(T, T)>
where
    F: FnMut(T) -> Result<T>,
{
    let half = (b - a) * T::lit(0.5);
    let center = (a + b) * T::lit(0.5);
    let mut kronrod = T::zero();
    let mut gauss = T::zero();
    let mut eval = |x: T| -> Result<T> {
        let y = f(x)?;
        if !y.is_finite() {
            return Err(Error::NonFinite { r: x.to_f64().unwrap_or(f64::NAN), value: y.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(y)
    };
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).enumerate() {
        if i == 10 {
            let y = eval(center)?;
            kronrod = kronrod + T::lit(w) * y;
            continue;
        }
        let dx = half * T::lit(x);
        let s = eval(center - dx)? + eval(center + dx)?;
        kronrod = kronrod + T::lit(w) * s;
        if i % 2 == 1 {
            gauss = gauss + T::lit(WG[i / 2]) * s;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Ok((value, error))
}

/// Integrates `f` over `[breakpoints[0], breakpoints[last]]`, seeding panels at the breakpoints.
///
/// Panels with the largest error estimate are bisected until the total error
/// falls below `max(abs_tol, rel_tol * |value|)`.
pub fn integrate_adaptive<T, F>(mut f: F, breakpoints: &[T], opts: &QuadratureOptions<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    if breakpoints.len() < 2 {
        return Err(Error::InvalidArgument("quadrature needs at least two breakpoints".into()));
    }
    let mut panels = Vec::with_capacity(breakpoints.len() * 4);
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            let (value, error) = gk21(&mut f, w[0], w[1])?;
            panels.push(Panel { a: w[0], b: w[1], value, error });
        }
    }
    let mut evaluations = 21 * panels.len();
    loop {
        let value = panels.iter().fold(T::zero(), |s, p| s + p.value);
        let error = panels.iter().fold(T::zero(), |s, p| s + p.error);
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= target {
            return Ok(Estimate { value, error, evaluations });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let Panel { a, b, .. } = panels[worst];
        let mid = (a + b) * T::lit(0.5);
        let width_floor = T::lit(64.0) * T::epsilon() * a.abs().max(b.abs()).max(T::min_positive_value());
        if panels.len() >= opts.max_panels || (b - a) <= width_floor {
            return Err(Error::NotConverged { estimate: value.to_f64().unwrap(), error: error.to_f64().unwrap() });
        }
        let (v1, e1) = gk21(&mut f, a, mid)?;
        let (v2, e2) = gk21(&mut f, mid, b)?;
        evaluations += 42;
        panels[worst] = Panel { a, b: mid, value: v1, error: e1 };
        panels.push(Panel { a: mid, b, value: v2, error: e2 });
    }
}

/// `4 pi ∫_0^{r_max} r^2 f(r) dr` over the grid's range.
pub fn integrate_radial<T, F>(f: F, grid: &RadialGrid<T>) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let mut f = f;
    integrate_radial_with(|r| Ok(f(r)), grid, &QuadratureOptions::default()).map(|e| e.value)
}

/// Fallible-integrand form of [`integrate_radial`] with explicit options.
pub fn integrate_radial_with<T, F>(mut f: F, grid: &RadialGrid<T>, opts: &QuadratureOptions<T>) -> Result<Estimate<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let four_pi = T::lit(4.0) * T::PI();
    let breaks = grid.breakpoints(T::zero(), grid.r_max(), opts.seed_panels);
    integrate_adaptive(|r| Ok(four_pi * r * r * f(r)?), &breaks, opts)
}
