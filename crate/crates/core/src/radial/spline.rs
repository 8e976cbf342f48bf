//! Quintic interpolating B-spline with not-a-knot end conditions.

use crate::error::{Error, Result};
use crate::scalar::Real;

const DEGREE: usize = 5;

/// Degree-5 spline through `(x_i, y_i)`, evaluated with derivatives through fourth order.
///
/// Interior knots are the data sites minus the two nearest each end, so the
/// spline reproduces polynomials up to degree five exactly.
#[derive(Clone, Debug)]
pub struct QuinticSpline<T> {
    /// `derivs[m]` holds knots and coefficients of the m-th derivative (degree 5 - m).
    derivs: Vec<(Vec<T>, Vec<T>)>,
    x_min: T,
    x_max: T,
}

impl<T: Real> QuinticSpline<T> {
    pub const MIN_POINTS: usize = DEGREE + 2;

    pub fn interpolate(x: &[T], y: &[T]) -> Result<Self> {
        let n = x.len();
        if n != y.len() {
            return Err(Error::InvalidArgument("x and y lengths differ".into()));
        }
        if n < Self::MIN_POINTS {
            return Err(Error::InsufficientSamples { got: n, need: Self::MIN_POINTS });
        }
        if x.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Table("abscissae must be strictly increasing".into()));
        }

        let k = DEGREE;
        let mut knots = Vec::with_capacity(n + k + 1);
        knots.extend(std::iter::repeat_n(x[0], k + 1));
        knots.extend_from_slice(&x[3..n - 3]);
        knots.extend(std::iter::repeat_n(x[n - 1], k + 1));
        debug_assert_eq!(knots.len(), n + k + 1);

        // banded collocation system; totally positive, so no pivoting is needed
        const BW: usize = DEGREE;
        let width = 2 * BW + 1;
        let mut band = vec![T::zero(); n * width];
        let at = |i: usize, j: usize| i * width + (j + BW - i);
        for (i, &xi) in x.iter().enumerate() {
            let mu = find_span(&knots, n, xi);
            let basis = basis_functions(&knots, mu, xi);
            for (q, &b) in basis.iter().enumerate() {
                let j = mu - k + q;
                if j + BW < i || j > i + BW {
                    debug_assert!(b == T::zero());
                    continue;
                }
                band[at(i, j)] = b;
            }
        }
        let mut rhs = y.to_vec();
        for col in 0..n {
            let pivot = band[at(col, col)];
            if pivot == T::zero() {
                return Err(Error::Table("singular spline collocation matrix".into()));
            }
            for row in col + 1..(col + BW + 1).min(n) {
                let factor = band[at(row, col)] / pivot;
                if factor == T::zero() {
                    continue;
                }
                for j in col..(col + BW + 1).min(n) {
                    let v = band[at(col, j)];
                    band[at(row, j)] = band[at(row, j)] - factor * v;
                }
                rhs[row] = rhs[row] - factor * rhs[col];
            }
        }
        let mut coeffs = vec![T::zero(); n];
        for row in (0..n).rev() {
            let mut s = rhs[row];
            for j in row + 1..(row + BW + 1).min(n) {
                s = s - band[at(row, j)] * coeffs[j];
            }
            coeffs[row] = s / band[at(row, row)];
        }

        let mut derivs = vec![(knots, coeffs)];
        for m in 1..=4 {
            let (t, c) = &derivs[m - 1];
            let deg = k - (m - 1);
            let dc: Vec<T> = (0..c.len() - 1)
                .map(|j| T::from_count(deg) * (c[j + 1] - c[j]) / (t[j + deg + 1] - t[j + 1]))
                .collect();
            let dt = t[1..t.len() - 1].to_vec();
            derivs.push((dt, dc));
        }
        Ok(Self { derivs, x_min: x[0], x_max: x[n - 1] })
    }

    pub fn domain(&self) -> (T, T) {
        (self.x_min, self.x_max)
    }

    /// Value and derivatives 1..=4 at `x` (extrapolates the end polynomials outside the domain).
    pub fn eval(&self, x: T) -> [T; 5] {
        let mut out = [T::zero(); 5];
        for (m, (t, c)) in self.derivs.iter().enumerate() {
            out[m] = de_boor(t, c, DEGREE - m, x);
        }
        out
    }
}

/// Index `mu` with `t[mu] <= x < t[mu + 1]`, clamped to the valid span range.
fn find_span<T: Real>(t: &[T], n_coeffs: usize, x: T) -> usize {
    let k = t.len() - n_coeffs - 1;
    let (mut lo, mut hi) = (k, n_coeffs - 1);
    if x >= t[hi] {
        return hi;
    }
    if x <= t[lo] {
        return lo;
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if x < t[mid] {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

/// Nonzero B-spline basis values `B_{mu-k..=mu}(x)` (Cox–de Boor).
fn basis_functions<T: Real>(t: &[T], mu: usize, x: T) -> [T; DEGREE + 1] {
    let mut b = [T::zero(); DEGREE + 1];
    let mut left = [T::zero(); DEGREE + 1];
    let mut right = [T::zero(); DEGREE + 1];
    b[0] = T::one();
    for j in 1..=DEGREE {
        left[j] = x - t[mu + 1 - j];
        right[j] = t[mu + j] - x;
        let mut saved = T::zero();
        for r in 0..j {
            let tmp = b[r] / (right[r + 1] + left[j - r]);
            b[r] = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        b[j] = saved;
    }
    b
}

fn de_boor<T: Real>(t: &[T], c: &[T], k: usize, x: T) -> T {
    let mu = find_span(t, c.len(), x);
    let mut d: Vec<T> = (0..=k).map(|j| c[j + mu - k]).collect();
    for r in 1..=k {
        for j in (r..=k).rev() {
            let lo = t[j + mu - k];
            let hi = t[j + 1 + mu - r];
            let alpha = (x - lo) / (hi - lo);
            d[j] = (T::one() - alpha) * d[j - 1] + alpha * d[j];
        }
    }
    d[k]
}
