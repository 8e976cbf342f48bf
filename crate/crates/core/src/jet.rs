//! Truncated Taylor arithmetic through fourth order.
//!
//! A [`Jet`] holds the normalized Taylor coefficients `c[k] = f^(k)(x0) / k!`
//! of a function around a point. Arithmetic on jets propagates all derivatives
//! up to order four exactly (up to rounding), which is what the kinetic-energy
//! densities need from a radial density.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::{Erf, Real};

/// Number of stored coefficients (orders 0..=4).
pub const JET_LEN: usize = 5;

const FACTORIALS: [f64; JET_LEN] = [1.0, 1.0, 2.0, 6.0, 24.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<T> {
    pub c: [T; JET_LEN],
}

impl<T: Real> Jet<T> {
    pub fn constant(v: T) -> Self {
        let mut c = [T::zero(); JET_LEN];
        c[0] = v;
        Self { c }
    }

    /// The independent variable evaluated at `x`.
    pub fn variable(x: T) -> Self {
        let mut c = [T::zero(); JET_LEN];
        c[0] = x;
        c[1] = T::one();
        Self { c }
    }

    /// Builds a jet from plain derivatives `f, f', f'', f''', f''''`.
    pub fn from_derivatives(d: [T; JET_LEN]) -> Self {
        let mut c = d;
        for (k, ck) in c.iter_mut().enumerate() {
            *ck = *ck / T::lit(FACTORIALS[k]);
        }
        Self { c }
    }

    /// Plain derivatives `f, f', f'', f''', f''''`.
    pub fn derivatives(&self) -> [T; JET_LEN] {
        let mut d = self.c;
        for (k, dk) in d.iter_mut().enumerate() {
            *dk = *dk * T::lit(FACTORIALS[k]);
        }
        d
    }

    pub fn value(&self) -> T {
        self.c[0]
    }

    pub fn scale(self, s: T) -> Self {
        let mut c = self.c;
        c.iter_mut().for_each(|x| *x = *x * s);
        Self { c }
    }

    pub fn add_scalar(mut self, s: T) -> Self {
        self.c[0] = self.c[0] + s;
        self
    }

    pub fn recip(self) -> Self {
        Jet::constant(T::one()) / self
    }

    pub fn exp(self) -> Self {
        let a = &self.c;
        let mut e = [T::zero(); JET_LEN];
        e[0] = a[0].exp();
        for k in 1..JET_LEN {
            let mut s = T::zero();
            for j in 1..=k {
                s = s + T::from_count(j) * a[j] * e[k - j];
            }
            e[k] = s / T::from_count(k);
        }
        Self { c: e }
    }

    pub fn ln(self) -> Self {
        let a = &self.c;
        let mut l = [T::zero(); JET_LEN];
        l[0] = a[0].ln();
        for k in 1..JET_LEN {
            let mut s = T::zero();
            for j in 1..k {
                s = s + T::from_count(j) * l[j] * a[k - j];
            }
            l[k] = (a[k] - s / T::from_count(k)) / a[0];
        }
        Self { c: l }
    }

    /// `self^alpha` for a base with nonzero value.
    pub fn powf(self, alpha: T) -> Self {
        let a = &self.c;
        let mut p = [T::zero(); JET_LEN];
        p[0] = a[0].powf(alpha);
        for k in 1..JET_LEN {
            let mut s = T::zero();
            for j in 1..=k {
                let w = (alpha + T::one()) * T::from_count(j) - T::from_count(k);
                s = s + w * a[j] * p[k - j];
            }
            p[k] = s / (T::from_count(k) * a[0]);
        }
        Self { c: p }
    }

    pub fn powi(self, n: u32) -> Self {
        let mut acc = Jet::constant(T::one());
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }

    /// Composition `F(self)` given the value `F(a0)` and the jet of `F'(self)`.
    ///
    /// Uses `d/dx F(a(x)) = F'(a(x)) a'(x)`, so only orders 0..=3 of the
    /// derivative jet contribute.
    pub fn compose(self, value: T, derivative: Jet<T>) -> Self {
        let a = &self.c;
        let h = &derivative.c;
        let mut g = [T::zero(); JET_LEN];
        g[0] = value;
        for k in 1..JET_LEN {
            let mut s = T::zero();
            for j in 1..=k {
                s = s + T::from_count(j) * a[j] * h[k - j];
            }
            g[k] = s / T::from_count(k);
        }
        Self { c: g }
    }

    /// Evaluates a polynomial with scalar coefficients (lowest order first) at this jet.
    pub fn horner(self, coeffs: &[T]) -> Self {
        let mut acc = Jet::constant(T::zero());
        for &c in coeffs.iter().rev() {
            acc = (acc * self).add_scalar(c);
        }
        acc
    }
}

impl<T: Erf> Jet<T> {
    pub fn erf(self) -> Self {
        let two_over_sqrt_pi = T::lit(2.0) / T::PI().sqrt();
        let dfdx = (-(self * self)).exp().scale(two_over_sqrt_pi);
        self.compose(self.c[0].erf(), dfdx)
    }
}

impl<T: Real> Add for Jet<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c) {
            *a = *a + b;
        }
        Self { c }
    }
}

impl<T: Real> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c) {
            *a = *a - b;
        }
        Self { c }
    }
}

impl<T: Real> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Real> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut c = [T::zero(); JET_LEN];
        for i in 0..JET_LEN {
            for j in 0..JET_LEN - i {
                c[i + j] = c[i + j] + self.c[i] * rhs.c[j];
            }
        }
        Self { c }
    }
}

impl<T: Real> Div for Jet<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let b = &rhs.c;
        let mut q = [T::zero(); JET_LEN];
        for k in 0..JET_LEN {
            let mut s = self.c[k];
            for j in 1..=k {
                s = s - b[j] * q[k - j];
            }
            q[k] = s / b[0];
        }
        Self { c: q }
    }
}

impl<T: Real> Mul<T> for Jet<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        self.scale(rhs)
    }
}

impl<T: Real> Add<T> for Jet<T> {
    type Output = Self;
    fn add(self, rhs: T) -> Self {
        self.add_scalar(rhs)
    }
}
