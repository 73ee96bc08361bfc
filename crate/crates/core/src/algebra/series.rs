//! Truncated exponential generating functions.
//!
//! An [`EgfSeries`] stores `a[n]`, the coefficient of `t^n/n!`, for
//! `0 <= n <= N`. Products are binomial convolutions. Every binary operation
//! requires both operands to share the same truncation order `N`.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::poly::PolyX;
use super::rational::{binomial_row, factorial, Rational};
use crate::error::{Error, Result};

/// Coefficient ring of a series: the rationals or polynomials in `x`.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Coeff for PolyX {
    fn zero_value() -> Self {
        PolyX::zero()
    }
    fn one_value() -> Self {
        PolyX::one()
    }
    fn is_zero_value(&self) -> bool {
        PolyX::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        PolyX::constant(r)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, r: &Rational) -> Self {
        PolyX::scale(self, r)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct EgfSeries<R: Coeff = Rational> {
    a: Vec<R>,
}

impl<R: Coeff> EgfSeries<R> {
    /// Builds a series truncated at `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        EgfSeries { a: coeffs }
    }

    pub fn from_fn(order_cap: usize, f: impl FnMut(usize) -> R) -> Self {
        EgfSeries { a: (0..=order_cap).map(f).collect() }
    }

    pub fn zero(order_cap: usize) -> Self {
        Self::from_fn(order_cap, |_| R::zero_value())
    }

    pub fn constant(c: R, order_cap: usize) -> Self {
        let mut s = Self::zero(order_cap);
        s.a[0] = c;
        s
    }

    pub fn one(order_cap: usize) -> Self {
        Self::constant(R::one_value(), order_cap)
    }

    /// The series `t`, i.e. `a = [0, 1, 0, ...]`.
    pub fn t(order_cap: usize) -> Self {
        let mut s = Self::zero(order_cap);
        if order_cap >= 1 {
            s.a[1] = R::one_value();
        }
        s
    }

    pub fn order_cap(&self) -> usize {
        self.a.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.a
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.a
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.a[n]
    }

    /// Smallest `n` with `a[n] != 0`, or `None` if every stored coefficient vanishes.
    pub fn order(&self) -> Option<usize> {
        self.a.iter().position(|c| !c.is_zero_value())
    }

    fn check_cap(&self, other: &EgfSeries<impl Coeff>) -> Result<()> {
        if self.order_cap() != other.order_cap() {
            return Err(Error::DimensionMismatch { left: self.order_cap(), right: other.order_cap() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(EgfSeries { a: self.a.iter().zip(&other.a).map(|(x, y)| x.plus(y)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(EgfSeries { a: self.a.iter().zip(&other.a).map(|(x, y)| x.minus(y)).collect() })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        EgfSeries { a: self.a.iter().map(|c| c.scaled(r)).collect() }
    }

    /// `self - c` for a scalar `c`, touching only the constant term.
    pub fn sub_constant(&self, c: &Rational) -> Self {
        let mut s = self.clone();
        s.a[0] = s.a[0].minus(&R::from_rational(c.clone()));
        s
    }

    /// Product of two series: `c[n] = sum_j C(n,j) f[j] g[n-j]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(self.convolve(other, |x, y| x.times(y)))
    }

    /// Product with a rational-coefficient series.
    pub fn mul_rational(&self, other: &EgfSeries<Rational>) -> Result<Self> {
        self.check_cap(other)?;
        Ok(self.convolve(other, |x, y| x.scaled(y)))
    }

    fn convolve<S: Coeff>(&self, other: &EgfSeries<S>, times: impl Fn(&R, &S) -> R) -> Self {
        let cap = self.order_cap();
        let lo_self = self.order().unwrap_or(cap + 1);
        let lo_other = other.order().unwrap_or(cap + 1);
        let mut out = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            let mut acc = R::zero_value();
            if n >= lo_self + lo_other {
                let row = binomial_row(n);
                for j in lo_self..=n - lo_other {
                    let (x, y) = (&self.a[j], &other.a[n - j]);
                    if x.is_zero_value() || y.is_zero_value() {
                        continue;
                    }
                    acc = acc.plus(&times(x, y).scaled(&row[j]));
                }
            }
            out.push(acc);
        }
        EgfSeries { a: out }
    }

    /// `self^k` by repeated squaring; `self^0 = 1`.
    pub fn pow(&self, mut k: usize) -> Self {
        let mut result = Self::one(self.order_cap());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same cap");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same cap");
            }
        }
        result
    }

    /// `self(inner(t))`, truncated at the shared order, by Horner's scheme on
    /// `sum_k a[k]/k! * inner^k`.
    pub fn compose(&self, inner: &EgfSeries<Rational>) -> Result<Self> {
        self.check_cap(inner)?;
        if !inner.a[0].is_zero() {
            return Err(Error::CompositionOrder { order: inner.order() });
        }
        let cap = self.order_cap();
        let mut acc = Self::zero(cap);
        for k in (0..=cap).rev() {
            acc = acc.mul_rational(inner)?;
            let c = self.a[k].scaled(&Rational::from_integer(factorial(k)).recip());
            acc.a[0] = acc.a[0].plus(&c);
        }
        Ok(acc)
    }

    /// `self(c*t)`: `a[n] -> c^n a[n]`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.a.len());
        for x in &self.a {
            out.push(x.scaled(&power));
            power *= c;
        }
        EgfSeries { a: out }
    }

    /// `self / t` for a series with `a[0] = 0`. The result is truncated one
    /// order lower, so build the numerator at `N + 1` to get a result at `N`.
    pub fn div_t(&self) -> Result<Self> {
        if !self.a[0].is_zero_value() {
            return Err(Error::InvalidArgument("div_t needs a zero constant term".into()));
        }
        if self.order_cap() == 0 {
            return Err(Error::InvalidArgument("div_t needs order cap >= 1".into()));
        }
        // t^{n+1}/(n+1)! = t * t^n/n! / (n+1)
        Ok(EgfSeries {
            a: (1..self.a.len())
                .map(|n| self.a[n].scaled(&Rational::from_integer((n as i64).into()).recip()))
                .collect(),
        })
    }

    /// Drops coefficients above `order_cap`.
    pub fn truncate(&self, order_cap: usize) -> Self {
        assert!(order_cap <= self.order_cap());
        EgfSeries { a: self.a[..=order_cap].to_vec() }
    }
}

impl EgfSeries<Rational> {
    /// Lifts into a polynomial-coefficient series with constant coefficients.
    pub fn to_poly(&self) -> EgfSeries<PolyX> {
        EgfSeries { a: self.a.iter().cloned().map(PolyX::constant).collect() }
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.a[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut b = vec![inv0.clone()];
        for n in 1..=self.order_cap() {
            let row = binomial_row(n);
            let mut acc = Rational::zero();
            for j in 1..=n {
                if !self.a[j].is_zero() {
                    acc += &row[j] * &self.a[j] * &b[n - j];
                }
            }
            b.push(-acc * &inv0);
        }
        Ok(EgfSeries { a: b })
    }

    pub fn div(&self, denominator: &Self) -> Result<Self> {
        self.mul(&denominator.recip()?)
    }

    /// Compositional inverse of a series of order exactly 1, by Lagrange
    /// inversion: `[u^n] h = (1/n) [u^{n-1}] (u/f(u))^n`.
    pub fn comp_inverse(&self) -> Result<Self> {
        let order = self.order();
        if order != Some(1) {
            return Err(Error::NotInvertible { order });
        }
        let cap = self.order_cap();
        // Ordinary coefficients of f(u)/u, truncated at u^{cap-1}.
        let ordinary: Vec<Rational> = (1..=cap).map(|n| &self.a[n] / Rational::from_integer(factorial(n))).collect();
        let ratio = ordinary_recip(&ordinary);
        let mut h = vec![Rational::zero(); cap + 1];
        let mut power = vec![Rational::one()];
        power.resize(cap, Rational::zero());
        for n in 1..=cap {
            power = ordinary_mul(&power, &ratio);
            let coeff = &power[n - 1] / Rational::from_integer((n as i64).into());
            h[n] = coeff * Rational::from_integer(factorial(n));
        }
        Ok(EgfSeries { a: h })
    }
}

fn ordinary_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().min(b.len());
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn ordinary_recip(a: &[Rational]) -> Vec<Rational> {
    let inv0 = a[0].recip();
    let mut b: Vec<Rational> = vec![inv0.clone()];
    for n in 1..a.len() {
        let mut acc = Rational::zero();
        for j in 1..=n {
            acc += &a[j] * &b[n - j];
        }
        b.push(-acc * &inv0);
    }
    b
}

/// `(1 + c t)^alpha` with `a[n] = alpha (alpha-1) ... (alpha-n+1) c^n`.
pub fn binomial_series(alpha: &Rational, c: &Rational, order_cap: usize) -> EgfSeries {
    let mut falling = Rational::one();
    let mut power = Rational::one();
    EgfSeries::from_fn(order_cap, |n| {
        if n > 0 {
            falling *= alpha - Rational::from_integer(((n - 1) as i64).into());
            power *= c;
        }
        &falling * &power
    })
}

/// `e^{c t}`: `a[n] = c^n`.
pub fn exp_series(c: &Rational, order_cap: usize) -> EgfSeries {
    let mut power = Rational::one();
    EgfSeries::from_fn(order_cap, |n| {
        if n > 0 {
            power *= c;
        }
        power.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn ints(v: &[i64]) -> EgfSeries {
        EgfSeries::from_coeffs(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn exp_squared_is_powers_of_two() {
        let e = exp_series(&int(1), 10);
        let sq = e.mul(&e).unwrap();
        for n in 0..=10 {
            assert_eq!(sq.coeff(n), &int(1 << n));
        }
    }

    #[test]
    fn t_times_t() {
        let t = EgfSeries::<Rational>::t(5);
        let sq = t.mul(&t).unwrap();
        assert_eq!(sq, ints(&[0, 0, 2, 0, 0, 0]));
        assert_eq!(t.pow(3), ints(&[0, 0, 0, 6, 0, 0]));
        assert_eq!(ints(&[3, 1, 4]).pow(0), ints(&[1, 0, 0]));
    }

    #[test]
    fn mismatched_caps() {
        let err = EgfSeries::<Rational>::t(3).mul(&EgfSeries::t(4)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 3, right: 4 });
    }

    #[test]
    fn compose_requires_positive_order() {
        let f = exp_series(&int(1), 4);
        let err = f.compose(&exp_series(&int(1), 4)).unwrap_err();
        assert!(matches!(err, Error::CompositionOrder { .. }));
    }

    #[test]
    fn exp_minus_one_after_log_is_identity() {
        // log(1+t): a[n] = (-1)^{n-1} (n-1)!
        let n = 12;
        let log = EgfSeries::from_fn(n, |k| {
            if k == 0 {
                int(0)
            } else {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                Rational::from_integer(factorial(k - 1)) * int(sign)
            }
        });
        let expm1 = exp_series(&int(1), n).sub_constant(&int(1));
        assert_eq!(expm1.compose(&log).unwrap(), EgfSeries::t(n));
        assert_eq!(log.compose(&expm1).unwrap(), EgfSeries::t(n));
    }

    #[test]
    fn mobius_inverse() {
        // t/(1-t) has a[n] = n!; its inverse t/(1+t) has a[n] = (-1)^{n-1} n!.
        let n = 9;
        let f = EgfSeries::from_fn(n, |k| if k == 0 { int(0) } else { Rational::from_integer(factorial(k)) });
        let inv = f.comp_inverse().unwrap();
        for k in 1..=n {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(inv.coeff(k), &(Rational::from_integer(factorial(k)) * int(sign)));
        }
        assert_eq!(EgfSeries::<Rational>::t(6).comp_inverse().unwrap(), EgfSeries::t(6));
    }

    #[test]
    fn inverse_rejects_wrong_order() {
        let err = ints(&[0, 0, 1]).comp_inverse().unwrap_err();
        assert_eq!(err, Error::NotInvertible { order: Some(2) });
    }

    #[test]
    fn binomial_series_examples() {
        assert_eq!(binomial_series(&int(1), &int(1), 4), ints(&[1, 1, 0, 0, 0]));
        let geo = binomial_series(&int(-1), &int(1), 5);
        for n in 0..=5 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(geo.coeff(n), &(Rational::from_integer(factorial(n)) * int(sign)));
        }
        let s = binomial_series(&rat(-1, 2), &int(2), 3);
        assert_eq!(s.coeff(1), &int(-1));
        assert_eq!(s.coeff(2), &int(3));
    }

    #[test]
    fn recip_of_geometric() {
        let one_plus_t = binomial_series(&int(1), &int(1), 6);
        let inv = one_plus_t.recip().unwrap();
        assert_eq!(inv, binomial_series(&int(-1), &int(1), 6));
        assert_eq!(EgfSeries::<Rational>::t(3).recip().unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn div_t_shifts() {
        // e^t - 1 over t: a[n] = 1/(n+1)
        let s = exp_series(&int(1), 4).sub_constant(&int(1)).div_t().unwrap();
        assert_eq!(s.order_cap(), 3);
        assert_eq!(s.coeff(2), &rat(1, 3));
    }
}
