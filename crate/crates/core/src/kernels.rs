//! Degenerate exponential and logarithm kernels and the lambda-falling
//! factorials they are built from.
//!
//! The kernels are only defined for nonzero `lambda`. The `lambda -> 0`
//! limit (classical `e^{xt}` and `log(1+t)`) is reachable solely through
//! [`Lambda::classical`]; no formula containing `1/lambda` is ever evaluated
//! at zero. The limit mode is a convention of this crate, not part of the
//! degenerate definitions themselves.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{self, factorial, Rational};
use crate::algebra::{EgfSeries, PolyX};
use crate::error::{Error, Result};

/// The deformation parameter: a nonzero rational, or the classical limit.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lambda(#[serde(with = "rational::serde_str")] Rational);

impl Lambda {
    /// Rejects zero; use [`Lambda::classical`] for the limit.
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::ZeroLambda);
        }
        Ok(Lambda(value))
    }

    pub fn classical() -> Self {
        Lambda(Rational::zero())
    }

    /// Maps zero to the classical limit instead of rejecting it.
    pub fn or_classical(value: Rational) -> Self {
        Lambda(value)
    }

    pub fn is_classical(&self) -> bool {
        self.0.is_zero()
    }

    /// Numeric value; zero in the classical limit.
    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `lambda / m`, staying in the classical limit when `lambda` is.
    pub fn div_int(&self, m: u32) -> Lambda {
        Lambda(&self.0 / Rational::from_integer(m.into()))
    }
}

impl fmt::Debug for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_classical() {
            f.write_str("Lambda(classical)")
        } else {
            write!(f, "Lambda({})", self.0)
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `(x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda)`; `(x)_{0,lambda} = 1`.
///
/// Any `lambda` is accepted; `lambda = 0` gives `x^n`.
pub fn lambda_falling(n: usize, lambda: &Rational) -> PolyX {
    (0..n).fold(PolyX::one(), |acc, j| {
        let node = lambda * Rational::from_integer((j as i64).into());
        &acc * &PolyX::linear(Rational::one(), -node)
    })
}

/// All of `(x)_{0,lambda}, ..., (x)_{n_max,lambda}`.
pub fn lambda_falling_upto(n_max: usize, lambda: &Rational) -> Vec<PolyX> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(PolyX::one());
    for j in 0..n_max {
        let node = lambda * Rational::from_integer((j as i64).into());
        let next = &out[j] * &PolyX::linear(Rational::one(), -node);
        out.push(next);
    }
    out
}

/// `(x)_n = x (x-1) ... (x-n+1)`.
pub fn classical_falling(n: usize) -> PolyX {
    lambda_falling(n, &Rational::one())
}

/// `(x)_{n,lambda}` evaluated at a rational point.
pub fn falling_value(x: &Rational, n: usize, lambda: &Rational) -> Rational {
    (0..n).fold(Rational::one(), |acc, j| acc * (x - lambda * Rational::from_integer((j as i64).into())))
}

/// `e_lambda^x(t)` at a rational exponent: `a[n] = (x)_{n,lambda}`.
/// The classical limit gives `e^{xt}`, `a[n] = x^n`.
pub fn degenerate_exp(x: &Rational, lambda: &Lambda, order_cap: usize) -> EgfSeries {
    EgfSeries::from_fn(order_cap, |n| falling_value(x, n, lambda.value()))
}

/// `e_lambda^x(t)` with `x` kept symbolic: `a[n] = (x)_{n,lambda}` as a polynomial.
pub fn degenerate_exp_symbolic(lambda: &Lambda, order_cap: usize) -> EgfSeries<PolyX> {
    EgfSeries::from_coeffs(lambda_falling_upto(order_cap, lambda.value()))
}

/// `e_lambda(t) - 1`.
pub fn degenerate_exp_minus_one(lambda: &Lambda, order_cap: usize) -> EgfSeries {
    degenerate_exp(&Rational::one(), lambda, order_cap).sub_constant(&Rational::one())
}

/// `log_lambda(1 + t)`, the compositional inverse of `e_lambda(t) - 1`:
/// `a[n] = lambda^{n-1} (1)_{n,1/lambda}` for `n >= 1`.
/// The classical limit is `log(1 + t)`, `a[n] = (-1)^{n-1} (n-1)!`.
pub fn lambda_log_series(lambda: &Lambda, order_cap: usize) -> EgfSeries {
    if lambda.is_classical() {
        return EgfSeries::from_fn(order_cap, |n| {
            if n == 0 {
                return Rational::zero();
            }
            let magnitude = Rational::from_integer(factorial(n - 1));
            if n % 2 == 1 {
                magnitude
            } else {
                -magnitude
            }
        });
    }
    let l = lambda.value();
    let inv = l.recip();
    EgfSeries::from_fn(order_cap, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            rational::pow(l, n - 1) * falling_value(&Rational::one(), n, &inv)
        }
    })
}

/// `(1/m) log_{lambda/m}(1 + m t)`.
pub fn scaled_lambda_log_series(m: u32, lambda: &Lambda, order_cap: usize) -> EgfSeries {
    let m_r = Rational::from_integer(m.into());
    lambda_log_series(&lambda.div_int(m), order_cap).scale_argument(&m_r).scale(&m_r.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn lam(p: i64, q: i64) -> Lambda {
        Lambda::new(rat(p, q)).unwrap()
    }

    #[test]
    fn zero_lambda_needs_classical_mode() {
        assert_eq!(Lambda::new(int(0)).unwrap_err(), Error::ZeroLambda);
        assert!(Lambda::classical().is_classical());
        assert!(Lambda::or_classical(int(0)).is_classical());
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(lambda_falling(0, &rat(3, 4)), PolyX::one());
        let l = rat(1, 3);
        assert_eq!(lambda_falling(2, &l), PolyX::from_coeffs(vec![int(0), -l.clone(), int(1)]));
        assert_eq!(lambda_falling(2, &rat(1, 2)).eval(&int(3)), rat(15, 2));
        assert_eq!(classical_falling(3), PolyX::from_ints(&[0, 2, -3, 1]));
        assert_eq!(lambda_falling_upto(5, &l)[4], lambda_falling(4, &l));
    }

    #[test]
    fn falling_factorial_shape() {
        let l = rat(-2, 5);
        for n in 0..10 {
            let p = lambda_falling(n, &l);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.leading_coeff(), Some(&int(1)));
            if n >= 1 {
                assert!(p.eval(&int(0)).is_zero());
            }
        }
    }

    #[test]
    fn degenerate_exp_examples() {
        assert_eq!(degenerate_exp(&int(0), &lam(1, 2), 5), EgfSeries::one(5));
        assert_eq!(degenerate_exp(&int(1), &lam(1, 2), 3).coeff(2), &rat(1, 2));
        let sym = degenerate_exp_symbolic(&lam(2, 3), 6);
        for n in 0..=6 {
            assert_eq!(sym.coeff(n), &lambda_falling(n, &rat(2, 3)));
        }
        let classical = degenerate_exp_symbolic(&Lambda::classical(), 6);
        for n in 0..=6 {
            assert_eq!(classical.coeff(n), &PolyX::monomial(n, int(1)));
        }
    }

    #[test]
    fn log_series_examples() {
        let l = lam(1, 3);
        let s = lambda_log_series(&l, 6);
        assert_eq!(s.coeff(1), &int(1));
        assert_eq!(s.coeff(2), &rat(-2, 3));
        assert_eq!(lambda_log_series(&lam(1, 1), 6), EgfSeries::t(6));
        let c = lambda_log_series(&Lambda::classical(), 5);
        assert_eq!(c.coeffs(), &[int(0), int(1), int(-1), int(2), int(-6), int(24)]);
    }

    #[test]
    fn closed_form_product() {
        // lambda^{n-1} (1)_{n,1/lambda} = prod_{j=1}^{n-1} (lambda - j)
        for l in [rat(1, 2), rat(-1, 3), rat(7, 5), int(2)] {
            let s = lambda_log_series(&Lambda::new(l.clone()).unwrap(), 16);
            for n in 1..=16 {
                let product = (1..n).fold(int(1), |acc, j| acc * (&l - int(j as i64)));
                assert_eq!(s.coeff(n), &product, "lambda={l} n={n}");
            }
        }
    }
}
