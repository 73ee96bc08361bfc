use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, Rational};

/// Dense univariate polynomial in `x` over the rationals.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient list and equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PolyX {
    #[serde(with = "rational::serde_str::vec")]
    coeffs: Vec<Rational>,
}

impl PolyX {
    pub fn zero() -> Self {
        PolyX { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(degree: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyX { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyX { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `p(c*x)`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Self::from_coeffs(out)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, inner: &PolyX) -> Self {
        self.coeffs.iter().rev().fold(PolyX::zero(), |acc, c| &(&acc * inner) + &PolyX::constant(c.clone()))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(PolyX::one(), |acc, _| &acc * self)
    }

    /// Divides by the monic linear factor `x - root`, returning `(quotient, remainder)`.
    pub fn div_linear(&self, root: &Rational) -> (PolyX, Rational) {
        let Some(d) = self.degree() else {
            return (PolyX::zero(), Rational::zero());
        };
        if d == 0 {
            return (PolyX::zero(), self.coeffs[0].clone());
        }
        let mut quotient = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (PolyX::from_coeffs(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Plain-text rendering, highest degree first: `x^2 - 1/2*x + 3`.
    pub fn to_text(&self) -> String {
        self.render(
            |c, i| match (c, i) {
                (c, 0) => c.to_string(),
                (c, _) if c.is_one() => String::new(),
                (c, _) => format!("{c}*"),
            },
            |i| match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            },
        )
    }

    /// TeX rendering: `x^{2} - \frac{1}{2}x + 3`.
    pub fn to_tex(&self) -> String {
        self.render(
            |c, i| {
                let body = if c.denom().is_one() {
                    c.numer().to_string()
                } else {
                    format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
                };
                if i > 0 && c.is_one() {
                    String::new()
                } else {
                    body
                }
            },
            |i| match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{{{i}}}"),
            },
        )
    }

    fn render(&self, coeff: impl Fn(&Rational, usize) -> String, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&coeff(&magnitude, i));
            out.push_str(&power(i));
        }
        out
    }
}

impl fmt::Debug for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyX({})", self.to_text())
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<Rational> for PolyX {
    fn from(c: Rational) -> Self {
        PolyX::constant(c)
    }
}

impl Add for &PolyX {
    type Output = PolyX;

    fn add(self, rhs: &PolyX) -> PolyX {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Sub for &PolyX {
    type Output = PolyX;

    fn sub(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        PolyX::from_coeffs(coeffs)
    }
}

impl Mul for &PolyX {
    type Output = PolyX;

    fn mul(self, rhs: &PolyX) -> PolyX {
        if self.is_zero() || rhs.is_zero() {
            return PolyX::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Neg for &PolyX {
    type Output = PolyX;

    fn neg(self) -> PolyX {
        PolyX { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for PolyX {
            type Output = PolyX;
            fn $m(self, rhs: PolyX) -> PolyX {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for PolyX {
    fn sum<I: Iterator<Item = PolyX>>(iter: I) -> PolyX {
        iter.fold(PolyX::zero(), |acc, p| &acc + &p)
    }
}
