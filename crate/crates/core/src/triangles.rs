//! Stirling and Whitney number triangles, classical and degenerate.
//!
//! Degenerate triangles are read off their generating functions. Classical
//! and r-Whitney triangles come from triangular change-of-basis solves. The
//! two constructions meet in the `lambda -> 0` limit, which the tests check.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::rational::{factorial, pow, Rational};
use crate::algebra::{expand_in_graded_basis, to_lambda_falling_basis, EgfSeries, PolyX, Triangle};
use crate::error::{Error, Result};
use crate::kernels::{classical_falling, degenerate_exp, degenerate_exp_minus_one, lambda_log_series, Lambda};

/// `S1(n, k)`: coefficients of `(x)_n` in powers of `x`.
pub fn stirling1(n_max: usize) -> Triangle {
    let rows: Vec<PolyX> = (0..=n_max).map(classical_falling).collect();
    Triangle::from_fn(n_max, |n, k| rows[n].coeff(k))
}

/// `S2(n, k)`: coefficients of `x^n` in the `(x)_k` basis.
pub fn stirling2(n_max: usize) -> Triangle {
    let one = Rational::one();
    let rows: Vec<Vec<Rational>> =
        (0..=n_max).map(|n| to_lambda_falling_basis(&PolyX::monomial(n, one.clone()), &one)).collect();
    Triangle::from_fn(n_max, |n, k| rows[n][k].clone())
}

/// Column `k` of the triangle is `a[n]` of `base^k / k!`, optionally times a prefactor.
fn triangle_from_powers(n_max: usize, base: &EgfSeries, prefactor: Option<&EgfSeries>) -> Triangle {
    let mut columns = Vec::with_capacity(n_max + 1);
    let mut power = prefactor.cloned().unwrap_or_else(|| EgfSeries::one(n_max));
    for k in 0..=n_max {
        if k > 0 {
            power = power.mul(base).expect("shared cap");
        }
        let inv = Rational::from_integer(factorial(k)).recip();
        columns.push(power.scale(&inv));
    }
    Triangle::from_fn(n_max, |n, k| columns[k].coeff(n).clone())
}

/// `S_{1,lambda}(n, k)`: `a[n]` of `(log_lambda(1+t))^k / k!`.
pub fn degenerate_stirling1(n_max: usize, lambda: &Lambda) -> Triangle {
    triangle_from_powers(n_max, &lambda_log_series(lambda, n_max), None)
}

/// `S_{2,lambda}(n, k)`: `a[n]` of `(e_lambda(t) - 1)^k / k!`.
pub fn degenerate_stirling2(n_max: usize, lambda: &Lambda) -> Triangle {
    triangle_from_powers(n_max, &degenerate_exp_minus_one(lambda, n_max), None)
}

/// `W_{m,lambda}(n, k)`: `a[n]` of `e_lambda(t) ((e_lambda^m(t) - 1)/m)^k / k!`.
pub fn degenerate_whitney2(n_max: usize, m: u32, lambda: &Lambda) -> Triangle {
    let m_r = Rational::from_integer(m.into());
    let base = degenerate_exp(&m_r, lambda, n_max).sub_constant(&Rational::one()).scale(&m_r.recip());
    let prefactor = degenerate_exp(&Rational::one(), lambda, n_max);
    triangle_from_powers(n_max, &base, Some(&prefactor))
}

/// `W^{(r)}_m(n, k)` from `(m x + r)^n = sum_k W(n,k) m^k (x)_k`.
pub fn r_whitney2(n_max: usize, m: u32, r: u32) -> Triangle {
    let m_r = Rational::from_integer(m.into());
    let basis: Vec<PolyX> = (0..=n_max).map(|k| classical_falling(k).scale(&pow(&m_r, k))).collect();
    let shifted = PolyX::linear(m_r.clone(), Rational::from_integer(r.into()));
    let rows: Vec<Vec<Rational>> =
        (0..=n_max).map(|n| expand_in_graded_basis(&shifted.pow(n), &basis).expect("graded basis")).collect();
    Triangle::from_fn(n_max, |n, k| rows[n][k].clone())
}

/// `V^{(r)}_m(n, k)` from `m^n (x)_n = sum_k V(n,k) (m x + r)^k`.
pub fn r_whitney1(n_max: usize, m: u32, r: u32) -> Triangle {
    let m_r = Rational::from_integer(m.into());
    let shifted = PolyX::linear(m_r.clone(), Rational::from_integer(r.into()));
    let basis: Vec<PolyX> = (0..=n_max).map(|k| shifted.pow(k)).collect();
    let rows: Vec<Vec<Rational>> = (0..=n_max)
        .map(|n| {
            let target = classical_falling(n).scale(&pow(&m_r, n));
            expand_in_graded_basis(&target, &basis).expect("graded basis")
        })
        .collect();
    Triangle::from_fn(n_max, |n, k| rows[n][k].clone())
}

/// Classical Whitney numbers of the second kind, the `r = 1` case.
pub fn whitney2(n_max: usize, m: u32) -> Triangle {
    r_whitney2(n_max, m, 1)
}

/// Classical Whitney numbers of the first kind, the `r = 1` case.
pub fn whitney1(n_max: usize, m: u32) -> Triangle {
    r_whitney1(n_max, m, 1)
}

/// `sum_j A(n,j) B(j,k) == delta(n,k)` in both orders.
pub fn is_inverse_pair(a: &Triangle, b: &Triangle) -> bool {
    a.matmul(b).is_identity() && b.matmul(a).is_identity()
}

/// Every diagonal entry equals one.
pub fn has_unit_diagonal(t: &Triangle) -> bool {
    (0..=t.n_max()).all(|n| t.entry(n, n).is_one())
}

/// The triangles that can be built by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    Stirling1,
    Stirling2,
    DegStirling1,
    DegStirling2,
    DegWhitney2,
    RWhitney1,
    RWhitney2,
}

impl TableKind {
    pub const ALL: [TableKind; 7] = [
        TableKind::Stirling1,
        TableKind::Stirling2,
        TableKind::DegStirling1,
        TableKind::DegStirling2,
        TableKind::DegWhitney2,
        TableKind::RWhitney1,
        TableKind::RWhitney2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Stirling1 => "s1",
            TableKind::Stirling2 => "s2",
            TableKind::DegStirling1 => "s1deg",
            TableKind::DegStirling2 => "s2deg",
            TableKind::DegWhitney2 => "whitney-deg",
            TableKind::RWhitney1 => "whitney-r1",
            TableKind::RWhitney2 => "whitney-r2",
        }
    }

    pub fn uses_lambda(self) -> bool {
        matches!(self, TableKind::DegStirling1 | TableKind::DegStirling2 | TableKind::DegWhitney2)
    }

    pub fn uses_m(self) -> bool {
        matches!(self, TableKind::DegWhitney2 | TableKind::RWhitney1 | TableKind::RWhitney2)
    }

    pub fn uses_r(self) -> bool {
        matches!(self, TableKind::RWhitney1 | TableKind::RWhitney2)
    }

    /// Builds rows `0..=n_max`. Parameters the kind does not use are ignored.
    pub fn build(self, n_max: usize, lambda: &Lambda, m: u32, r: u32) -> Result<Triangle> {
        if self.uses_m() && m == 0 {
            return Err(Error::InvalidArgument("m must be a positive integer".into()));
        }
        Ok(match self {
            TableKind::Stirling1 => stirling1(n_max),
            TableKind::Stirling2 => stirling2(n_max),
            TableKind::DegStirling1 => degenerate_stirling1(n_max, lambda),
            TableKind::DegStirling2 => degenerate_stirling2(n_max, lambda),
            TableKind::DegWhitney2 => degenerate_whitney2(n_max, m, lambda),
            TableKind::RWhitney1 => r_whitney1(n_max, m, r),
            TableKind::RWhitney2 => r_whitney2(n_max, m, r),
        })
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown triangle kind `{s}`")))
    }
}
