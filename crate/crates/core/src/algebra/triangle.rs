use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Lower-triangular array `T(n, k)` for `0 <= k <= n <= n_max`.
///
/// Row `n` stores exactly `n + 1` entries; `T(n, k)` for `k > n` reads as zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
}

impl Triangle {
    pub fn from_fn(n_max: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Triangle { rows: (0..=n_max).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect() }
    }

    /// Builds from explicit rows; returns `None` unless row `n` has `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        if rows.is_empty() || rows.iter().enumerate().any(|(n, r)| r.len() != n + 1) {
            return None;
        }
        Some(Triangle { rows })
    }

    pub fn identity(n_max: usize) -> Self {
        Self::from_fn(n_max, |n, k| if n == k { Rational::one() } else { Rational::zero() })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            return Rational::zero();
        }
        self.rows[n][k].clone()
    }

    pub fn entry(&self, n: usize, k: usize) -> &Rational {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Overwrites one stored entry. Panics when `k > n`.
    pub fn set(&mut self, n: usize, k: usize, value: Rational) {
        self.rows[n][k] = value;
    }

    /// Matrix product restricted to the common size.
    pub fn matmul(&self, other: &Triangle) -> Triangle {
        let n_max = self.n_max().min(other.n_max());
        Triangle::from_fn(n_max, |n, k| {
            (k..=n).fold(Rational::zero(), |acc, j| acc + &self.rows[n][j] * &other.rows[j][k])
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Triangle::identity(self.n_max())
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Triangle [")?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
