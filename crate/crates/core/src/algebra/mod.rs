//! Exact scalars, polynomials, truncated EGF series and number triangles.

pub mod basis;
pub mod poly;
pub mod rational;
pub mod series;
pub mod triangle;

pub use basis::{expand_in_graded_basis, from_lambda_falling_basis, to_lambda_falling_basis};
pub use poly::PolyX;
pub use rational::{binomial, factorial, int, parse_rational, rat, Rational};
pub use series::{binomial_series, exp_series, Coeff, EgfSeries};
pub use triangle::Triangle;
