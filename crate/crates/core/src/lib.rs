//! Exact computation of degenerate Stirling and Whitney numbers, fully
//! degenerate Bell and Dowling polynomials, and the lambda-umbral calculus
//! that relates them.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod families;
pub mod kernels;
pub mod partitions;
pub mod triangles;
pub mod umbral;
pub mod verify;

pub use algebra::{EgfSeries, PolyX, Rational, Triangle};
pub use error::{Error, Result};
pub use kernels::Lambda;
