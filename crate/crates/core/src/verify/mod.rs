//! A catalog of identities, each checked exactly over a grid of
//! `(n, lambda, m, k, r)` points.
//!
//! Both sides of every identity are polynomials in `lambda` of degree at most
//! [`lambda_degree_bound`]. A report is certified as a polynomial identity in
//! `lambda` when more distinct `lambda` samples pass than that bound.

mod catalog;
mod checks;

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::algebra::rational::{self, rat, Rational};
use crate::algebra::PolyX;
use crate::error::{Error, Result};
use crate::kernels::Lambda;
use crate::triangles::TableKind;

pub use catalog::IdentityId;

/// Relative tolerance for the floating-point Dobinski check.
pub const DOBINSKI_TOLERANCE: f64 = 1e-8;

/// Default `lambda` values for the Dobinski check, all well inside `(0, 1/2)`.
pub fn default_dobinski_lambdas() -> Vec<Rational> {
    vec![rat(1, 10), rat(1, 7), rat(1, 3), rat(2, 5)]
}

/// `count` distinct non-integer rationals: a fixed head, then `p/q` of
/// increasing height `p + q`, both signs.
pub fn default_lambda_samples(count: usize) -> Vec<Rational> {
    let head = [rat(1, 2), rat(-1, 3), rat(2, 5), rat(3, 4), rat(1, 7), rat(-1, 7), rat(1, 3), rat(5, 3)];
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    let mut seen = BTreeSet::new();
    let mut push = |r: Rational, out: &mut Vec<Rational>| {
        if out.len() < count && seen.insert(r.clone()) {
            out.push(r);
        }
    };
    for r in head {
        push(r, &mut out);
    }
    let mut height = 3i64;
    while out.len() < count {
        for q in 2..height {
            let p = height - q;
            if p.gcd(&q) == 1 {
                push(rat(p, q), &mut out);
                push(rat(-p, q), &mut out);
            }
        }
        height += 1;
    }
    out
}

/// Perturbs one entry of every triangle of the given kind the verifier builds.
#[derive(Clone, Debug, PartialEq)]
pub struct FaultInjection {
    pub table: TableKind,
    pub n: usize,
    pub k: usize,
    pub delta: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    /// `None` selects [`default_lambda_samples`] sized to certify.
    pub lambda_samples: Option<Vec<Rational>>,
    pub m_values: Vec<u32>,
    pub k_values: Vec<i64>,
    pub r_values: Vec<u32>,
    /// Seed for the random polynomials of the round-trip checks.
    pub seed: u64,
    /// Number of terms `K` of the Dobinski series.
    pub dobinski_terms: usize,
    /// Largest `n + r` enumerated by the partition oracle.
    pub oracle_size: usize,
    pub fault: Option<FaultInjection>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            lambda_samples: None,
            m_values: vec![1, 2, 3],
            k_values: vec![0, 1, 2, 3],
            r_values: vec![0, 1, 2],
            seed: 0,
            dobinski_terms: 400,
            oracle_size: 8,
            fault: None,
        }
    }
}

/// One evaluation point. Unused parameters are `None`; `case` names a
/// sub-check when an identity has several.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridPoint {
    pub n: usize,
    #[serde(with = "rational::serde_str::option", skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(with = "rational::serde_str::option", skip_serializing_if = "Option::is_none")]
    pub x: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

impl GridPoint {
    pub fn new(n: usize) -> Self {
        GridPoint { n, lambda: None, m: None, k: None, r: None, x: None, case: None }
    }

    pub fn lambda(mut self, lambda: &Lambda) -> Self {
        self.lambda = Some(lambda.value().clone());
        self
    }

    pub fn m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn x(mut self, x: &Rational) -> Self {
        self.x = Some(x.clone());
        self
    }

    pub fn case(mut self, case: &str) -> Self {
        self.case = Some(case.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointResult {
    pub point: GridPoint,
    pub pass: bool,
}

/// One side of a compared identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Value {
    Poly(PolyX),
    Number(#[serde(with = "rational::serde_str")] Rational),
    Float(f64),
    /// Coefficients of `y^0, y^1, ...`, each a polynomial in `x`.
    Bivariate(Vec<PolyX>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub point: GridPoint,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub n_max: usize,
    pub grid: Vec<PointResult>,
    /// First failing point in grid order.
    pub witness: Option<Witness>,
    pub lambda_degree_bound: usize,
    /// Distinct `lambda` samples at which every grid point passed. An
    /// identity without `lambda` counts its single evaluation as one sample.
    pub passing_lambda_samples: usize,
    pub certified_polynomial_in_lambda: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_relative_error: Option<f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.grid.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> usize {
        self.grid.iter().filter(|p| !p.pass).count()
    }
}

/// Upper bound on the `lambda`-degree of both sides at fixed `n`: `4n`, or 0
/// for identities that do not involve `lambda`. The bound does not depend on `m`.
pub fn lambda_degree_bound(identity: IdentityId, n: usize, _m: u32) -> usize {
    if identity.is_lambda_free() {
        0
    } else {
        4 * n
    }
}

/// Checks one identity for `n <= n_max` over the given samples. `r`, the
/// seed and the Dobinski parameters take their defaults.
pub fn verify(
    identity: IdentityId,
    n_max: usize,
    lambda_samples: &[Rational],
    m_values: &[u32],
    k_values: &[i64],
) -> Result<VerificationReport> {
    let config = SuiteConfig {
        lambda_samples: Some(lambda_samples.to_vec()),
        m_values: m_values.to_vec(),
        k_values: k_values.to_vec(),
        ..SuiteConfig::default()
    };
    verify_with(identity, n_max, &config)
}

/// Checks one identity with a full configuration.
pub fn verify_with(identity: IdentityId, n_max: usize, config: &SuiteConfig) -> Result<VerificationReport> {
    let ctx = checks::Context::new(identity, n_max, config)?;
    let mut out = checks::Collector::default();
    ctx.run(&mut out)?;
    let grid = out.grid;
    if grid.is_empty() {
        return Err(Error::EmptyGrid(identity.name().into()));
    }
    let bound = ctx.degree_bound();
    let all_pass = grid.iter().all(|p| p.pass);
    let passing = if identity.is_lambda_free() { usize::from(all_pass) } else { passing_lambdas(&grid) };
    let certified = !identity.is_numerical() && all_pass && passing > bound;
    Ok(VerificationReport {
        identity,
        n_max,
        grid,
        witness: out.witness,
        lambda_degree_bound: bound,
        passing_lambda_samples: passing,
        certified_polynomial_in_lambda: certified,
        max_relative_error: out.max_relative_error,
    })
}

fn passing_lambdas(grid: &[PointResult]) -> usize {
    let mut all = BTreeSet::new();
    let mut failed = BTreeSet::new();
    for p in grid {
        if let Some(l) = &p.point.lambda {
            all.insert(l.clone());
            if !p.pass {
                failed.insert(l.clone());
            }
        }
    }
    all.difference(&failed).count()
}

/// Runs every identity in [`IdentityId::ALL`] order. Identities are checked
/// on separate threads; the result order does not depend on scheduling.
pub fn run_full_suite(n_max: usize, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            IdentityId::ALL.into_iter().map(|id| scope.spawn(move || verify_with(id, n_max, config))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    })
}
