use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    default_dobinski_lambdas, default_lambda_samples, lambda_degree_bound, GridPoint, IdentityId, PointResult,
    SuiteConfig, Value, Witness, DOBINSKI_TOLERANCE,
};
use crate::algebra::rational::{binomial, factorial, int, is_integer, pow, powi, rat, Rational};
use crate::algebra::{PolyX, Triangle};
use crate::error::{Error, Result};
use crate::families::{
    bell_classical_upto, degenerate_bernoulli2_upto, degenerate_bernoulli_upto, degenerate_dowling_gf,
    degenerate_poly_bell_upto, dobinski_eval, dowling_classical_upto, fully_degenerate_bell_gf,
    fully_degenerate_dowling_gf, partial_degenerate_bell_gf, relative_error, triangle_sums,
};
use crate::kernels::{falling_value, lambda_falling_upto, Lambda};
use crate::partitions::{bell_number, count_partitions, enumerate_colored_partitions};
use crate::triangles::{stirling1, TableKind};
use crate::umbral::{expand_in_basis, reconstruct, ShefferPair};

/// Largest set size for brute-force Bell numbers in the limit checks.
const BELL_ORACLE_SIZE: usize = 10;

#[derive(Default)]
pub(super) struct Collector {
    pub grid: Vec<PointResult>,
    pub witness: Option<Witness>,
    pub max_relative_error: Option<f64>,
}

impl Collector {
    fn push(&mut self, point: GridPoint, pass: bool, witness: impl FnOnce() -> (Value, Value, Option<String>)) {
        if !pass && self.witness.is_none() {
            let (lhs, rhs, detail) = witness();
            self.witness = Some(Witness { point: point.clone(), lhs, rhs, detail });
        }
        self.grid.push(PointResult { point, pass });
    }

    fn poly(&mut self, point: GridPoint, lhs: &PolyX, rhs: &PolyX) {
        self.push(point, lhs == rhs, || (Value::Poly(lhs.clone()), Value::Poly(rhs.clone()), None));
    }

    fn number(&mut self, point: GridPoint, lhs: &Rational, rhs: &Rational, detail: Option<String>) {
        self.push(point, lhs == rhs, || (Value::Number(lhs.clone()), Value::Number(rhs.clone()), detail));
    }

    fn float(&mut self, point: GridPoint, approx: f64, exact: f64) {
        let err = relative_error(approx, exact);
        let pass = err.is_finite() && err < DOBINSKI_TOLERANCE;
        let worst = self.max_relative_error.map_or(err, |e| if err.is_nan() { err } else { e.max(err) });
        self.max_relative_error = Some(worst);
        self.push(point, pass, || (Value::Float(approx), Value::Float(exact), Some(format!("relative error {err:e}"))));
    }

    /// One point per row `n`: rows of `a b` and `b a` are Kronecker deltas.
    fn inverse_rows(&mut self, a: &Triangle, b: &Triangle, point: impl Fn(usize) -> GridPoint) {
        let ab = a.matmul(b);
        let ba = b.matmul(a);
        for n in 0..=a.n_max() {
            let bad = [(&ab, "first * second"), (&ba, "second * first")]
                .into_iter()
                .find_map(|(t, label)| (0..=n).find(|&k| t.get(n, k) != delta(n, k)).map(|k| (label, k, t.get(n, k))));
            self.push(point(n), bad.is_none(), || {
                let (label, k, value) = bad.unwrap();
                (Value::Number(value), Value::Number(delta(n, k)), Some(format!("({label})({n},{k})")))
            });
        }
    }
}

fn delta(n: usize, k: usize) -> Rational {
    if n == k {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

fn sign(i: usize) -> Rational {
    if i.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn monomials(n_max: usize) -> Vec<PolyX> {
    (0..=n_max).map(|k| PolyX::monomial(k, Rational::one())).collect()
}

/// Constant terms: the numbers attached to a polynomial family.
fn at_zero(polys: &[PolyX]) -> Vec<Rational> {
    polys.iter().map(|p| p.coeff(0)).collect()
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> PolyX {
    let mut coeffs: Vec<Rational> = (0..=degree).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
    if coeffs[degree].is_zero() {
        coeffs[degree] = Rational::one();
    }
    PolyX::from_coeffs(coeffs)
}

pub(super) struct Context<'a> {
    identity: IdentityId,
    n_max: usize,
    config: &'a SuiteConfig,
    lambdas: Vec<Lambda>,
}

impl<'a> Context<'a> {
    pub fn new(identity: IdentityId, n_max: usize, config: &'a SuiteConfig) -> Result<Self> {
        let empty = || Error::EmptyGrid(identity.name().into());
        if config.m_values.contains(&0) {
            return Err(Error::InvalidArgument("m values must be positive integers".into()));
        }
        if identity.uses_m() && config.m_values.is_empty()
            || identity.uses_k() && config.k_values.is_empty()
            || identity.uses_r() && config.r_values.is_empty()
        {
            return Err(empty());
        }
        let lambdas = if identity.is_lambda_free() {
            Vec::new()
        } else {
            let samples = if identity.is_numerical() {
                dobinski_samples(config)
            } else {
                config.lambda_samples.clone().unwrap_or_else(|| default_lambda_samples(4 * n_max + 1))
            };
            let mut lambdas: Vec<Lambda> = Vec::with_capacity(samples.len());
            for s in samples {
                let l = Lambda::new(s)?;
                if !lambdas.contains(&l) {
                    lambdas.push(l);
                }
            }
            if lambdas.is_empty() {
                return Err(empty());
            }
            lambdas
        };
        Ok(Context { identity, n_max, config, lambdas })
    }

    pub fn degree_bound(&self) -> usize {
        lambda_degree_bound(self.identity, self.n_max, 1)
    }

    /// Builds a triangle, applying the configured fault if it targets this kind.
    fn table(&self, kind: TableKind, n_max: usize, lambda: &Lambda, m: u32, r: u32) -> Triangle {
        let mut t = kind.build(n_max, lambda, m, r).expect("parameters validated");
        if let Some(fault) = &self.config.fault {
            if fault.table == kind && fault.k <= fault.n && fault.n <= n_max {
                let value = t.get(fault.n, fault.k) + &fault.delta;
                t.set(fault.n, fault.k, value);
            }
        }
        t
    }

    fn ms(&self) -> impl Iterator<Item = u32> + '_ {
        self.config.m_values.iter().copied()
    }

    pub fn run(&self, out: &mut Collector) -> Result<()> {
        use IdentityId::*;
        match self.identity {
            StirlingOrthogonality => self.stirling_ortho(out),
            DegenerateStirlingOrthogonality => self.deg_stirling_ortho(out),
            WhitneyOrthogonality => self.whitney_ortho(out),
            RWhitneyOrthogonality => self.r_whitney_ortho(out),
            WhitneyPartitionOracle => self.whitney_oracle(out)?,
            BellTriangleSum => self.bell_triangle_sum(out),
            Dobinski => self.dobinski(out)?,
            DowlingGeneratingFunction => self.dowling_gf(out),
            FamilyDualPath => self.dual_path(out),
            BellAddition => self.bell_addition(out),
            BellBasisRoundTrip => self.bell_round_trip(out)?,
            BernoulliInBell => self.bernoulli_in_bell(out),
            FallingInBell => self.falling_in_bell(out),
            PolyBellInBell => self.poly_bell_in_bell(out),
            BellInBernoulli2 => self.bell_in_bernoulli2(out),
            DowlingBasisRoundTrip => self.dowling_round_trip(out)?,
            BernoulliInDowling => self.bernoulli_in_dowling(out),
            FallingInDowling => self.falling_in_dowling(out),
            DowlingInBell => self.dowling_in_bell(out),
            ScaledBellInDowling => self.scaled_bell_in_dowling(out),
            PolyBellOrderOne => self.poly_bell_order_one(out),
            ClassicalLimit => self.classical_limit(out),
        }
        Ok(())
    }

    fn stirling_ortho(&self, out: &mut Collector) {
        let c = Lambda::classical();
        let s1 = self.table(TableKind::Stirling1, self.n_max, &c, 1, 0);
        let s2 = self.table(TableKind::Stirling2, self.n_max, &c, 1, 0);
        out.inverse_rows(&s1, &s2, GridPoint::new);
    }

    fn deg_stirling_ortho(&self, out: &mut Collector) {
        for l in &self.lambdas {
            let s1 = self.table(TableKind::DegStirling1, self.n_max, l, 1, 0);
            let s2 = self.table(TableKind::DegStirling2, self.n_max, l, 1, 0);
            out.inverse_rows(&s1, &s2, |n| GridPoint::new(n).lambda(l));
        }
    }

    fn whitney_ortho(&self, out: &mut Collector) {
        let c = Lambda::classical();
        for m in self.ms() {
            let v = self.table(TableKind::RWhitney1, self.n_max, &c, m, 1);
            let w = self.table(TableKind::RWhitney2, self.n_max, &c, m, 1);
            out.inverse_rows(&v, &w, |n| GridPoint::new(n).m(m));
        }
    }

    fn r_whitney_ortho(&self, out: &mut Collector) {
        let c = Lambda::classical();
        for m in self.ms() {
            for &r in &self.config.r_values {
                let v = self.table(TableKind::RWhitney1, self.n_max, &c, m, r);
                let w = self.table(TableKind::RWhitney2, self.n_max, &c, m, r);
                out.inverse_rows(&v, &w, |n| GridPoint::new(n).m(m).r(r));
            }
        }
    }

    fn whitney_oracle(&self, out: &mut Collector) -> Result<()> {
        let size = self.config.oracle_size;
        let c = Lambda::classical();
        for m in self.ms() {
            for &r in &self.config.r_values {
                let r_us = r as usize;
                if r_us > size {
                    continue;
                }
                let w = self.table(TableKind::RWhitney2, self.n_max, &c, m, r);
                for n in 0..=self.n_max.min(size - r_us) {
                    let mut bad = None;
                    for k in 0..=n {
                        let count = enumerate_colored_partitions(n, k, m, r_us, size)?;
                        let count = Rational::from_integer(BigInt::from(count));
                        if bad.is_none() && w.get(n, k) != count {
                            bad = Some((k, w.get(n, k), count));
                        }
                    }
                    out.push(GridPoint::new(n).m(m).r(r).case("colored"), bad.is_none(), || {
                        let (k, table, count) = bad.unwrap();
                        (Value::Number(table), Value::Number(count), Some(format!("k = {k}")))
                    });
                }
            }
        }
        for n in 0..=self.n_max.min(size.saturating_sub(1)) {
            let mut bad = None;
            for k in 0..=n {
                let colored = Rational::from_integer(BigInt::from(enumerate_colored_partitions(n, k, 1, 1, size)?));
                let plain = Rational::from_integer(count_partitions(n + 1, k + 1).into());
                if bad.is_none() && colored != plain {
                    bad = Some((k, colored, plain));
                }
            }
            out.push(GridPoint::new(n).m(1).r(1).case("stirling"), bad.is_none(), || {
                let (k, colored, plain) = bad.unwrap();
                (Value::Number(colored), Value::Number(plain), Some(format!("k = {k}")))
            });
        }
        Ok(())
    }

    fn bell_triangle_sum(&self, out: &mut Collector) {
        for l in &self.lambdas {
            let gf = fully_degenerate_bell_gf(self.n_max, l);
            let s2 = self.table(TableKind::DegStirling2, self.n_max, l, 1, 0);
            let sums = triangle_sums(&s2, &lambda_falling_upto(self.n_max, l.value()));
            for n in 0..=self.n_max {
                out.poly(GridPoint::new(n).lambda(l), &gf[n], &sums[n]);
            }
        }
    }

    fn dobinski(&self, out: &mut Collector) -> Result<()> {
        let half = rat(1, 2);
        for l in &self.lambdas {
            let lv = l.value();
            for x in [int(1), rat(1, 2), lv * int(3)] {
                let ratio = &x / lv;
                // For lambda >= 1/2 the series only converges when it terminates.
                if *lv >= half && !(is_integer(&ratio) && ratio >= Rational::zero()) {
                    continue;
                }
                for n in 0..=self.n_max {
                    let (approx, exact) = dobinski_eval(n, lv, &x, self.config.dobinski_terms)?;
                    out.float(GridPoint::new(n).lambda(l).x(&x), approx, exact);
                }
            }
        }
        Ok(())
    }

    fn dowling_gf(&self, out: &mut Collector) {
        for l in &self.lambdas {
            let basis = lambda_falling_upto(self.n_max, l.value());
            for m in self.ms() {
                let gf = fully_degenerate_dowling_gf(self.n_max, m, l);
                let w = self.table(TableKind::DegWhitney2, self.n_max, l, m, 0);
                let sums = triangle_sums(&w, &basis);
                for n in 0..=self.n_max {
                    out.poly(GridPoint::new(n).lambda(l).m(m), &gf[n], &sums[n]);
                }
            }
        }
    }

    fn dual_path(&self, out: &mut Collector) {
        let xs = monomials(self.n_max);
        for l in &self.lambdas {
            let gf = partial_degenerate_bell_gf(self.n_max, l);
            let sums = triangle_sums(&self.table(TableKind::DegStirling2, self.n_max, l, 1, 0), &xs);
            for n in 0..=self.n_max {
                out.poly(GridPoint::new(n).lambda(l).case("partial-bell"), &gf[n], &sums[n]);
            }
            for m in self.ms() {
                let gf = degenerate_dowling_gf(self.n_max, m, l);
                let sums = triangle_sums(&self.table(TableKind::DegWhitney2, self.n_max, l, m, 0), &xs);
                for n in 0..=self.n_max {
                    out.poly(GridPoint::new(n).lambda(l).m(m).case("dowling"), &gf[n], &sums[n]);
                }
            }
        }
    }

    fn bell_addition(&self, out: &mut Collector) {
        for l in &self.lambdas {
            let phi = fully_degenerate_bell_gf(self.n_max, l);
            for n in 0..=self.n_max {
                // y^b coefficient of phi_n(x + y): sum_i c_i C(i,b) x^{i-b}
                let lhs: Vec<PolyX> = (0..=n)
                    .map(|b| {
                        let coeffs = (b..=n).map(|i| phi[n].coeff(i) * binom(i, b)).collect();
                        PolyX::from_coeffs(coeffs)
                    })
                    .collect();
                let rhs: Vec<PolyX> = (0..=n)
                    .map(|b| (0..=n).map(|j| phi[j].scale(&(binom(n, j) * phi[n - j].coeff(b)))).sum())
                    .collect();
                let pass = lhs == rhs;
                out.push(GridPoint::new(n).lambda(l), pass, || (Value::Bivariate(lhs), Value::Bivariate(rhs), None));
            }
        }
    }

    fn round_trip(
        &self,
        out: &mut Collector,
        rng: &mut ChaCha8Rng,
        pair: &ShefferPair,
        basis: &[PolyX],
        point: impl Fn(usize) -> GridPoint,
    ) -> Result<()> {
        let falling = lambda_falling_upto(self.n_max, pair.lambda().value());
        for n in 0..=self.n_max {
            let cases = [
                ("monomial", PolyX::monomial(n, Rational::one())),
                ("falling", falling[n].clone()),
                ("random", random_poly(rng, n)),
            ];
            for (case, p) in cases {
                let coeffs = expand_in_basis(&p, pair)?;
                out.poly(point(n).case(case), &p, &reconstruct(&coeffs, basis));
            }
        }
        Ok(())
    }

    fn bell_round_trip(&self, out: &mut Collector) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        for l in &self.lambdas {
            let pair = ShefferPair::bell(l, self.n_max);
            let basis = fully_degenerate_bell_gf(self.n_max, l);
            self.round_trip(out, &mut rng, &pair, &basis, |n| GridPoint::new(n).lambda(l))?;
        }
        Ok(())
    }

    fn dowling_round_trip(&self, out: &mut Collector) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        for l in &self.lambdas {
            for m in self.ms() {
                let pair = ShefferPair::dowling(m, l, self.n_max)?;
                let basis = fully_degenerate_dowling_gf(self.n_max, m, l);
                self.round_trip(out, &mut rng, &pair, &basis, |n| GridPoint::new(n).lambda(l).m(m))?;
            }
        }
        Ok(())
    }

    fn bernoulli_in_bell(&self, out: &mut Collector) {
        let n_max = self.n_max;
        for l in &self.lambdas {
            let beta = degenerate_bernoulli_upto(n_max, l);
            let beta0 = at_zero(&beta);
            let phi = fully_degenerate_bell_gf(n_max, l);
            let s1 = self.table(TableKind::DegStirling1, n_max, l, 1, 0);
            for n in 0..=n_max {
                let coeffs: Vec<Rational> =
                    (0..=n).map(|k| (0..=n).map(|i| binom(n, i) * &beta0[n - i] * s1.get(i, k)).sum()).collect();
                out.poly(GridPoint::new(n).lambda(l), &beta[n], &reconstruct(&coeffs, &phi));
            }
        }
    }

    fn falling_in_bell(&self, out: &mut Collector) {
        for l in &self.lambdas {
            let falling = lambda_falling_upto(self.n_max, l.value());
            let phi = fully_degenerate_bell_gf(self.n_max, l);
            let s1 = self.table(TableKind::DegStirling1, self.n_max, l, 1, 0);
            for n in 0..=self.n_max {
                out.poly(GridPoint::new(n).lambda(l), &falling[n], &reconstruct(s1.row(n), &phi));
            }
        }
    }

    fn poly_bell_in_bell(&self, out: &mut Collector) {
        let n_max = self.n_max;
        for l in &self.lambdas {
            let phi = fully_degenerate_bell_gf(n_max, l);
            let s1 = self.table(TableKind::DegStirling1, n_max, l, 1, 0);
            for &order in &self.config.k_values {
                let poly_bell = degenerate_poly_bell_upto(n_max, order, l);
                let numbers = at_zero(&poly_bell);
                for n in 0..=n_max {
                    let coeffs: Vec<Rational> =
                        (0..=n).map(|j| (j..=n).map(|i| binom(n, i) * s1.get(i, j) * &numbers[n - i]).sum()).collect();
                    out.poly(GridPoint::new(n).lambda(l).k(order), &poly_bell[n], &reconstruct(&coeffs, &phi));
                }
            }
        }
    }

    fn bell_in_bernoulli2(&self, out: &mut Collector) {
        let n_max = self.n_max;
        for l in &self.lambdas {
            let phi = fully_degenerate_bell_gf(n_max, l);
            let beta0 = at_zero(&degenerate_bernoulli_upto(n_max, l));
            let b = degenerate_bernoulli2_upto(n_max, l);
            let s2 = self.table(TableKind::DegStirling2, n_max, l, 1, 0);
            let one = int(1);
            // phi_j evaluated at the integers 0..n_max
            let phi_at: Vec<Vec<Rational>> =
                phi.iter().map(|p| (0..n_max).map(|i| p.eval(&int(i as i64))).collect()).collect();
            for n in 0..=n_max {
                let constant: Rational = (0..=n).map(|i| &beta0[i] * s2.get(n, i)).sum();
                let mut rhs = PolyX::constant(constant);
                for k in 1..=n {
                    let mut c = Rational::zero();
                    for j in 0..n {
                        let outer = binom(n, j) * falling_value(&one, n - j, l.value());
                        for i in 0..k {
                            c += &outer * binom(k - 1, i) * sign(k - 1 - i) * &phi_at[j][i];
                        }
                    }
                    rhs = rhs + b[k].scale(&(c / fact(k)));
                }
                out.poly(GridPoint::new(n).lambda(l), &phi[n], &rhs);
            }
        }
    }

    fn bernoulli_in_dowling(&self, out: &mut Collector) {
        let n_max = self.n_max;
        let c = Lambda::classical();
        let s1c = self.table(TableKind::Stirling1, n_max, &c, 1, 0);
        for l in &self.lambdas {
            let beta = degenerate_bernoulli_upto(n_max, l);
            let beta0 = at_zero(&beta);
            for m in self.ms() {
                let m_r = Rational::from_integer(m.into());
                let s1m = self.table(TableKind::DegStirling1, n_max, &l.div_int(m), 1, 0);
                let d = fully_degenerate_dowling_gf(n_max, m, l);
                for n in 0..=n_max {
                    let coeffs: Vec<Rational> = (0..=n)
                        .map(|k| {
                            let mut c = Rational::zero();
                            for i1 in k..=n {
                                let outer = binom(n, i1) * &beta0[n - i1];
                                for j in k..=i1 {
                                    let mid = &outer * binom(i1, j) * s1m.get(j, k);
                                    for i in 0..=i1 - j {
                                        let e = i1 as i64 - k as i64 - i as i64;
                                        c += &mid * powi(&m_r, e) * sign(i) * s1c.get(i1 - j, i);
                                    }
                                }
                            }
                            c
                        })
                        .collect();
                    out.poly(GridPoint::new(n).lambda(l).m(m), &beta[n], &reconstruct(&coeffs, &d));
                }
            }
        }
    }

    fn falling_in_dowling(&self, out: &mut Collector) {
        let n_max = self.n_max;
        let c = Lambda::classical();
        let s1c = self.table(TableKind::Stirling1, n_max, &c, 1, 0);
        for l in &self.lambdas {
            let falling = lambda_falling_upto(n_max, l.value());
            for m in self.ms() {
                let m_r = Rational::from_integer(m.into());
                let s1m = self.table(TableKind::DegStirling1, n_max, &l.div_int(m), 1, 0);
                let d = fully_degenerate_dowling_gf(n_max, m, l);
                for n in 0..=n_max {
                    let coeffs: Vec<Rational> = (0..=n)
                        .map(|k| {
                            let mut c = Rational::zero();
                            for i1 in k..=n {
                                let outer = binom(n, i1) * s1m.get(i1, k);
                                for i in 0..=n - i1 {
                                    let e = n as i64 - k as i64 - i as i64;
                                    c += &outer * s1c.get(n - i1, i) * powi(&m_r, e) * sign(i);
                                }
                            }
                            c
                        })
                        .collect();
                    out.poly(GridPoint::new(n).lambda(l).m(m), &falling[n], &reconstruct(&coeffs, &d));
                }
            }
        }
    }

    fn dowling_in_bell(&self, out: &mut Collector) {
        let n_max = self.n_max;
        for l in &self.lambdas {
            let phi = fully_degenerate_bell_gf(n_max, l);
            let s1 = self.table(TableKind::DegStirling1, n_max, l, 1, 0);
            for m in self.ms() {
                let d = fully_degenerate_dowling_gf(n_max, m, l);
                let w = self.table(TableKind::DegWhitney2, n_max, l, m, 0);
                for n in 0..=n_max {
                    let coeffs: Vec<Rational> =
                        (0..=n).map(|k| (k..=n).map(|j| s1.get(j, k) * w.get(n, j)).sum()).collect();
                    out.poly(GridPoint::new(n).lambda(l).m(m), &d[n], &reconstruct(&coeffs, &phi));
                }
            }
        }
    }

    fn scaled_bell_in_dowling(&self, out: &mut Collector) {
        let n_max = self.n_max;
        let minus_one = int(-1);
        for l in &self.lambdas {
            for m in self.ms() {
                let m_r = Rational::from_integer(m.into());
                let inv_m = m_r.recip();
                let phi = fully_degenerate_bell_gf(n_max, &l.div_int(m));
                let d = fully_degenerate_dowling_gf(n_max, m, l);
                for n in 0..=n_max {
                    let lhs = phi[n].scale_argument(&inv_m);
                    let coeffs: Vec<Rational> =
                        (0..=n).map(|k| binom(n, k) * falling_value(&minus_one, n - k, l.value())).collect();
                    let rhs = reconstruct(&coeffs, &d).scale(&pow(&inv_m, n));
                    out.poly(GridPoint::new(n).lambda(l).m(m), &lhs, &rhs);
                }
            }
        }
    }

    fn poly_bell_order_one(&self, out: &mut Collector) {
        for l in &self.lambdas {
            let poly_bell = degenerate_poly_bell_upto(self.n_max, 1, l);
            let beta = degenerate_bernoulli_upto(self.n_max, l);
            for n in 0..=self.n_max {
                out.poly(GridPoint::new(n).lambda(l).k(1), &poly_bell[n], &beta[n]);
            }
        }
    }

    fn classical_limit(&self, out: &mut Collector) {
        let n_max = self.n_max;
        let c = Lambda::classical();
        let one = int(1);
        let point = |n: usize, case: &str| GridPoint::new(n).lambda(&c).case(case);

        let phi = fully_degenerate_bell_gf(n_max, &c);
        let bell_polys = bell_classical_upto(n_max);
        for n in 0..=n_max {
            if n <= BELL_ORACLE_SIZE {
                let count = Rational::from_integer(bell_number(n).into());
                out.number(point(n, "bell-numbers"), &phi[n].eval(&one), &count, None);
            }
            out.poly(point(n, "bell-polynomials"), &phi[n], &bell_polys[n]);
        }

        let d1 = fully_degenerate_dowling_gf(n_max, 1, &c);
        for n in 0..=n_max.min(BELL_ORACLE_SIZE - 1) {
            let count = Rational::from_integer(bell_number(n + 1).into());
            out.number(point(n, "dowling-m1").m(1), &d1[n].eval(&one), &count, None);
        }
        for m in self.ms() {
            let d = fully_degenerate_dowling_gf(n_max, m, &c);
            let classical = dowling_classical_upto(n_max, m);
            for n in 0..=n_max {
                out.poly(point(n, "dowling").m(m), &d[n], &classical[n]);
            }
        }

        let beta0 = at_zero(&degenerate_bernoulli_upto(n_max, &c));
        let bernoulli = bernoulli_numbers(n_max);
        for n in 0..=n_max {
            out.number(point(n, "bernoulli"), &beta0[n], &bernoulli[n], None);
        }

        let b0 = at_zero(&degenerate_bernoulli2_upto(n_max, &c));
        let gregory = bernoulli2_numbers(n_max);
        for n in 0..=n_max {
            out.number(point(n, "bernoulli2"), &b0[n], &gregory[n], None);
        }

        for &order in &self.config.k_values {
            let numbers = at_zero(&degenerate_poly_bell_upto(n_max, order, &c));
            let oracle = poly_bell_numbers(n_max, order);
            for n in 0..=n_max {
                out.number(point(n, "poly-bell").k(order), &numbers[n], &oracle[n], None);
            }
        }
    }
}

fn dobinski_samples(config: &SuiteConfig) -> Vec<Rational> {
    let in_domain: Vec<Rational> = config
        .lambda_samples
        .iter()
        .flatten()
        .filter(|l| **l > Rational::zero() && **l < Rational::one())
        .cloned()
        .collect();
    if in_domain.is_empty() {
        default_dobinski_lambdas()
    } else {
        in_domain
    }
}

/// `B_0 = 1`, `sum_{j=0}^{n} C(n+1, j) B_j = 0` for `n >= 1`.
fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let mut b = vec![int(1)];
    for n in 1..=n_max {
        let s: Rational = (0..n).map(|j| binom(n + 1, j) * &b[j]).sum();
        b.push(-s / binom(n + 1, n));
    }
    b
}

/// Coefficients of `t / log(1+t)`: with `c_j = b_j / j!`,
/// `sum_j c_j (-1)^{n-j} / (n-j+1) = delta(n, 0)`.
fn bernoulli2_numbers(n_max: usize) -> Vec<Rational> {
    let mut c = vec![int(1)];
    for n in 1..=n_max {
        let s: Rational = (0..n).map(|j| &c[j] * sign(n - j) / int((n - j + 1) as i64)).sum();
        c.push(-s);
    }
    c.iter().enumerate().map(|(n, x)| x * fact(n)).collect()
}

/// Classical poly-Bernoulli-type numbers of order `k` from
/// `sum_{j<n} C(n,j) B_j = sum_i i^{1-k} S1(n,i)`.
fn poly_bell_numbers(n_max: usize, k: i64) -> Vec<Rational> {
    let s1 = stirling1(n_max + 1);
    let mut b: Vec<Rational> = Vec::with_capacity(n_max + 1);
    for n in 1..=n_max + 1 {
        let target: Rational = (1..=n).map(|i| powi(&int(i as i64), 1 - k) * s1.get(n, i)).sum();
        let known: Rational = (0..n - 1).map(|j| binom(n, j) * &b[j]).sum();
        b.push((target - known) / binom(n, n - 1));
    }
    b
}
