//! Lambda-umbral calculus: the pairing between series and polynomials, the
//! lambda-differential operator, Sheffer sequences and connection
//! coefficients.
//!
//! A pair `(g, f)` with `o(g) = 0`, `o(f) = 1` determines the unique sequence
//! `s_n` with `<g f^k | s_n> = n! delta(n,k)`, generated by
//! `(1/g(fbar(t))) e_lambda^x(fbar(t))` where `fbar` inverts `f`.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::rational::{factorial, rat, Rational};
use crate::algebra::{binomial_series, to_lambda_falling_basis, EgfSeries, PolyX, Triangle};
use crate::error::{Error, Result};
use crate::families::{bernoulli_prefactor, degenerate_polyexp_series};
use crate::kernels::{
    degenerate_exp_minus_one, degenerate_exp_symbolic, lambda_log_series, scaled_lambda_log_series, Lambda,
};

/// `<f | p>_lambda = sum_n f.a[n] q_n`, where `p = sum_n q_n (x)_{n,lambda}`.
pub fn pair_functional(f: &EgfSeries, p: &PolyX, lambda: &Lambda) -> Result<Rational> {
    let degree = p.degree().unwrap_or(0);
    if f.order_cap() < degree {
        return Err(Error::TruncationTooShort { cap: f.order_cap(), degree });
    }
    let q = to_lambda_falling_basis(p, lambda.value());
    Ok(q.iter().zip(f.coeffs()).filter(|(c, _)| !c.is_zero()).map(|(c, a)| c * a).sum())
}

/// The operator `(t^k)_lambda`: sends `(x)_{n,lambda}` to `(n)_k x^{n-k}`,
/// and to zero when `k > n`. The result is in the monomial basis.
pub fn apply_lambda_diff_op(k: usize, p: &PolyX, lambda: &Lambda) -> PolyX {
    let q = to_lambda_falling_basis(p, lambda.value());
    let mut out = vec![Rational::zero(); q.len().saturating_sub(k)];
    for (n, c) in q.iter().enumerate().skip(k) {
        let falling = (n - k + 1..=n)
            .fold(Rational::from_integer(1.into()), |acc, j| acc * Rational::from_integer((j as i64).into()));
        out[n - k] = c * falling;
    }
    PolyX::from_coeffs(out)
}

/// A pair `(g, f)` of truncated series sharing one order cap, with
/// `g.a[0] != 0`, `f.a[0] = 0` and `f.a[1] != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShefferPair {
    g: EgfSeries,
    f: EgfSeries,
    lambda: Lambda,
}

impl ShefferPair {
    pub fn new(g: EgfSeries, f: EgfSeries, lambda: Lambda) -> Result<Self> {
        if g.order_cap() != f.order_cap() {
            return Err(Error::DimensionMismatch { left: g.order_cap(), right: f.order_cap() });
        }
        if g.coeff(0).is_zero() {
            return Err(Error::InvalidPair("g must have a nonzero constant term".into()));
        }
        if f.order_cap() < 1 || f.order() != Some(1) {
            return Err(Error::InvalidPair("f must have order exactly 1".into()));
        }
        Ok(ShefferPair { g, f, lambda })
    }

    /// `(1, t)`: the lambda-falling factorials.
    pub fn falling(lambda: &Lambda, order_cap: usize) -> Self {
        Self::new(EgfSeries::one(order_cap), EgfSeries::t(order_cap), lambda.clone()).unwrap()
    }

    /// `(1, log_lambda(1+t))`: the fully degenerate Bell polynomials.
    pub fn bell(lambda: &Lambda, order_cap: usize) -> Self {
        Self::new(EgfSeries::one(order_cap), lambda_log_series(lambda, order_cap), lambda.clone()).unwrap()
    }

    /// `((mt+1)^{-1/m}, (1/m) log_{lambda/m}(1+mt))`: the fully degenerate
    /// Dowling polynomials.
    pub fn dowling(m: u32, lambda: &Lambda, order_cap: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be a positive integer".into()));
        }
        let g = binomial_series(&rat(-1, m.into()), &Rational::from_integer(m.into()), order_cap);
        let f = scaled_lambda_log_series(m, lambda, order_cap);
        Self::new(g, f, lambda.clone())
    }

    /// `((e_lambda(t) - 1)/t, t)`: the degenerate Bernoulli polynomials.
    pub fn bernoulli(lambda: &Lambda, order_cap: usize) -> Self {
        let g = degenerate_exp_minus_one(lambda, order_cap + 1).div_t().unwrap();
        Self::new(g, EgfSeries::t(order_cap), lambda.clone()).unwrap()
    }

    /// `(t/(e_lambda(t) - 1), e_lambda(t) - 1)`: the degenerate Bernoulli
    /// polynomials of the second kind.
    pub fn bernoulli2(lambda: &Lambda, order_cap: usize) -> Self {
        Self::new(bernoulli_prefactor(lambda, order_cap), degenerate_exp_minus_one(lambda, order_cap), lambda.clone())
            .unwrap()
    }

    /// `((e_lambda(t) - 1)/Ei_{k,lambda}(log_lambda(1+t)), t)`: the degenerate poly-Bell polynomials.
    pub fn poly_bell(k: i64, lambda: &Lambda, order_cap: usize) -> Self {
        let cap = order_cap + 1;
        let numerator = degenerate_exp_minus_one(lambda, cap).div_t().unwrap();
        let denominator = degenerate_polyexp_series(k, lambda, cap)
            .compose(&lambda_log_series(lambda, cap))
            .and_then(|s| s.div_t())
            .unwrap();
        let g = numerator.div(&denominator).unwrap();
        Self::new(g, EgfSeries::t(order_cap), lambda.clone()).unwrap()
    }

    /// A pair with small random rational coefficients.
    pub fn random(rng: &mut impl Rng, lambda: &Lambda, order_cap: usize) -> Self {
        let g0 = random_nonzero(rng);
        let f1 = random_nonzero(rng);
        let mut g = vec![g0];
        let mut f = vec![Rational::zero(), f1];
        for _ in 1..=order_cap {
            g.push(random_coeff(rng));
        }
        for _ in 2..=order_cap {
            f.push(random_coeff(rng));
        }
        f.truncate(order_cap + 1);
        Self::new(EgfSeries::from_coeffs(g), EgfSeries::from_coeffs(f), lambda.clone()).unwrap()
    }

    pub fn g(&self) -> &EgfSeries {
        &self.g
    }

    pub fn f(&self) -> &EgfSeries {
        &self.f
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn order_cap(&self) -> usize {
        self.f.order_cap()
    }

    fn truncated(&self, order_cap: usize) -> Result<(EgfSeries, EgfSeries)> {
        if self.order_cap() < order_cap {
            return Err(Error::TruncationTooShort { cap: self.order_cap(), degree: order_cap });
        }
        Ok((self.g.truncate(order_cap), self.f.truncate(order_cap)))
    }

    /// `g(t) f(t)^k` truncated at `order_cap`.
    pub fn dual_series(&self, k: usize, order_cap: usize) -> Result<EgfSeries> {
        let (g, f) = self.truncated(order_cap)?;
        g.mul(&f.pow(k))
    }
}

fn random_coeff(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let c = random_coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// The Sheffer sequence of a pair: `polys[n] = s_{n,lambda}(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaShefferSequence {
    pub pair: ShefferPair,
    pub n_max: usize,
    pub polys: Vec<PolyX>,
}

impl LambdaShefferSequence {
    /// First `(n, k)` with `<g f^k | s_n> != n! delta(n,k)`, if any.
    pub fn biorthogonality_failure(&self) -> Option<(usize, usize)> {
        let n_max = self.n_max;
        for k in 0..=n_max {
            let dual = self.pair.dual_series(k, n_max).expect("cap checked at construction");
            for (n, s) in self.polys.iter().enumerate() {
                let value = pair_functional(&dual, s, &self.pair.lambda).expect("degree n <= cap");
                let expected = if n == k { Rational::from_integer(factorial(n)) } else { Rational::zero() };
                if value != expected {
                    return Some((n, k));
                }
            }
        }
        None
    }
}

/// Expands `(1/g(fbar(t))) e_lambda^x(fbar(t))` with `x` symbolic.
pub fn sheffer_generate(pair: &ShefferPair, n_max: usize) -> Result<LambdaShefferSequence> {
    let (g, f) = pair.truncated(n_max)?;
    let fbar = f.comp_inverse()?;
    let prefactor = g.compose(&fbar)?.recip()?;
    let series = degenerate_exp_symbolic(&pair.lambda, n_max).compose(&fbar)?.mul_rational(&prefactor)?;
    let sequence = LambdaShefferSequence { pair: pair.clone(), n_max, polys: series.into_coeffs() };
    debug_assert_eq!(sequence.biorthogonality_failure(), None);
    Ok(sequence)
}

/// `c_{n,k}` with `s_n = sum_k c_{n,k} r_k` for `source ~ (g, f)` and
/// `target ~ (h, l)`: `a[n]` of `(h(fbar)/g(fbar)) l(fbar)^k / k!`.
pub fn connection_coefficients(source: &ShefferPair, target: &ShefferPair, n_max: usize) -> Result<Triangle> {
    if source.lambda != target.lambda {
        return Err(Error::ParameterMismatch(format!("pairs use lambda {} and {}", source.lambda, target.lambda)));
    }
    let (g, f) = source.truncated(n_max)?;
    let (h, l) = target.truncated(n_max)?;
    let fbar = f.comp_inverse()?;
    let prefactor = h.compose(&fbar)?.div(&g.compose(&fbar)?)?;
    let base = l.compose(&fbar)?;
    let mut columns = Vec::with_capacity(n_max + 1);
    let mut power = prefactor;
    for k in 0..=n_max {
        if k > 0 {
            power = power.mul(&base)?;
        }
        columns.push(power.scale(&Rational::from_integer(factorial(k)).recip()));
    }
    Ok(Triangle::from_fn(n_max, |n, k| columns[k].coeff(n).clone()))
}

/// `C_k = <h l^k | p> / k!` for `target ~ (h, l)`, so that `p = sum_k C_k r_k`.
pub fn expand_in_basis(p: &PolyX, target: &ShefferPair) -> Result<Vec<Rational>> {
    let degree = p.degree().unwrap_or(0);
    let mut out = Vec::with_capacity(degree + 1);
    for k in 0..=degree {
        let dual = target.dual_series(k, degree)?;
        let value = pair_functional(&dual, p, &target.lambda)?;
        out.push(value / Rational::from_integer(factorial(k)));
    }
    Ok(out)
}

/// `sum_k coeffs[k] basis[k]`.
pub fn reconstruct(coeffs: &[Rational], basis: &[PolyX]) -> PolyX {
    coeffs.iter().zip(basis).filter(|(c, _)| !c.is_zero()).map(|(c, b)| b.scale(c)).sum()
}
