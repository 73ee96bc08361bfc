//! Named polynomial families: Bell, Dowling and Bernoulli variants.
//!
//! Families defined by a triangle sum have two constructors: `*_upto` uses
//! the sum and `*_gf` reads the generating-function coefficients. They must
//! agree, and the verifier checks that they do.

use num_traits::{One, Zero};

use crate::algebra::rational::{self, Rational};
use crate::algebra::{EgfSeries, PolyX, Triangle};
use crate::error::{Error, Result};
use crate::kernels::{
    degenerate_exp, degenerate_exp_minus_one, degenerate_exp_symbolic, falling_value, lambda_falling_upto,
    lambda_log_series, Lambda,
};
use crate::triangles::{degenerate_stirling2, degenerate_whitney2, stirling2, whitney2};

/// `sum_k T(n,k) basis[k]` for each row `n`.
pub fn triangle_sums(t: &Triangle, basis: &[PolyX]) -> Vec<PolyX> {
    (0..=t.n_max())
        .map(|n| t.row(n).iter().zip(basis).filter(|(c, _)| !c.is_zero()).map(|(c, b)| b.scale(c)).sum())
        .collect()
}

fn monomials(n_max: usize) -> Vec<PolyX> {
    (0..=n_max).map(|k| PolyX::monomial(k, Rational::one())).collect()
}

fn coefficients(series: EgfSeries<PolyX>) -> Vec<PolyX> {
    series.into_coeffs()
}

/// `(e_lambda^m(t) - 1)/m`.
fn dowling_inner(m: u32, lambda: &Lambda, order_cap: usize) -> EgfSeries {
    let m_r = Rational::from_integer(m.into());
    degenerate_exp(&m_r, lambda, order_cap).sub_constant(&Rational::one()).scale(&m_r.recip())
}

/// `phi_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) (x)_{k,lambda}` for `n <= n_max`.
pub fn fully_degenerate_bell_upto(n_max: usize, lambda: &Lambda) -> Vec<PolyX> {
    let basis = lambda_falling_upto(n_max, lambda.value());
    triangle_sums(&degenerate_stirling2(n_max, lambda), &basis)
}

/// `phi_{n,lambda}(x)` as `a[n]` of `e_lambda^x(e_lambda(t) - 1)`.
pub fn fully_degenerate_bell_gf(n_max: usize, lambda: &Lambda) -> Vec<PolyX> {
    let outer = degenerate_exp_symbolic(lambda, n_max);
    let inner = degenerate_exp_minus_one(lambda, n_max);
    coefficients(outer.compose(&inner).expect("order-1 inner series"))
}

pub fn fully_degenerate_bell(n: usize, lambda: &Lambda) -> PolyX {
    fully_degenerate_bell_upto(n, lambda).pop().unwrap()
}

/// `Bel_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) x^k`.
pub fn partial_degenerate_bell_upto(n_max: usize, lambda: &Lambda) -> Vec<PolyX> {
    triangle_sums(&degenerate_stirling2(n_max, lambda), &monomials(n_max))
}

/// `a[n]` of `exp(x (e_lambda(t) - 1))`.
pub fn partial_degenerate_bell_gf(n_max: usize, lambda: &Lambda) -> Vec<PolyX> {
    let outer = degenerate_exp_symbolic(&Lambda::classical(), n_max);
    let inner = degenerate_exp_minus_one(lambda, n_max);
    coefficients(outer.compose(&inner).expect("order-1 inner series"))
}

pub fn partial_degenerate_bell(n: usize, lambda: &Lambda) -> PolyX {
    partial_degenerate_bell_upto(n, lambda).pop().unwrap()
}

/// Classical Bell polynomials `Bel_n(x) = sum_k S2(n,k) x^k`.
pub fn bell_classical_upto(n_max: usize) -> Vec<PolyX> {
    triangle_sums(&stirling2(n_max), &monomials(n_max))
}

/// `d_{m,lambda}(n,x) = sum_k W_{m,lambda}(n,k) (x)_{k,lambda}`.
pub fn fully_degenerate_dowling_upto(n_max: usize, m: u32, lambda: &Lambda) -> Vec<PolyX> {
    let basis = lambda_falling_upto(n_max, lambda.value());
    triangle_sums(&degenerate_whitney2(n_max, m, lambda), &basis)
}

/// `a[n]` of `e_lambda(t) e_lambda^x((e_lambda^m(t) - 1)/m)`.
pub fn fully_degenerate_dowling_gf(n_max: usize, m: u32, lambda: &Lambda) -> Vec<PolyX> {
    let outer = degenerate_exp_symbolic(lambda, n_max);
    let composed = outer.compose(&dowling_inner(m, lambda, n_max)).expect("order-1 inner series");
    let prefactor = degenerate_exp(&Rational::one(), lambda, n_max);
    coefficients(composed.mul_rational(&prefactor).expect("shared cap"))
}

pub fn fully_degenerate_dowling(n: usize, m: u32, lambda: &Lambda) -> PolyX {
    fully_degenerate_dowling_upto(n, m, lambda).pop().unwrap()
}

/// `D_{m,lambda}(n,x) = sum_k W_{m,lambda}(n,k) x^k`.
pub fn degenerate_dowling_upto(n_max: usize, m: u32, lambda: &Lambda) -> Vec<PolyX> {
    triangle_sums(&degenerate_whitney2(n_max, m, lambda), &monomials(n_max))
}

/// `a[n]` of `e_lambda(t) exp(x (e_lambda^m(t) - 1)/m)`.
pub fn degenerate_dowling_gf(n_max: usize, m: u32, lambda: &Lambda) -> Vec<PolyX> {
    let outer = degenerate_exp_symbolic(&Lambda::classical(), n_max);
    let composed = outer.compose(&dowling_inner(m, lambda, n_max)).expect("order-1 inner series");
    let prefactor = degenerate_exp(&Rational::one(), lambda, n_max);
    coefficients(composed.mul_rational(&prefactor).expect("shared cap"))
}

pub fn degenerate_dowling(n: usize, m: u32, lambda: &Lambda) -> PolyX {
    degenerate_dowling_upto(n, m, lambda).pop().unwrap()
}

/// Classical Dowling polynomials `D_m(n,x) = sum_k W_m(n,k) x^k`.
pub fn dowling_classical_upto(n_max: usize, m: u32) -> Vec<PolyX> {
    triangle_sums(&whitney2(n_max, m), &monomials(n_max))
}

/// `t / (e_lambda(t) - 1)`, whose coefficients are the degenerate Bernoulli numbers.
pub fn bernoulli_prefactor(lambda: &Lambda, order_cap: usize) -> EgfSeries {
    degenerate_exp_minus_one(lambda, order_cap + 1).div_t().and_then(|s| s.recip()).expect("unit series")
}

/// `t / log_lambda(1 + t)`, whose coefficients are the degenerate Bernoulli
/// numbers of the second kind.
pub fn bernoulli2_prefactor(lambda: &Lambda, order_cap: usize) -> EgfSeries {
    lambda_log_series(lambda, order_cap + 1).div_t().and_then(|s| s.recip()).expect("unit series")
}

/// `beta_{n,lambda}(x)`: `a[n]` of `t/(e_lambda(t) - 1) e_lambda^x(t)`.
pub fn degenerate_bernoulli_upto(n_max: usize, lambda: &Lambda) -> Vec<PolyX> {
    let prefactor = bernoulli_prefactor(lambda, n_max);
    coefficients(degenerate_exp_symbolic(lambda, n_max).mul_rational(&prefactor).expect("shared cap"))
}

pub fn degenerate_bernoulli(n: usize, lambda: &Lambda) -> PolyX {
    degenerate_bernoulli_upto(n, lambda).pop().unwrap()
}

/// `b_{n,lambda}(x)`: `a[n]` of `t/log_lambda(1+t) (1+t)^x`, with
/// `(1+t)^x = sum_j (x)_j t^j/j!`.
pub fn degenerate_bernoulli2_upto(n_max: usize, lambda: &Lambda) -> Vec<PolyX> {
    let prefactor = bernoulli2_prefactor(lambda, n_max);
    let one_plus_t_to_x = EgfSeries::from_coeffs(lambda_falling_upto(n_max, &Rational::one()));
    coefficients(one_plus_t_to_x.mul_rational(&prefactor).expect("shared cap"))
}

pub fn degenerate_bernoulli2(n: usize, lambda: &Lambda) -> PolyX {
    degenerate_bernoulli2_upto(n, lambda).pop().unwrap()
}

/// `Ei_{k,lambda}(t)`: `a[n] = (1)_{n,lambda} n^{1-k}` for `n >= 1`, `a[0] = 0`.
pub fn degenerate_polyexp_series(k: i64, lambda: &Lambda, order_cap: usize) -> EgfSeries {
    EgfSeries::from_fn(order_cap, |n| {
        if n == 0 {
            return Rational::zero();
        }
        let n_r = Rational::from_integer((n as i64).into());
        falling_value(&Rational::one(), n, lambda.value()) * rational::powi(&n_r, 1 - k)
    })
}

/// `Ei_{k,lambda}(log_lambda(1+t)) / (e_lambda(t) - 1)`, the rational part of
/// the poly-Bell generating function.
pub fn poly_bell_prefactor(k: i64, lambda: &Lambda, order_cap: usize) -> EgfSeries {
    let cap = order_cap + 1;
    let numerator = degenerate_polyexp_series(k, lambda, cap)
        .compose(&lambda_log_series(lambda, cap))
        .and_then(|s| s.div_t())
        .expect("order-1 inner series");
    let denominator = degenerate_exp_minus_one(lambda, cap).div_t().expect("zero constant term");
    numerator.div(&denominator).expect("unit denominator")
}

/// `B^{(k)}_{n,lambda}(x)`: `a[n]` of
/// `Ei_{k,lambda}(log_lambda(1+t)) / (e_lambda(t) - 1) e_lambda^x(t)`.
pub fn degenerate_poly_bell_upto(n_max: usize, k: i64, lambda: &Lambda) -> Vec<PolyX> {
    let prefactor = poly_bell_prefactor(k, lambda, n_max);
    coefficients(degenerate_exp_symbolic(lambda, n_max).mul_rational(&prefactor).expect("shared cap"))
}

pub fn degenerate_poly_bell(n: usize, k: i64, lambda: &Lambda) -> PolyX {
    degenerate_poly_bell_upto(n, k, lambda).pop().unwrap()
}

/// A named polynomial family together with the parameters it needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    BellClassical,
    BellPartialDeg { lambda: Lambda },
    BellFullyDeg { lambda: Lambda },
    DowlingClassical { m: u32 },
    DowlingDeg { m: u32, lambda: Lambda },
    DowlingFullyDeg { m: u32, lambda: Lambda },
    BernoulliDeg { lambda: Lambda },
    Bernoulli2Deg { lambda: Lambda },
    PolyBellDeg { k: i64, lambda: Lambda },
}

impl Family {
    pub fn upto(&self, n_max: usize) -> Result<Vec<PolyX>> {
        use Family::*;
        let check_m = |m: u32| {
            if m == 0 {
                Err(Error::InvalidArgument("m must be a positive integer".into()))
            } else {
                Ok(m)
            }
        };
        Ok(match self {
            BellClassical => bell_classical_upto(n_max),
            BellPartialDeg { lambda } => partial_degenerate_bell_upto(n_max, lambda),
            BellFullyDeg { lambda } => fully_degenerate_bell_upto(n_max, lambda),
            DowlingClassical { m } => dowling_classical_upto(n_max, check_m(*m)?),
            DowlingDeg { m, lambda } => degenerate_dowling_upto(n_max, check_m(*m)?, lambda),
            DowlingFullyDeg { m, lambda } => fully_degenerate_dowling_upto(n_max, check_m(*m)?, lambda),
            BernoulliDeg { lambda } => degenerate_bernoulli_upto(n_max, lambda),
            Bernoulli2Deg { lambda } => degenerate_bernoulli2_upto(n_max, lambda),
            PolyBellDeg { k, lambda } => degenerate_poly_bell_upto(n_max, *k, lambda),
        })
    }

    pub fn polynomial(&self, n: usize) -> Result<PolyX> {
        Ok(self.upto(n)?.pop().unwrap())
    }
}

/// Partial sums of the Dobinski-like series for `phi_{n,lambda}(x)`:
/// `e_lambda^x(-1) sum_{k<=K} (k)_{n,lambda}/k! (1/(1-lambda))^k (x)_{k,lambda}`
/// with `e_lambda^x(-1) = (1-lambda)^{x/lambda}`. Entry `K` of the result is
/// the sum through term `K`.
///
/// Floating point; only `0 < lambda < 1` is accepted.
pub fn dobinski_partial_sums(n: usize, lambda: &Rational, x: &Rational, terms: usize) -> Result<Vec<f64>> {
    if *lambda <= Rational::zero() || *lambda >= Rational::one() {
        return Err(Error::Domain(format!("Dobinski series needs 0 < lambda < 1, got {lambda}")));
    }
    let l = rational::to_f64(lambda);
    let xf = rational::to_f64(x);
    let prefactor = (1.0 - l).powf(xf / l);
    let ratio = 1.0 / (1.0 - l);
    // weight_k = (x)_{k,lambda} / k! * ratio^k
    let mut weight = 1.0f64;
    let mut sum = 0.0f64;
    let mut out = Vec::with_capacity(terms + 1);
    for k in 0..=terms {
        if k > 0 {
            weight *= (xf - (k - 1) as f64 * l) / k as f64 * ratio;
        }
        let kf = k as f64;
        let falling: f64 = (0..n).map(|j| kf - j as f64 * l).product();
        sum += falling * weight;
        out.push(prefactor * sum);
    }
    Ok(out)
}

/// `(partial sum through K, exact phi_{n,lambda}(x) as f64)`.
pub fn dobinski_eval(n: usize, lambda: &Rational, x: &Rational, terms: usize) -> Result<(f64, f64)> {
    let sums = dobinski_partial_sums(n, lambda, x, terms)?;
    let reference = fully_degenerate_bell(n, &Lambda::new(lambda.clone())?).eval(x);
    Ok((*sums.last().unwrap(), rational::to_f64(&reference)))
}

/// `|approx - exact| / |exact|`, falling back to the absolute error at zero.
pub fn relative_error(approx: f64, exact: f64) -> f64 {
    if exact == 0.0 {
        approx.abs()
    } else {
        (approx - exact).abs() / exact.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn lam(p: i64, q: i64) -> Lambda {
        Lambda::new(rat(p, q)).unwrap()
    }

    #[test]
    fn fully_degenerate_bell_examples() {
        let l = lam(2, 7);
        assert_eq!(fully_degenerate_bell(0, &l), PolyX::one());
        let expect = PolyX::from_coeffs(vec![int(0), int(1) - int(2) * l.value(), int(1)]);
        assert_eq!(fully_degenerate_bell(2, &l), expect);
        assert_eq!(fully_degenerate_bell(4, &Lambda::classical()).eval(&int(1)), int(15));
        assert_eq!(fully_degenerate_bell_upto(10, &l), fully_degenerate_bell_gf(10, &l));
    }

    #[test]
    fn partial_bell_examples() {
        let l = lam(1, 3);
        assert_eq!(partial_degenerate_bell(1, &l), PolyX::x());
        assert_eq!(partial_degenerate_bell(2, &l), PolyX::from_coeffs(vec![int(0), rat(2, 3), int(1)]));
        assert_eq!(partial_degenerate_bell_upto(9, &l), partial_degenerate_bell_gf(9, &l));
        assert_eq!(partial_degenerate_bell_upto(9, &Lambda::classical()), bell_classical_upto(9));
    }

    #[test]
    fn dowling_examples() {
        for m in 1..=3 {
            let l = lam(1, 5);
            assert_eq!(fully_degenerate_dowling(0, m, &l), PolyX::one());
            assert_eq!(fully_degenerate_dowling(1, m, &l), PolyX::from_ints(&[1, 1]));
            assert_eq!(degenerate_dowling(1, m, &l), PolyX::from_ints(&[1, 1]));
            assert_eq!(fully_degenerate_dowling_upto(9, m, &l), fully_degenerate_dowling_gf(9, m, &l));
            assert_eq!(degenerate_dowling_upto(9, m, &l), degenerate_dowling_gf(9, m, &l));
        }
        assert_eq!(degenerate_dowling(2, 1, &Lambda::classical()), PolyX::from_ints(&[1, 3, 1]));
    }

    #[test]
    fn bernoulli_examples() {
        let l = lam(3, 4);
        let lv = l.value().clone();
        assert_eq!(degenerate_bernoulli(0, &l), PolyX::one());
        let half = rat(1, 2);
        assert_eq!(degenerate_bernoulli(1, &l), PolyX::linear(int(1), (&lv - int(1)) * &half));
        assert_eq!(degenerate_bernoulli2(0, &l), PolyX::one());
        assert_eq!(degenerate_bernoulli2(1, &l), PolyX::linear(int(1), (int(1) - &lv) * &half));
        assert_eq!(degenerate_bernoulli(1, &Lambda::classical()).eval(&int(0)), rat(-1, 2));
    }

    #[test]
    fn polyexp_examples() {
        let l = lam(2, 5);
        assert_eq!(degenerate_polyexp_series(1, &l, 8), degenerate_exp_minus_one(&l, 8));
        for k in -2..=3 {
            assert_eq!(degenerate_polyexp_series(k, &l, 3).coeff(1), &int(1));
        }
        let s = degenerate_polyexp_series(0, &Lambda::classical(), 6);
        for n in 0..=6 {
            assert_eq!(s.coeff(n), &int(n as i64));
        }
    }

    #[test]
    fn poly_bell_examples() {
        let l = lam(-1, 3);
        for k in -1..=3 {
            assert_eq!(degenerate_poly_bell(0, k, &l), PolyX::one());
        }
        assert_eq!(degenerate_poly_bell_upto(10, 1, &l), degenerate_bernoulli_upto(10, &l));
    }

    #[test]
    fn family_dispatch() {
        let l = lam(1, 2);
        let p = Family::BellFullyDeg { lambda: l.clone() }.polynomial(2).unwrap();
        assert_eq!(p, PolyX::monomial(2, int(1)));
        let err = Family::DowlingClassical { m: 0 }.polynomial(2).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn dobinski_examples() {
        let (sum, exact) = dobinski_eval(3, &rat(1, 10), &int(1), 200).unwrap();
        assert!(relative_error(sum, exact) < 1e-10, "{sum} vs {exact}");
        let (sum, exact) = dobinski_eval(2, &rat(1, 2), &int(2), 400).unwrap();
        assert!(relative_error(sum, exact) < 1e-8, "{sum} vs {exact}");
        let (sum, _) = dobinski_eval(0, &rat(1, 3), &rat(1, 2), 400).unwrap();
        assert!((sum - 1.0).abs() < 1e-12);
        assert!(matches!(dobinski_eval(2, &int(1), &int(1), 10), Err(Error::Domain(_))));
        assert!(matches!(dobinski_eval(2, &rat(-1, 2), &int(1), 10), Err(Error::Domain(_))));
    }
}
