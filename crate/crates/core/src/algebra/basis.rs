//! Change of basis for polynomials.

use num_traits::Zero;

use super::poly::PolyX;
use super::rational::Rational;

/// Coefficients `q` with `p(x) = sum_n q[n] (x)_{n,lambda}`.
///
/// `(x)_{n,lambda}` is the Newton basis on the nodes `0, lambda, 2*lambda, ...`,
/// so the coefficients come out of repeated synthetic division:
/// `q[n] = p_n(n*lambda)` and `p_{n+1} = (p_n - q[n]) / (x - n*lambda)`.
/// Works for `lambda = 0` as well, where the basis is `x^n`.
pub fn to_lambda_falling_basis(p: &PolyX, lambda: &Rational) -> Vec<Rational> {
    let Some(degree) = p.degree() else {
        return Vec::new();
    };
    let mut q = Vec::with_capacity(degree + 1);
    let mut rest = p.clone();
    for n in 0..=degree {
        let node = lambda * Rational::from_integer((n as i64).into());
        let (quotient, remainder) = rest.div_linear(&node);
        q.push(remainder);
        rest = quotient;
    }
    q
}

/// Inverse of [`to_lambda_falling_basis`]: `sum_n q[n] (x)_{n,lambda}` in the
/// monomial basis, evaluated in nested Newton form.
pub fn from_lambda_falling_basis(q: &[Rational], lambda: &Rational) -> PolyX {
    let mut acc = PolyX::zero();
    for (n, c) in q.iter().enumerate().rev() {
        let node = lambda * Rational::from_integer((n as i64).into());
        acc = &(&acc * &PolyX::linear(Rational::from_integer(1.into()), -node)) + &PolyX::constant(c.clone());
    }
    acc
}

/// Solves `p = sum_k c[k] basis[k]` for a degree-graded basis
/// (`deg basis[k] = k`, nonzero leading coefficients) by back substitution
/// from the top degree down. Returns `None` if `p` has degree beyond the
/// basis or the basis is not graded.
pub fn expand_in_graded_basis(p: &PolyX, basis: &[PolyX]) -> Option<Vec<Rational>> {
    let Some(degree) = p.degree() else {
        return Some(Vec::new());
    };
    if degree >= basis.len() {
        return None;
    }
    let mut rest = p.clone();
    let mut c = vec![Rational::zero(); degree + 1];
    for k in (0..=degree).rev() {
        let b = &basis[k];
        if b.degree() != Some(k) {
            return None;
        }
        let lead = b.leading_coeff()?;
        let ck = rest.coeff(k) / lead;
        if !ck.is_zero() {
            rest = &rest - &b.scale(&ck);
        }
        c[k] = ck;
    }
    debug_assert!(rest.is_zero());
    Some(c)
}
