use num_traits::Zero;
use serde::Serialize;

use super::VerifyError;
use crate::algebra::poly::binomial;
use crate::algebra::{BigRat, Field, Monomial, Poly, RatFunc, Ring, Vars};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub formula: String,
    pub degree: u32,
    pub proportional: bool,
    /// `found = scalar * expected` when proportional.
    pub scalar: Option<String>,
    pub expected: String,
    pub found: String,
}

fn k(i: i64) -> RatFunc {
    RatFunc::from_int(i)
}

/// `c_j = (-1)^j C(n,j) ∏_{t=n-j}^{n-1}(k1+t) ∏_{t=j}^{n-1}(k2+t)`, the
/// coefficient of `∂_x^{n-j} ∂_y^j`.
pub fn rankin_cohen_coefficients(n: u32, k1: &RatFunc, k2: &RatFunc) -> Vec<RatFunc> {
    (0..=n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let mut c = RatFunc::from_rat(&BigRat::from_integer(binomial(n, j) * sign));
            for t in n - j..n {
                c = c.mul_ref(&k1.add_ref(&k(t.into())));
            }
            for t in j..n {
                c = c.mul_ref(&k2.add_ref(&k(t.into())));
            }
            c
        })
        .collect()
}

/// `a_j = ∏_{i=1}^{δ/2-j}(λ+ν-n-1+2i) / (2^j j! (δ-2j)!)` with `ν = λ+δ`, the
/// coefficient of `Δ′^j ∂_n^{δ-2j}`; `δ` must be even.
pub fn juhl_coefficients(
    n: usize,
    delta: u32,
    lambda: &RatFunc,
) -> Result<Vec<RatFunc>, VerifyError> {
    if delta % 2 == 1 {
        return Err(VerifyError::Unsupported(format!(
            "odd nu-lambda = {delta}: the product bound (nu-lambda)/2 - j of the closed formula is not an integer; \
             odd degrees are checked by equivariance only"
        )));
    }
    let nu = lambda.add_ref(&k(delta.into()));
    let base = lambda.add_ref(&nu).sub_ref(&k(n as i64 + 1));
    Ok((0..=delta / 2)
        .map(|j| {
            let mut c = RatFunc::from_int(1);
            for i in 1..=(delta / 2 - j) {
                c = c.mul_ref(&base.add_ref(&k(2 * i64::from(i))));
            }
            let mut den = BigRat::from_integer(1.into());
            for t in 1..=j {
                den *= BigRat::from_integer((2 * t).into());
            }
            for t in 1..=(delta - 2 * j) {
                den *= BigRat::from_integer(t.into());
            }
            c.mul_ref(&RatFunc::from_rat(&den.recip()))
        })
        .collect())
}

/// The scalar `s` with `found = s * expected`, if any.
fn proportionality(expected: &Poly<RatFunc>, found: &Poly<RatFunc>) -> Option<RatFunc> {
    let (m, e) = expected.leading()?;
    let s = found.coeff(m).div_ref(e)?;
    if s.is_zero() {
        return None;
    }
    (&expected.scale(&s) - found).is_zero().then_some(s)
}

fn report(
    formula: &str,
    degree: u32,
    expected: Poly<RatFunc>,
    found: &Poly<RatFunc>,
) -> Comparison {
    let s = proportionality(&expected, found);
    Comparison {
        formula: formula.into(),
        degree,
        proportional: s.is_some(),
        scalar: s.map(|s| s.to_text()),
        expected: expected.render(false),
        found: found.render(false),
    }
}

fn check_degree(psi: &Poly<RatFunc>, d: u32, nvars: usize) -> Result<(), VerifyError> {
    if psi.nvars() != nvars {
        return Err(VerifyError::Mismatch(format!(
            "expected a polynomial in {nvars} variables"
        )));
    }
    if !psi.is_homogeneous(d) || psi.is_zero() {
        return Err(VerifyError::Mismatch(format!(
            "singular vector is not homogeneous of degree {d}"
        )));
    }
    Ok(())
}

/// Compares a degree-`n` singular vector in `(ζ_x, ζ_y)` with the
/// Rankin–Cohen coefficients at weights `(k1, k2)`.
pub fn compare_rankin_cohen(
    n: u32,
    k1: &RatFunc,
    k2: &RatFunc,
    psi: &Poly<RatFunc>,
) -> Result<Comparison, VerifyError> {
    check_degree(psi, n, 2)?;
    let expected = Poly::from_terms(
        psi.vars().clone(),
        rankin_cohen_coefficients(n, k1, k2)
            .into_iter()
            .enumerate()
            .map(|(j, c)| (Monomial::new(vec![n - j as u32, j as u32]), c)),
    );
    Ok(report("rankin_cohen", n, expected, psi))
}

/// Compares a degree-`delta` singular vector in `ζ_1..ζ_n` with Juhl's
/// coefficients at `ν = λ + delta`.
pub fn compare_juhl(
    n: usize,
    delta: u32,
    lambda: &RatFunc,
    psi: &Poly<RatFunc>,
) -> Result<Comparison, VerifyError> {
    let coeffs = juhl_coefficients(n, delta, lambda)?;
    check_degree(psi, delta, n)?;
    let vars: Vars = psi.vars().clone();
    let mut lap = Poly::zero(vars.clone());
    for i in 0..n - 1 {
        lap = &lap + &Poly::monomial(vars.clone(), Monomial::var(i, 2), RatFunc::from_int(1));
    }
    let normal = Poly::var(vars.clone(), n - 1);
    let mut expected = Poly::zero(vars.clone());
    for (j, c) in coeffs.iter().enumerate() {
        let j = j as u32;
        let term = &lap.pow(j) * &normal.pow(delta - 2 * j);
        expected = &expected + &term.scale(c);
    }
    Ok(report("juhl", delta, expected, psi))
}
