//! Sparse multivariate polynomials over an arbitrary coefficient ring.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic, so two polynomials are equal exactly when their term
//! maps are equal. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::BigRat;
use super::{AlgebraError, Ring};

/// Ordered variable names shared between polynomials of one ring.
pub type Vars = Arc<[String]>;

pub fn vars<I, S>(names: I) -> Vars
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    names.into_iter().map(Into::into).collect::<Vec<_>>().into()
}

pub fn no_vars() -> Vars {
    Arc::from(Vec::<String>::new())
}

/// Exponent vector with trailing zeros trimmed, so the constant monomial is
/// the same value whatever the number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Monomial::new(v)
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Exponents padded to `n` entries.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Number of leading entries that can be nonzero.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e <= other.get(i))
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            (0..self.0.len())
                .map(|i| self.get(i) - other.get(i))
                .collect(),
        ))
    }

    pub fn with(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.exponents(i + 1);
        v[i] = e;
        Monomial::new(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (0..n)
                .map(|i| self.get(i).cmp(&other.get(i)))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `n` variables, ascending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out.sort();
    out
}

/// Falling factorial `e (e-1) ... (e-k+1)`.
pub fn falling(e: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= BigInt::from(e - t);
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

#[derive(Clone, Debug)]
pub struct Poly<C> {
    vars: Vars,
    terms: BTreeMap<Monomial, C>,
}

pub type MPoly = Poly<BigRat>;

fn join_vars(a: &Vars, b: &Vars) -> Result<Vars, AlgebraError> {
    if Arc::ptr_eq(a, b) || a == b || b.is_empty() {
        Ok(a.clone())
    } else if a.is_empty() {
        Ok(b.clone())
    } else {
        Err(AlgebraError::VariableMismatch {
            left: a.join(","),
            right: b.join(","),
        })
    }
}

impl<C: Ring> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
            && (self.vars == other.vars
                || self.is_constant()
                || self.vars.is_empty()
                || other.vars.is_empty())
    }
}

impl<C: Ring> Poly<C> {
    pub fn zero(vars: Vars) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn constant(vars: Vars, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(vars: Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(i, 1), C::one());
        p
    }

    pub fn monomial(vars: Vars, m: Monomial, c: C) -> Self {
        assert!(
            m.support_len() <= vars.len(),
            "monomial has more variables than the ring"
        );
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(vars: Vars, terms: I) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert!(
                m.support_len() <= p.vars.len(),
                "monomial has more variables than the ring"
            );
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.get(i)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Re-labels the variables without touching the terms.
    pub fn with_vars(&self, vars: Vars) -> Self {
        assert!(
            self.terms.keys().all(|m| m.support_len() <= vars.len()),
            "renaming to a smaller variable list"
        );
        Poly {
            vars,
            terms: self.terms.clone(),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add_ref(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let vars = join_vars(&self.vars, &other.vars)?;
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Poly {
            vars,
            terms: big.terms.clone(),
        };
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let vars = join_vars(&self.vars, &other.vars)?;
        let mut out = Poly::zero(vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn neg_poly(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, v)| (m.clone(), v.mul_ref(c))),
        )
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        Poly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(k, v)| (k.mul(m), v.mul_ref(c))),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.vars.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Poly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                let f = C::from_rat(&BigRat::from_integer(e.into()));
                out.add_term(m.with(i, e - 1), &c.mul_ref(&f));
            }
        }
        out
    }

    pub fn map_coeffs<D: Ring, F: FnMut(&C) -> D>(&self, mut f: F) -> Poly<D> {
        Poly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    pub fn try_map_coeffs<D: Ring, E, F: FnMut(&C) -> Result<D, E>>(
        &self,
        mut f: F,
    ) -> Result<Poly<D>, E> {
        let mut out = Poly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Evaluates at a point given as one value per variable.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(
            point.len(),
            self.vars.len(),
            "evaluation point has wrong length"
        );
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.get(i) {
                    t = t.mul_ref(x);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// Linear change of variables `old_i = sum_a map[i][a] * new_a`.
    pub fn substitute_linear(&self, new_vars: Vars, map: &[Vec<BigRat>]) -> Self {
        assert_eq!(
            map.len(),
            self.vars.len(),
            "substitution must cover every variable"
        );
        let images: Vec<Poly<C>> = map
            .iter()
            .map(|row| {
                assert_eq!(row.len(), new_vars.len());
                Poly::from_terms(
                    new_vars.clone(),
                    row.iter()
                        .enumerate()
                        .map(|(a, r)| (Monomial::var(a, 1), C::from_rat(r))),
                )
            })
            .collect();
        let mut cache: Vec<Vec<Poly<C>>> = images
            .iter()
            .map(|p| vec![Poly::one(new_vars.clone()), p.clone()])
            .collect();
        let mut out = Poly::zero(new_vars.clone());
        for (m, c) in &self.terms {
            let mut t = Poly::constant(new_vars.clone(), c.clone());
            for (i, powers) in cache.iter_mut().enumerate() {
                let e = m.get(i) as usize;
                while powers.len() <= e {
                    let next = &powers[powers.len() - 1] * &images[i];
                    powers.push(next);
                }
                if e > 0 {
                    t = &t * &powers[e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Plain-text (`latex = false`) or LaTeX rendering, highest term first.
    pub fn render(&self, latex: bool) -> String {
        render_terms(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| (render_monomial(&self.vars, m, latex), c)),
            latex,
        )
    }
}

/// `x^2*y` or `x^{2} y`.
pub fn render_monomial(names: &[String], m: &Monomial, latex: bool) -> String {
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let e = m.get(i);
        if e == 0 {
            continue;
        }
        parts.push(match (e, latex) {
            (1, _) => name.clone(),
            (_, false) => format!("{name}^{e}"),
            (_, true) => format!("{name}^{{{e}}}"),
        });
    }
    parts.join(if latex { " " } else { "*" })
}

/// Joins `(monomial text, coefficient)` pairs into a signed sum.
pub fn render_terms<'a, C: Ring, I: Iterator<Item = (String, &'a C)>>(
    terms: I,
    latex: bool,
) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let neg = c.has_minus_sign();
        let mag = if neg { c.neg_ref() } else { c.clone() };
        let body = if mono.is_empty() {
            if latex {
                mag.to_latex()
            } else {
                mag.to_text()
            }
        } else if mag.is_one() {
            mono
        } else {
            let ct = if latex { mag.to_latex() } else { mag.to_text() };
            let ct = if mag.is_compound() {
                if latex {
                    format!("\\left({ct}\\right)")
                } else {
                    format!("({ct})")
                }
            } else {
                ct
            };
            if latex {
                format!("{ct} {mono}")
            } else {
                format!("{ct}*{mono}")
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Ring> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        self.checked_add(rhs)
            .expect("polynomial addition over different variables")
    }
}

impl<C: Ring> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        self.checked_sub(rhs)
            .expect("polynomial subtraction over different variables")
    }
}

impl<C: Ring> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        self.checked_mul(rhs)
            .expect("polynomial product over different variables")
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_poly()
    }
}

/// Product of two polynomials over the same variable list.
pub fn poly_mul<C: Ring>(p: &Poly<C>, q: &Poly<C>) -> Result<Poly<C>, AlgebraError> {
    if p.vars != q.vars {
        return Err(AlgebraError::VariableMismatch {
            left: p.vars.join(","),
            right: q.vars.join(","),
        });
    }
    p.checked_mul(q)
}

impl MPoly {
    /// Leading coefficient in graded-lex order.
    pub fn leading_coeff(&self) -> BigRat {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRat::zero)
    }

    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => {
                let inv = c.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Splits `self = c * prim` with `prim` having coprime integer
    /// coefficients and positive leading coefficient.
    pub fn integer_content(&self) -> (BigRat, MPoly) {
        if self.is_zero() {
            return (BigRat::zero(), self.clone());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRat::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Coefficients with respect to variable `v`, keyed by the power of `v`.
    pub fn coefficients_in(&self, v: usize) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.get(v))
                .or_insert_with(|| Poly::zero(self.vars.clone()))
                .add_term(m.with(v, 0), c);
        }
        out
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        let (lm, lc) = d.leading()?;
        if d.is_constant() {
            return Some(self.scale(&lc.recip()));
        }
        let inv = lc.recip();
        let mut q = Poly::zero(self.vars.clone());
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading() {
            let t = rm.div(lm)?;
            let tc = rc * &inv;
            r = &r - &d.mul_term(&t, &tc);
            q.add_term(t, &tc);
        }
        Some(q)
    }

    /// Monic greatest common divisor (`0` only when both inputs are zero).
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        let vars = join_vars(&self.vars, &other.vars).expect("gcd over different variables");
        if self.is_zero() {
            return other.monic().with_vars(vars);
        }
        if other.is_zero() {
            return self.monic().with_vars(vars);
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one(vars);
        }
        let a = self.with_vars(vars.clone());
        let b = other.with_vars(vars);
        let in_a = |p: &MPoly, v: usize| p.degree_in(v) > 0;
        let v = (0..a.nvars())
            .find(|&v| in_a(&a, v) || in_a(&b, v))
            .expect("non-constant polynomial");
        if !in_a(&a, v) {
            return a.gcd(&b.content_in(v));
        }
        if !in_a(&b, v) {
            return b.gcd(&a.content_in(v));
        }
        let (ca, pa) = a.content_primitive_in(v);
        let (cb, pb) = b.content_primitive_in(v);
        let content = ca.gcd(&cb);
        let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
            (pa, pb)
        } else {
            (pb, pa)
        };
        loop {
            let r = r0.prem_in(&r1, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                r1 = Poly::one(r1.vars.clone());
                break;
            }
            r0 = r1;
            r1 = r.content_primitive_in(v).1;
        }
        (&content * &r1.content_primitive_in(v).1).monic()
    }

    fn content_in(&self, v: usize) -> MPoly {
        self.coefficients_in(v)
            .values()
            .fold(Poly::zero(self.vars.clone()), |g, c| g.gcd(c))
    }

    fn content_primitive_in(&self, v: usize) -> (MPoly, MPoly) {
        let c = self.content_in(v);
        let p = self.exact_div(&c).expect("content divides polynomial");
        (c, p)
    }

    /// Pseudo-remainder of `self` by `b` as polynomials in variable `v`.
    fn prem_in(&self, b: &MPoly, v: usize) -> MPoly {
        let db = b.degree_in(v);
        let lcb = b
            .coefficients_in(v)
            .remove(&db)
            .expect("leading coefficient");
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let k = r.degree_in(v);
            let lcr = r
                .coefficients_in(v)
                .remove(&k)
                .expect("leading coefficient");
            let shift = lcr.mul_term(&Monomial::var(v, k - db), &BigRat::one());
            r = &(&r * &lcb) - &(&shift * b);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn xy() -> Vars {
        vars(["x", "y"])
    }

    fn p(terms: &[(&[u32], i64)]) -> MPoly {
        Poly::from_terms(
            xy(),
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), int(*c))),
        )
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![1, 1]);
        let c = Monomial::new(vec![0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert_eq!(Monomial::new(vec![1, 0, 0]), Monomial::var(0, 1));
    }

    #[test]
    fn identity_and_difference_of_squares() {
        let q = p(&[(&[3, 1], 2), (&[0, 0], -5)]);
        assert_eq!(&Poly::one(xy()) * &q, q);
        let sum = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let diff = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(&sum * &diff, p(&[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn mismatched_variables() {
        let a = Poly::<BigRat>::var(xy(), 0);
        let b = Poly::<BigRat>::var(vars(["u", "v"]), 0);
        assert!(matches!(
            poly_mul(&a, &b),
            Err(AlgebraError::VariableMismatch { .. })
        ));
    }

    #[test]
    fn degree_of_product() {
        let a = p(&[(&[2, 1], 3), (&[0, 0], 1)]);
        let b = p(&[(&[0, 4], 1), (&[1, 0], 2)]);
        assert_eq!((&a * &b).total_degree(), Some(7));
    }

    #[test]
    fn gcd_and_division() {
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = p(&[(&[1, 0], 1), (&[0, 0], -2)]);
        let h = p(&[(&[0, 1], 3), (&[0, 0], 1)]);
        let a = &(&f * &g) * &f;
        let b = &(&f * &h).scale(&rat(3, 2)) * &g;
        assert_eq!(a.gcd(&b), (&f * &g).monic());
        assert_eq!(a.exact_div(&f).unwrap(), &f * &g);
        assert!(a.exact_div(&h).is_none());
        assert!(f.gcd(&h).is_constant());
    }

    #[test]
    fn render_text() {
        let q = p(&[(&[2, 0], 1), (&[0, 1], -3), (&[0, 0], 1)]);
        assert_eq!(q.render(false), "x^2 - 3*y + 1");
        assert_eq!(Poly::<BigRat>::zero(xy()).render(false), "0");
    }

    #[test]
    fn linear_substitution() {
        // x*y with x = t, y = t  -> t^2
        let q = p(&[(&[1, 1], 1)]);
        let t = vars(["t"]);
        let r = q.substitute_linear(t.clone(), &[vec![int(1)], vec![int(1)]]);
        assert_eq!(r, Poly::monomial(t, Monomial::var(0, 2), int(1)));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 6).len(), 84);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one()]);
    }
}
