//! Weyl algebras of polynomial differential operators, the algebraic Fourier
//! transform between a space and its dual, and the symbol map on
//! constant-coefficient operators.
//!
//! Every element is stored in normal order: in each term all coordinate
//! factors stand to the left of all derivatives. Coefficients are square
//! fiber matrices so that vector-valued sections share one code path with
//! scalar ones.

mod fiber;
pub mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::algebra::poly::{binomial, falling, render_terms, Monomial, Poly, Vars};
use crate::algebra::{BigRat, Ring};

pub use fiber::Fiber;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("operators live on different spaces: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },
    #[error("fiber dimensions differ: {0} vs {1}")]
    FiberMismatch(usize, usize),
    #[error("symbol map needs a constant-coefficient operator; found coordinate factor in `{0}`")]
    NonConstant(String),
    #[error("section variables [{found}] do not match the coordinates [{expected}]")]
    SectionMismatch { expected: String, found: String },
}

/// Which side of the transform a space sits on. Source coordinates are those
/// of the negative nilradical; the dual side carries the Fourier variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Source,
    Dual,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Source => Side::Dual,
            Side::Dual => Side::Source,
        }
    }
}

/// Coordinates of a vector space together with the names of the dual
/// coordinates the transform maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    coords: Vars,
    dual: Vars,
    side: Side,
}

/// `z3 -> zeta3`, anything else `x -> zeta_x`.
pub fn dual_name(v: &str) -> String {
    match v.strip_prefix('z') {
        Some(rest) if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) => {
            format!("zeta{rest}")
        }
        _ => format!("zeta_{v}"),
    }
}

impl Space {
    pub fn new(coords: Vars, dual: Vars, side: Side) -> Self {
        assert_eq!(
            coords.len(),
            dual.len(),
            "dual coordinates must match in number"
        );
        Space { coords, dual, side }
    }

    /// A source space whose dual names follow [`dual_name`].
    pub fn source(coords: Vars) -> Self {
        let dual: Vars = coords
            .iter()
            .map(|v| dual_name(v))
            .collect::<Vec<_>>()
            .into();
        Space::new(coords, dual, Side::Source)
    }

    /// `z1, ..., zn`.
    pub fn standard(n: usize) -> Self {
        Space::source((1..=n).map(|i| format!("z{i}")).collect::<Vec<_>>().into())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &Vars {
        &self.coords
    }

    pub fn dual_coords(&self) -> &Vars {
        &self.dual
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The space the transform lands in.
    pub fn dual_space(&self) -> Space {
        Space {
            coords: self.dual.clone(),
            dual: self.coords.clone(),
            side: self.side.flip(),
        }
    }

    /// `z1 -> d1`, `zeta1 -> dzeta1`, `x -> dx`.
    pub fn deriv_name(&self, i: usize) -> String {
        let v = &self.coords[i];
        match v.strip_prefix('z') {
            Some(rest) if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) => {
                format!("d{rest}")
            }
            _ => format!("d{v}"),
        }
    }

    fn label(&self) -> String {
        format!("{:?}[{}]", self.side, self.coords.join(","))
    }
}

fn latex_var(v: &str) -> String {
    let (head, sub) = match v.find(|c: char| c.is_ascii_digit() || c == '_') {
        Some(i) => (&v[..i], v[i..].trim_start_matches('_')),
        None => (v, ""),
    };
    let head = match head {
        "zeta" => "\\zeta".to_string(),
        "xi" => "\\xi".to_string(),
        "lambda" => "\\lambda".to_string(),
        "nu" => "\\nu".to_string(),
        h => h.to_string(),
    };
    if sub.is_empty() {
        head
    } else {
        format!("{head}_{{{sub}}}")
    }
}

/// Normal-order key `z^z d^d`, ordered by total degree, then `z`, then `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylKey {
    pub z: Monomial,
    pub d: Monomial,
}

impl Ord for WeylKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.z.degree() + self.d.degree())
            .cmp(&(other.z.degree() + other.d.degree()))
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl PartialOrd for WeylKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `∂^b z^c = Σ_k Π_i C(b_i,k_i) c_i!/(c_i-k_i)! z^{c-k} ∂^{b-k}`; returns the
/// pairs `(k, coefficient)`.
fn reorder_terms(b: &Monomial, c: &Monomial) -> Vec<(Monomial, BigInt)> {
    let n = b.support_len().min(c.support_len());
    let mut out = vec![(Vec::<u32>::new(), BigInt::one())];
    for i in 0..n {
        let top = b.get(i).min(c.get(i));
        if top == 0 {
            for (k, _) in out.iter_mut() {
                k.push(0);
            }
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (top as usize + 1));
        for (k, coef) in &out {
            for ki in 0..=top {
                let f = binomial(b.get(i), ki) * falling(c.get(i), ki);
                let mut kk = k.clone();
                kk.push(ki);
                next.push((kk, coef * &f));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(k, c)| (Monomial::new(k), c))
        .collect()
}

fn sub_mono(a: &Monomial, k: &Monomial) -> Monomial {
    a.div(k).expect("reorder index bounded by exponent")
}

/// Element of the Weyl algebra of `space`, tensored with square matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylElement<C> {
    space: Space,
    dim: usize,
    terms: BTreeMap<WeylKey, Fiber<C>>,
}

impl<C: Ring> WeylElement<C> {
    pub fn zero(space: Space, dim: usize) -> Self {
        WeylElement {
            space,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: Space, dim: usize) -> Self {
        Self::term(
            space,
            Monomial::one(),
            Monomial::one(),
            Fiber::identity(dim),
        )
    }

    pub fn scalar(space: Space, c: C) -> Self {
        Self::term(space, Monomial::one(), Monomial::one(), Fiber::scalar(c))
    }

    pub fn term(space: Space, z: Monomial, d: Monomial, f: Fiber<C>) -> Self {
        assert!(
            z.support_len() <= space.dim() && d.support_len() <= space.dim(),
            "exponent beyond space dimension"
        );
        let mut w = Self::zero(space, f.dim());
        w.add_term(WeylKey { z, d }, f);
        w
    }

    /// Multiplication by the coordinate `z_i` (scalar fiber).
    pub fn coord(space: Space, i: usize) -> Self {
        Self::term(
            space,
            Monomial::var(i, 1),
            Monomial::one(),
            Fiber::scalar(C::one()),
        )
    }

    /// The derivative `∂/∂z_i` (scalar fiber).
    pub fn deriv(space: Space, i: usize) -> Self {
        Self::term(
            space,
            Monomial::one(),
            Monomial::var(i, 1),
            Fiber::scalar(C::one()),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (WeylKey, Fiber<C>)>>(
        space: Space,
        dim: usize,
        terms: I,
    ) -> Self {
        let mut w = Self::zero(space, dim);
        for (k, f) in terms {
            assert_eq!(f.dim(), dim, "fiber dimension");
            w.add_term(k, f);
        }
        w
    }

    fn add_term(&mut self, k: WeylKey, f: Fiber<C>) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add(&f);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, f);
            }
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn fiber_dim(&self) -> usize {
        self.dim
    }

    /// Terms in ascending key order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylKey, &Fiber<C>)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total derivative degree (operator order); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.d.degree()).max()
    }

    /// Highest total degree of the coordinate factors; `None` for zero.
    pub fn poly_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.z.degree()).max()
    }

    /// True when no term carries a coordinate factor.
    pub fn is_constant_coeff(&self) -> bool {
        self.terms.keys().all(|k| k.z.is_one())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), WeylError> {
        if self.space != other.space {
            return Err(WeylError::SpaceMismatch {
                left: self.space.label(),
                right: other.space.label(),
            });
        }
        if self.dim != other.dim {
            return Err(WeylError::FiberMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, WeylError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, f) in &other.terms {
            out.add_term(k.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, WeylError> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_fibers(|f| f.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_fibers(|f| f.scale(c))
    }

    fn map_fibers<F: Fn(&Fiber<C>) -> Fiber<C>>(&self, f: F) -> Self {
        let mut out = Self::zero(self.space.clone(), self.dim);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// Coefficient-wise map into another ring.
    pub fn map_coeffs<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> WeylElement<D> {
        let mut out = WeylElement::zero(self.space.clone(), self.dim);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.map(&f));
        }
        out
    }

    pub fn try_map_coeffs<D: Ring, E, F: Fn(&C) -> Result<D, E>>(
        &self,
        f: F,
    ) -> Result<WeylElement<D>, E> {
        let mut out = WeylElement::zero(self.space.clone(), self.dim);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.try_map(&f)?);
        }
        Ok(out)
    }

    /// Normal-ordered product `self * other`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, WeylError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.space.clone(), self.dim);
        for (ka, fa) in &self.terms {
            for (kb, fb) in &other.terms {
                let f = fa.mul(fb);
                if f.is_zero() {
                    continue;
                }
                for (k, c) in reorder_terms(&ka.d, &kb.z) {
                    let key = WeylKey {
                        z: ka.z.mul(&sub_mono(&kb.z, &k)),
                        d: sub_mono(&ka.d, &k).mul(&kb.d),
                    };
                    out.add_term(key, f.scale(&C::from_rat(&BigRat::from_integer(c))));
                }
            }
        }
        Ok(out)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, WeylError> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// Algebraic Fourier transform: `∂/∂z_j ↦ -ζ_j`, `z_j ↦ ∂/∂ζ_j`.
    pub fn fourier_hat(&self) -> Self {
        let target = self.space.dual_space();
        let mut out = Self::zero(target, self.dim);
        for (key, f) in &self.terms {
            // z^a ∂^b ↦ (-1)^{|b|} ∂_ζ^a ζ^b, then normal order.
            let f = if key.d.degree() % 2 == 1 {
                f.neg()
            } else {
                f.clone()
            };
            for (k, c) in reorder_terms(&key.z, &key.d) {
                let nk = WeylKey {
                    z: sub_mono(&key.d, &k),
                    d: sub_mono(&key.z, &k),
                };
                out.add_term(nk, f.scale(&C::from_rat(&BigRat::from_integer(c))));
            }
        }
        out
    }

    /// Symbol of a constant-coefficient operator: `∂/∂z_j ↦ ξ_j`, with the
    /// symbol variables named by the dual coordinates.
    pub fn symb(&self) -> Result<SymbolPoly<C>, WeylError> {
        let mut terms = BTreeMap::new();
        for (k, f) in &self.terms {
            if !k.z.is_one() {
                return Err(WeylError::NonConstant(self.to_text()));
            }
            terms.insert(k.d.clone(), f.clone());
        }
        Ok(SymbolPoly {
            space: self.space.clone(),
            dim: self.dim,
            terms,
        })
    }

    /// Applies the operator to a vector-valued polynomial section.
    pub fn apply(&self, section: &[Poly<C>]) -> Result<Vec<Poly<C>>, WeylError> {
        if section.len() != self.dim {
            return Err(WeylError::FiberMismatch(self.dim, section.len()));
        }
        for f in section {
            if f.vars() != self.space.coords() && !(f.is_constant()) {
                return Err(WeylError::SectionMismatch {
                    expected: self.space.coords().join(","),
                    found: f.vars().join(","),
                });
            }
        }
        let coords = self.space.coords().clone();
        let mut out = vec![Poly::zero(coords.clone()); self.dim];
        for (key, fib) in &self.terms {
            for (l, f) in section.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let mut moved = Poly::zero(coords.clone());
                for (m, c) in f.terms() {
                    if !key.d.divides(m) {
                        continue;
                    }
                    let mut factor = BigInt::one();
                    for i in 0..key.d.support_len() {
                        factor *= falling(m.get(i), key.d.get(i));
                    }
                    let nm = sub_mono(m, &key.d).mul(&key.z);
                    moved = &moved
                        + &Poly::monomial(
                            coords.clone(),
                            nm,
                            c.mul_ref(&C::from_rat(&BigRat::from_integer(factor))),
                        );
                }
                if moved.is_zero() {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    let e = fib.get(k, l);
                    if !e.is_zero() {
                        *slot = &*slot + &moved.scale(e);
                    }
                }
            }
        }
        Ok(out)
    }

    /// [`apply`](Self::apply) for scalar operators.
    pub fn apply_scalar(&self, f: &Poly<C>) -> Result<Poly<C>, WeylError> {
        Ok(self.apply(std::slice::from_ref(f))?.remove(0))
    }

    fn key_text(&self, key: &WeylKey, latex: bool) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.space.coords.iter().enumerate() {
            let e = key.z.get(i);
            if e == 0 {
                continue;
            }
            let base = if latex { latex_var(name) } else { name.clone() };
            parts.push(power(&base, e, latex));
        }
        for i in 0..self.space.dim() {
            let e = key.d.get(i);
            if e == 0 {
                continue;
            }
            let base = if latex {
                format!("\\partial_{{{}}}", latex_var(&self.space.coords[i]))
            } else {
                self.space.deriv_name(i)
            };
            parts.push(power(&base, e, latex));
        }
        parts.join(if latex { " " } else { "*" })
    }

    fn render(&self, latex: bool) -> String {
        if self.dim != 1 {
            let terms: Vec<String> = self
                .terms
                .iter()
                .rev()
                .map(|(k, f)| {
                    let mono = self.key_text(k, latex);
                    let mono = if mono.is_empty() {
                        "1".to_string()
                    } else {
                        mono
                    };
                    format!(
                        "{}{}",
                        f.render(latex),
                        if latex {
                            format!(" {mono}")
                        } else {
                            format!("*{mono}")
                        }
                    )
                })
                .collect();
            return if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            };
        }
        let keyed: Vec<(String, C)> = self
            .terms
            .iter()
            .rev()
            .map(|(k, f)| (self.key_text(k, latex), f.get(0, 0).clone()))
            .collect();
        render_terms(keyed.iter().map(|(s, c)| (s.clone(), c)), latex)
    }

    pub fn to_text(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

fn power(base: &str, e: u32, latex: bool) -> String {
    match (e, latex) {
        (1, _) => base.to_string(),
        (_, false) => format!("{base}^{e}"),
        (_, true) => format!("{base}^{{{e}}}"),
    }
}

impl<C: Ring> fmt::Display for WeylElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Polynomial in the dual coordinates of `space` with fiber coefficients:
/// the symbol of a constant-coefficient operator on `space`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolPoly<C> {
    space: Space,
    dim: usize,
    terms: BTreeMap<Monomial, Fiber<C>>,
}

impl<C: Ring> SymbolPoly<C> {
    /// Wraps a scalar polynomial whose variables are the dual coordinates of `space`.
    pub fn from_scalar(space: Space, p: &Poly<C>) -> Self {
        assert!(
            p.vars() == space.dual_coords() || p.is_constant(),
            "symbol variables must be the dual coordinates"
        );
        SymbolPoly {
            space,
            dim: 1,
            terms: p
                .terms()
                .map(|(m, c)| (m.clone(), Fiber::scalar(c.clone())))
                .collect(),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn fiber_dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Fiber<C>)> + '_ {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The scalar polynomial, when the fiber is one-dimensional.
    pub fn to_scalar(&self) -> Option<Poly<C>> {
        (self.dim == 1).then(|| {
            Poly::from_terms(
                self.space.dual_coords().clone(),
                self.terms
                    .iter()
                    .map(|(m, f)| (m.clone(), f.get(0, 0).clone())),
            )
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, WeylError> {
        if self.space != other.space {
            return Err(WeylError::SpaceMismatch {
                left: self.space.label(),
                right: other.space.label(),
            });
        }
        let mut terms: BTreeMap<Monomial, Fiber<C>> = BTreeMap::new();
        for (ma, fa) in &self.terms {
            for (mb, fb) in &other.terms {
                let m = ma.mul(mb);
                let f = fa.mul(fb);
                let v = match terms.remove(&m) {
                    Some(old) => old.add(&f),
                    None => f,
                };
                if !v.is_zero() {
                    terms.insert(m, v);
                }
            }
        }
        Ok(SymbolPoly {
            space: self.space.clone(),
            dim: self.dim,
            terms,
        })
    }
}

/// Inverse of the symbol map: `ξ^a ↦ ∂^a`.
pub fn symb_inv<C: Ring>(psi: &SymbolPoly<C>) -> WeylElement<C> {
    WeylElement::from_terms(
        psi.space.clone(),
        psi.dim,
        psi.terms.iter().map(|(m, f)| {
            (
                WeylKey {
                    z: Monomial::one(),
                    d: m.clone(),
                },
                f.clone(),
            )
        }),
    )
}

impl<C: Ring> SymbolPoly<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.terms.values().all(Fiber::is_zero)
    }
}

#[cfg(test)]
mod tests;
