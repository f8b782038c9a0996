//! Graded Lie algebras given by structure constants, the projections α and β
//! of the Gelfand–Naimark decomposition, and the infinitesimal actions
//! `dπ_μ` on the negative nilradical and `dπ̂_μ` on its dual.

mod builtin;
pub mod json;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::matrix::solve_rational;
use crate::algebra::poly::{vars, Monomial};
use crate::algebra::{BigRat, MPoly, RatFunc, Ring, Vars};
use crate::weyl::{Fiber, Space, WeylElement, WeylKey};

pub use builtin::{builtin_setting, BuiltinSetting, SETTING_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("malformed Lie algebra data: {0}")]
    Malformed(String),
    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("bracket [{0}, {1}] violates the grading")]
    Grading(String, String),
    #[error("subalgebra is not closed: [{0}, {1}] leaves its span")]
    NotClosed(String, String),
    #[error("subalgebra element `{0}` is not homogeneous for the grading")]
    Inhomogeneous(String),
    #[error("subalgebra elements are linearly dependent")]
    Dependent,
    #[error("expected a vector of length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("weight is not a representation of the Levi factor: {0}")]
    BadWeight(String),
    #[error("{0}")]
    NotACharacter(String),
    #[error("matrix realization disagrees with the structure constants: {0}")]
    Realization(String),
    #[error("unknown setting `{0}`; known settings: rankin_cohen, juhl")]
    UnknownSetting(String),
    #[error("setting `{name}` needs n >= {min}, got {n}")]
    SizeOutOfRange { name: String, n: usize, min: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub grade: i8,
}

/// A basis vector of the subalgebra, written in the ambient basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SubElement {
    pub name: String,
    pub vector: Vec<BigRat>,
    pub grade: i8,
}

/// Defining matrices of a faithful representation whose block decomposition
/// puts grade `-1` strictly below and grade `+1` strictly above the block
/// diagonal. Used only by oracles.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub matrices: Vec<Vec<Vec<BigRat>>>,
    pub blocks: Vec<usize>,
}

/// Unvalidated input for [`GradedLie::new`].
#[derive(Clone, Debug, Default)]
pub struct LieData {
    pub name: String,
    pub basis: Vec<BasisElement>,
    /// `(i, j) -> [(k, c)]` meaning `[X_i, X_j] = Σ c X_k`; the transposed
    /// entry is implied.
    pub brackets: BTreeMap<(usize, usize), Vec<(usize, BigRat)>>,
    pub sub: Vec<(String, Vec<BigRat>)>,
    pub coords: Option<Vec<String>>,
    pub sub_coords: Option<Vec<String>>,
    pub realization: Option<Realization>,
}

type Table = Vec<Vec<Vec<(usize, BigRat)>>>;

/// Lie algebra `𝔤 = 𝔫₋ ⊕ 𝔩 ⊕ 𝔫₊` with a graded subalgebra `𝔤′`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLie {
    name: String,
    basis: Vec<BasisElement>,
    table: Table,
    sub: Vec<SubElement>,
    coords: Vars,
    sub_coords: Vars,
    realization: Option<Realization>,
}

fn unit(dim: usize, i: usize) -> Vec<BigRat> {
    let mut v = vec![BigRat::zero(); dim];
    v[i] = BigRat::one();
    v
}

fn default_coords(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("z{i}")).collect()
}

fn mat_mul(a: &[Vec<BigRat>], b: &[Vec<BigRat>]) -> Vec<Vec<BigRat>> {
    let n = a.len();
    let mut out = vec![vec![BigRat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn mat_commutator(a: &[Vec<BigRat>], b: &[Vec<BigRat>]) -> Vec<Vec<BigRat>> {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn flatten(m: &[Vec<BigRat>]) -> Vec<BigRat> {
    m.iter().flatten().cloned().collect()
}

impl GradedLie {
    /// Builds and validates: grades, antisymmetry, Jacobi, grading of the
    /// bracket, homogeneity and closure of the subalgebra, and the
    /// realization when one is given.
    pub fn new(data: LieData) -> Result<Self, LieError> {
        let dim = data.basis.len();
        if dim == 0 {
            return Err(LieError::Malformed("empty basis".into()));
        }
        for b in &data.basis {
            if !(-1..=1).contains(&b.grade) {
                return Err(LieError::Malformed(format!(
                    "grade of `{}` must be -1, 0 or 1",
                    b.name
                )));
            }
        }
        let mut table: Table = vec![vec![Vec::new(); dim]; dim];
        for (&(i, j), coeffs) in &data.brackets {
            if i >= dim || j >= dim || coeffs.iter().any(|(k, _)| *k >= dim) {
                return Err(LieError::Malformed(format!(
                    "bracket index out of range in [{i}, {j}]"
                )));
            }
            let mut v = vec![BigRat::zero(); dim];
            for (k, c) in coeffs {
                v[*k] += c;
            }
            let sparse: Vec<(usize, BigRat)> = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if i == j && !sparse.is_empty() {
                return Err(LieError::Malformed(format!(
                    "[{0}, {0}] must vanish",
                    data.basis[i].name
                )));
            }
            let neg: Vec<(usize, BigRat)> = sparse.iter().map(|(k, c)| (*k, -c)).collect();
            for (a, b, val) in [(i, j, sparse), (j, i, neg)] {
                if !table[a][b].is_empty() && table[a][b] != val {
                    return Err(LieError::Malformed(format!(
                        "[{}, {}] given twice inconsistently",
                        data.basis[a].name, data.basis[b].name
                    )));
                }
                table[a][b] = val;
            }
        }
        let nminus = data.basis.iter().filter(|b| b.grade == -1).count();
        let coords = data
            .coords
            .clone()
            .unwrap_or_else(|| default_coords(nminus));
        if coords.len() != nminus {
            return Err(LieError::Malformed(format!(
                "{} coordinates given for a {}-dimensional negative nilradical",
                coords.len(),
                nminus
            )));
        }
        let mut lie = GradedLie {
            name: data.name.clone(),
            basis: data.basis.clone(),
            table,
            sub: Vec::new(),
            coords: vars(coords),
            sub_coords: vars(Vec::<String>::new()),
            realization: data.realization.clone(),
        };
        lie.check_structure()?;
        let mut sub = Vec::new();
        for (name, v) in &data.sub {
            if v.len() != dim {
                return Err(LieError::Dimension {
                    expected: dim,
                    found: v.len(),
                });
            }
            let grades: Vec<i8> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, _)| lie.basis[k].grade)
                .collect();
            let Some(&grade) = grades.first() else {
                return Err(LieError::Malformed(format!(
                    "subalgebra element `{name}` is zero"
                )));
            };
            if grades.iter().any(|&g| g != grade) {
                return Err(LieError::Inhomogeneous(name.clone()));
            }
            sub.push(SubElement {
                name: name.clone(),
                vector: v.clone(),
                grade,
            });
        }
        lie.sub = sub;
        lie.check_subalgebra()?;
        let sub_minus = lie.sub.iter().filter(|s| s.grade == -1).count();
        let sub_coords = data
            .sub_coords
            .clone()
            .unwrap_or_else(|| default_coords(sub_minus));
        if sub_coords.len() != sub_minus {
            return Err(LieError::Malformed(format!(
                "{} subalgebra coordinates given for a {}-dimensional negative nilradical",
                sub_coords.len(),
                sub_minus
            )));
        }
        lie.sub_coords = vars(sub_coords);
        lie.check_realization()?;
        Ok(lie)
    }

    /// Structure constants read off a matrix realization.
    pub fn from_realization(
        name: &str,
        basis: Vec<BasisElement>,
        realization: Realization,
        sub: Vec<(String, Vec<BigRat>)>,
        coords: Vec<String>,
        sub_coords: Vec<String>,
    ) -> Result<Self, LieError> {
        let cols: Vec<Vec<BigRat>> = realization.matrices.iter().map(|m| flatten(m)).collect();
        let mut brackets = BTreeMap::new();
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                let c = mat_commutator(&realization.matrices[i], &realization.matrices[j]);
                let coeffs = solve_rational(&cols, &flatten(&c)).ok_or_else(|| {
                    LieError::Realization(format!(
                        "[{}, {}] is outside the span",
                        basis[i].name, basis[j].name
                    ))
                })?;
                let sparse: Vec<(usize, BigRat)> = coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !sparse.is_empty() {
                    brackets.insert((i, j), sparse);
                }
            }
        }
        GradedLie::new(LieData {
            name: name.to_string(),
            basis,
            brackets,
            sub,
            coords: Some(coords),
            sub_coords: Some(sub_coords),
            realization: Some(realization),
        })
    }

    fn check_structure(&self) -> Result<(), LieError> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let g = self.basis[i].grade + self.basis[j].grade;
                if self.table[i][j]
                    .iter()
                    .any(|(k, _)| self.basis[*k].grade != g)
                {
                    return Err(LieError::Grading(
                        self.basis[i].name.clone(),
                        self.basis[j].name.clone(),
                    ));
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let (x, y, z) = (unit(dim, i), unit(dim, j), unit(dim, k));
                    let a = self.bracket(&self.bracket(&x, &y)?, &z)?;
                    let b = self.bracket(&self.bracket(&y, &z)?, &x)?;
                    let c = self.bracket(&self.bracket(&z, &x)?, &y)?;
                    if (0..dim).any(|t| !(&a[t] + &b[t] + &c[t]).is_zero()) {
                        return Err(LieError::Jacobi(
                            self.basis[i].name.clone(),
                            self.basis[j].name.clone(),
                            self.basis[k].name.clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_subalgebra(&self) -> Result<(), LieError> {
        let cols: Vec<Vec<BigRat>> = self.sub.iter().map(|s| s.vector.clone()).collect();
        for (i, s) in self.sub.iter().enumerate() {
            if solve_rational(&cols[..i], &s.vector).is_some() {
                return Err(LieError::Dependent);
            }
        }
        for a in &self.sub {
            for b in &self.sub {
                let c = self.bracket(&a.vector, &b.vector)?;
                if c.iter().all(Zero::is_zero) {
                    continue;
                }
                if solve_rational(&cols, &c).is_none() {
                    return Err(LieError::NotClosed(a.name.clone(), b.name.clone()));
                }
            }
        }
        Ok(())
    }

    fn check_realization(&self) -> Result<(), LieError> {
        let Some(r) = &self.realization else {
            return Ok(());
        };
        let size: usize = r.blocks.iter().sum();
        if r.matrices.len() != self.dim()
            || r.matrices
                .iter()
                .any(|m| m.len() != size || m.iter().any(|row| row.len() != size))
        {
            return Err(LieError::Realization(
                "matrix count or size does not match".into(),
            ));
        }
        let zero = vec![vec![BigRat::zero(); size]; size];
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let mut expect = zero.clone();
                for (k, c) in &self.table[i][j] {
                    for (row, src) in expect.iter_mut().zip(&r.matrices[*k]) {
                        for (e, s) in row.iter_mut().zip(src) {
                            *e += c * s;
                        }
                    }
                }
                if mat_commutator(&r.matrices[i], &r.matrices[j]) != expect {
                    return Err(LieError::Realization(format!(
                        "[{}, {}]",
                        self.basis[i].name, self.basis[j].name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Ambient basis indices of the given grade, in basis order.
    pub fn indices(&self, grade: i8) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].grade == grade)
            .collect()
    }

    pub fn sub(&self) -> &[SubElement] {
        &self.sub
    }

    /// Subalgebra basis positions of the given grade.
    pub fn sub_indices(&self, grade: i8) -> Vec<usize> {
        (0..self.sub.len())
            .filter(|&i| self.sub[i].grade == grade)
            .collect()
    }

    /// Coordinates on `𝔫₋`, one per grade `-1` basis element.
    pub fn coords(&self) -> &Vars {
        &self.coords
    }

    pub fn sub_coords(&self) -> &Vars {
        &self.sub_coords
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    /// `[X_i, X_j]` as a sparse list.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, BigRat)] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigRat> {
        unit(self.dim(), i)
    }

    pub fn source_space(&self) -> Space {
        Space::source(self.coords.clone())
    }

    fn check_len(&self, n: usize) -> Result<(), LieError> {
        if n != self.dim() {
            return Err(LieError::Dimension {
                expected: self.dim(),
                found: n,
            });
        }
        Ok(())
    }

    pub fn bracket(&self, a: &[BigRat], b: &[BigRat]) -> Result<Vec<BigRat>, LieError> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let mut out = vec![BigRat::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        Ok(out)
    }

    fn bracket_poly(&self, a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
        let zero = MPoly::zero(self.coords.clone());
        let mut out = vec![zero; self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if self.table[i][j].is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.table[i][j] {
                    out[*k] = &out[*k] + &xy.scale(c);
                }
            }
        }
        out
    }

    /// The generic point `X = Σ z_i X_i` of `𝔫₋`.
    fn generic_point(&self) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(self.coords.clone()); self.dim()];
        for (a, i) in self.indices(-1).into_iter().enumerate() {
            out[i] = MPoly::var(self.coords.clone(), a);
        }
        out
    }

    fn lift(&self, y: &[BigRat], grade: i8) -> Vec<MPoly> {
        y.iter()
            .enumerate()
            .map(|(k, c)| {
                if self.basis[k].grade == grade {
                    MPoly::constant(self.coords.clone(), c.clone())
                } else {
                    MPoly::zero(self.coords.clone())
                }
            })
            .collect()
    }

    /// `α(Y, X)` as an `𝔩`-valued polynomial in the coordinates of `X`:
    /// `-[X, Y₊] + Y₀`.
    pub fn alpha(&self, y: &[BigRat]) -> Result<Vec<MPoly>, LieError> {
        self.check_len(y.len())?;
        let x = self.generic_point();
        let mut out = self.bracket_poly(&x, &self.lift(y, 1));
        for p in out.iter_mut() {
            *p = p.neg_poly();
        }
        for (o, l) in out.iter_mut().zip(self.lift(y, 0)) {
            *o = &*o + &l;
        }
        Ok(out)
    }

    /// `β(Y, X)` as a vector field on `𝔫₋`, one polynomial per coordinate:
    /// `½[X, [X, Y₊]] + [Y₀, X] + Y₋`.
    pub fn beta(&self, y: &[BigRat]) -> Result<Vec<MPoly>, LieError> {
        self.check_len(y.len())?;
        let x = self.generic_point();
        let inner = self.bracket_poly(&x, &self.lift(y, 1));
        let half = BigRat::new(1.into(), 2.into());
        let quad = self.bracket_poly(&x, &inner);
        let lin = self.bracket_poly(&self.lift(y, 0), &x);
        let cons = self.lift(y, -1);
        Ok(self
            .indices(-1)
            .into_iter()
            .map(|k| &(&quad[k].scale(&half) + &lin[k]) + &cons[k])
            .collect())
    }

    /// `tr(ad Y |𝔫₊)` for `Y = X_k` in `𝔩`.
    pub fn nplus_trace(&self, k: usize) -> BigRat {
        let mut t = BigRat::zero();
        for i in self.indices(1) {
            for (j, c) in &self.table[k][i] {
                if *j == i {
                    t += c;
                }
            }
        }
        t
    }

    /// `dπ_μ(Y) = μ(α(Y, ·)) − Σ β_i(Y, ·) ∂_i` on polynomials in the
    /// coordinates of `𝔫₋`.
    pub fn dpi(&self, y: &[BigRat], mu: &RepWeight) -> Result<WeylElement<RatFunc>, LieError> {
        let alpha = self.alpha(y)?;
        let beta = self.beta(y)?;
        let space = self.source_space();
        let dim = mu.fiber_dim();
        let mut terms: Vec<(WeylKey, Fiber<RatFunc>)> = Vec::new();
        for (k, a) in alpha.iter().enumerate() {
            let Some(val) = mu.value(k) else { continue };
            for (m, c) in a.terms() {
                terms.push((
                    WeylKey {
                        z: m.clone(),
                        d: Monomial::one(),
                    },
                    val.scale(&RatFunc::constant(c.clone())),
                ));
            }
        }
        let id = Fiber::<RatFunc>::identity(dim);
        for (i, b) in beta.iter().enumerate() {
            for (m, c) in b.terms() {
                terms.push((
                    WeylKey {
                        z: m.clone(),
                        d: Monomial::var(i, 1),
                    },
                    id.scale(&RatFunc::constant(-c)),
                ));
            }
        }
        Ok(WeylElement::from_terms(space, dim, terms))
    }

    /// Fourier transform of [`dpi`](Self::dpi), acting on `Pol(𝔫₊)`.
    pub fn dpi_hat(&self, y: &[BigRat], mu: &RepWeight) -> Result<WeylElement<RatFunc>, LieError> {
        Ok(self.dpi(y, mu)?.fourier_hat())
    }

    /// `μ = −λ + tr(ad(·)|𝔫₊)` for a character `λ` of `𝔩`.
    pub fn mu_from_lambda(&self, lambda: &RepWeight) -> Result<RepWeight, LieError> {
        if lambda.fiber_dim() != 1 {
            return Err(LieError::NotACharacter(
                "the dual of a vector-valued weight must be supplied explicitly".into(),
            ));
        }
        let mut values = BTreeMap::new();
        for k in self.indices(0) {
            let l = lambda
                .value(k)
                .map(|f| f.get(0, 0).clone())
                .unwrap_or_else(RatFunc::zero);
            let v = RatFunc::constant(self.nplus_trace(k)).sub_ref(&l);
            if !v.is_zero() {
                values.insert(k, Fiber::scalar(v));
            }
        }
        Ok(RepWeight { dim: 1, values })
    }

    /// `𝔤′` as a graded Lie algebra in its own basis, with the subalgebra
    /// coordinates on its negative nilradical.
    pub fn subalgebra(&self) -> Result<GradedLie, LieError> {
        let cols: Vec<Vec<BigRat>> = self.sub.iter().map(|s| s.vector.clone()).collect();
        let mut brackets = BTreeMap::new();
        for a in 0..self.sub.len() {
            for b in a + 1..self.sub.len() {
                let c = self.bracket(&cols[a], &cols[b])?;
                if c.iter().all(Zero::is_zero) {
                    continue;
                }
                let coeffs = solve_rational(&cols, &c).ok_or_else(|| {
                    LieError::NotClosed(self.sub[a].name.clone(), self.sub[b].name.clone())
                })?;
                brackets.insert(
                    (a, b),
                    coeffs
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        let realization = self.realization.as_ref().map(|r| {
            let size: usize = r.blocks.iter().sum();
            let matrices = self
                .sub
                .iter()
                .map(|s| {
                    let mut m = vec![vec![BigRat::zero(); size]; size];
                    for (k, c) in s.vector.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        for (row, src) in m.iter_mut().zip(&r.matrices[k]) {
                            for (e, x) in row.iter_mut().zip(src) {
                                *e += c * x;
                            }
                        }
                    }
                    m
                })
                .collect();
            Realization {
                matrices,
                blocks: r.blocks.clone(),
            }
        });
        let n = self.sub.len();
        GradedLie::new(LieData {
            name: format!("{}'", self.name),
            basis: self
                .sub
                .iter()
                .map(|s| BasisElement {
                    name: s.name.clone(),
                    grade: s.grade,
                })
                .collect(),
            brackets,
            sub: (0..n)
                .map(|i| (self.sub[i].name.clone(), unit(n, i)))
                .collect(),
            coords: Some(self.sub_coords.to_vec()),
            sub_coords: Some(self.sub_coords.to_vec()),
            realization,
        })
    }

    /// Linear map from subalgebra coordinates to ambient coordinates:
    /// `z_i = Σ_a map[i][a] w_a`, the restriction `𝔫′₋ ↪ 𝔫₋`.
    pub fn restriction_map(&self) -> Vec<Vec<BigRat>> {
        let sub_minus = self.sub_indices(-1);
        self.indices(-1)
            .into_iter()
            .map(|i| {
                sub_minus
                    .iter()
                    .map(|&a| self.sub[a].vector[i].clone())
                    .collect()
            })
            .collect()
    }
}

/// A representation of a Levi factor, given by fiber matrices on the grade-0
/// basis elements of its algebra. Missing entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct RepWeight {
    dim: usize,
    values: BTreeMap<usize, Fiber<RatFunc>>,
}

impl RepWeight {
    /// One-dimensional weight with the given values on basis indices.
    pub fn character<I: IntoIterator<Item = (usize, RatFunc)>>(values: I) -> Self {
        RepWeight {
            dim: 1,
            values: values
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, Fiber::scalar(v)))
                .collect(),
        }
    }

    pub fn matrices(dim: usize, values: BTreeMap<usize, Fiber<RatFunc>>) -> Self {
        RepWeight { dim, values }
    }

    pub fn fiber_dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, k: usize) -> Option<&Fiber<RatFunc>> {
        self.values.get(&k)
    }

    pub fn values(&self) -> &BTreeMap<usize, Fiber<RatFunc>> {
        &self.values
    }

    /// Scalar value on a Levi element given in the basis of `lie`.
    pub fn eval_scalar(&self, y: &[BigRat]) -> RatFunc {
        assert_eq!(self.dim, 1, "eval_scalar needs a character");
        let mut acc = RatFunc::zero();
        for (k, v) in &self.values {
            if let Some(c) = y.get(*k).filter(|c| !c.is_zero()) {
                acc = acc.add_ref(&v.get(0, 0).mul_ref(&RatFunc::constant(c.clone())));
            }
        }
        acc
    }

    /// Checks that the weight lives on grade 0 and respects brackets of `𝔩`,
    /// so that a character vanishes on `[𝔩, 𝔩]`.
    pub fn validate(&self, lie: &GradedLie) -> Result<(), LieError> {
        for (k, v) in &self.values {
            if *k >= lie.dim() || lie.basis[*k].grade != 0 {
                return Err(LieError::BadWeight(format!(
                    "index {k} is not in the Levi factor"
                )));
            }
            if v.dim() != self.dim {
                return Err(LieError::BadWeight("fiber dimensions differ".into()));
            }
        }
        let levi = lie.indices(0);
        let zero = Fiber::<RatFunc>::zero(self.dim);
        let get = |k: usize| self.values.get(&k).cloned().unwrap_or_else(|| zero.clone());
        for &i in &levi {
            for &j in &levi {
                let mut expect = zero.clone();
                for (k, c) in lie.structure(i, j) {
                    expect = expect.add(&get(*k).scale(&RatFunc::constant(c.clone())));
                }
                let (a, b) = (get(i), get(j));
                let got = a.mul(&b).add(&b.mul(&a).neg());
                if got != expect {
                    return Err(LieError::BadWeight(format!(
                        "[{}, {}] is not respected",
                        lie.basis[i].name, lie.basis[j].name
                    )));
                }
            }
        }
        Ok(())
    }
}
