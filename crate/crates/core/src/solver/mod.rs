//! Singular vectors by the F-method: on each homogeneous piece of
//! `Pol(𝔫₊)`, impose `𝔩′`-invariance twisted by the target weight and
//! annihilation by `dπ̂_μ(𝔫′₊)`, then solve exactly over the parameter field.

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

use log::debug;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::matrix::{normalize_vector, nullspace_detailed};
use crate::algebra::poly::{falling, monomials_of_degree, vars};
use crate::algebra::{BigRat, ExactMatrix, MPoly, Monomial, Poly, RatFunc, Ring, Vars};
use crate::lie::{BuiltinSetting, GradedLie, LieError, RepWeight};
use crate::weyl::{Space, SymbolPoly, WeylElement};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("not implemented: {0}")]
    Unimplemented(String),
    #[error("weight `{0}` is not a parameter slot of this setting")]
    UnknownWeight(String),
    #[error("solution at degree {degree} fails re-verification under {generator}")]
    Verification { degree: u32, generator: String },
}

/// Restriction of candidate degrees by parity, the reflection `ζ ↦ -ζ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    #[default]
    Any,
    Even,
    Odd,
}

impl Parity {
    pub fn admits(self, d: u32) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => d.is_multiple_of(2),
            Parity::Odd => d % 2 == 1,
        }
    }

    pub fn parse(s: &str) -> Option<Parity> {
        match s {
            "any" => Some(Parity::Any),
            "even" => Some(Parity::Even),
            "odd" => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Any => "any",
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// A parameter slot value: a free symbol or a rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightValue {
    Symbolic,
    Value(BigRat),
}

/// Which target weights to solve for.
#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    /// Every weight class of every degree.
    Discover,
    /// The weight class of `ζ_last^d` (the Rankin–Cohen order, or `ν - λ` in
    /// the conformal setting).
    Degree(u32),
    /// An explicit character of `𝔩′`, keyed by subalgebra basis position.
    Weight(RepWeight),
}

#[derive(Clone, Debug)]
pub struct FSetting {
    pub label: String,
    pub lie: GradedLie,
    pub params: Vars,
    pub lambda: RepWeight,
    /// Slots given numeric values.
    pub fixed: BTreeMap<String, BigRat>,
    pub target: Target,
    pub degree_max: u32,
    pub invariants: Option<Vec<MPoly>>,
    pub parity: Parity,
    pub reduce: bool,
}

impl FSetting {
    /// Builds a setting from a builtin; slots absent from `weights` are symbolic.
    pub fn from_builtin(
        b: &BuiltinSetting,
        weights: &BTreeMap<String, WeightValue>,
        target: Target,
        degree_max: u32,
    ) -> Result<FSetting, SolverError> {
        if let Some(k) = weights
            .keys()
            .find(|k| !b.lambda_slots.iter().any(|(n, _)| n == *k))
        {
            return Err(SolverError::UnknownWeight(k.clone()));
        }
        let symbolic: Vec<String> = b
            .lambda_slots
            .iter()
            .filter(|(n, _)| !matches!(weights.get(n), Some(WeightValue::Value(_))))
            .map(|(n, _)| n.clone())
            .collect();
        let params = vars(symbolic.clone());
        let lambda = RepWeight::character(b.lambda_slots.iter().map(|(n, k)| {
            let v = match weights.get(n) {
                Some(WeightValue::Value(r)) => RatFunc::constant(r.clone()),
                _ => RatFunc::param(
                    params.clone(),
                    symbolic.iter().position(|s| s == n).expect("symbolic slot"),
                ),
            };
            (*k, v)
        }));
        lambda.validate(&b.lie)?;
        let label = match b.n {
            Some(n) => format!("{}({n})", b.name),
            None => b.name.clone(),
        };
        Ok(FSetting {
            label,
            lie: b.lie.clone(),
            params,
            lambda,
            fixed: weights
                .iter()
                .filter_map(|(k, v)| match v {
                    WeightValue::Value(r) => Some((k.clone(), r.clone())),
                    WeightValue::Symbolic => None,
                })
                .collect(),
            target,
            degree_max,
            invariants: b.invariants.clone(),
            parity: Parity::Any,
            reduce: true,
        })
    }

    pub fn dual_space(&self) -> Space {
        self.lie.source_space().dual_space()
    }
}

/// An operator of `𝔩′` on `Pol(𝔫₊)`, flagged when it acts diagonally on
/// monomials.
#[derive(Clone, Debug)]
struct LeviOp {
    index: usize,
    name: String,
    op: WeylElement<RatFunc>,
    diagonal: bool,
}

/// Operators shared by every degree of one setting.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub setting: FSetting,
    pub mu: RepWeight,
    nplus: Vec<(String, WeylElement<RatFunc>)>,
    levi: Vec<LeviOp>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub degree: u32,
    /// Target character on each grade-0 subalgebra element, in subalgebra order.
    pub weight: Vec<(usize, RatFunc)>,
    pub monomials: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReducedSpace {
    pub basis: Vec<MPoly>,
    pub reduced: bool,
}

#[derive(Clone, Debug)]
pub struct System {
    pub matrix: ExactMatrix,
    pub columns: Vec<MPoly>,
    pub row_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicityReport {
    pub degree: u32,
    pub ansatz_dim: usize,
    pub rows: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub reduced: bool,
    pub anomaly: bool,
    pub degeneracy: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularVector {
    pub degree: u32,
    /// Polynomial in the dual coordinates.
    pub psi: Poly<RatFunc>,
    pub weight: Vec<(usize, RatFunc)>,
    pub report: MultiplicityReport,
}

impl SingularVector {
    pub fn symbol(&self, source: &Space) -> SymbolPoly<RatFunc> {
        SymbolPoly::from_scalar(source.clone(), &self.psi)
    }

    /// The target character as a weight on the subalgebra.
    pub fn target_weight(&self) -> RepWeight {
        RepWeight::character(self.weight.iter().cloned())
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutput {
    pub vectors: Vec<SingularVector>,
    pub reports: Vec<MultiplicityReport>,
}

fn rat_const(c: &BigRat) -> RatFunc {
    RatFunc::constant(c.clone())
}

fn to_rat_poly(p: &MPoly) -> Poly<RatFunc> {
    p.map_coeffs(rat_const)
}

/// Eigenvalue of a diagonal operator on the monomial `m`.
fn eigenvalue(op: &WeylElement<RatFunc>, m: &Monomial) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (k, f) in op.terms() {
        let mut c = BigInt::one();
        for i in 0..k.d.support_len() {
            c *= falling(m.get(i), k.d.get(i));
        }
        if !c.is_zero() {
            acc = acc.add_ref(
                &f.get(0, 0)
                    .mul_ref(&RatFunc::from_rat(&BigRat::from_integer(c))),
            );
        }
    }
    acc
}

impl Prepared {
    pub fn new(setting: FSetting) -> Result<Prepared, SolverError> {
        if setting.lambda.fiber_dim() != 1 {
            return Err(SolverError::Unimplemented(
                "vector-valued source weights".into(),
            ));
        }
        if let Target::Weight(w) = &setting.target {
            if w.fiber_dim() != 1 {
                return Err(SolverError::Unimplemented(
                    "vector-valued target weights".into(),
                ));
            }
        }
        let lie = &setting.lie;
        let mu = lie.mu_from_lambda(&setting.lambda)?;
        let sub = lie.sub();
        let nplus = lie
            .sub_indices(1)
            .into_par_iter()
            .map(|a| Ok((sub[a].name.clone(), lie.dpi_hat(&sub[a].vector, &mu)?)))
            .collect::<Result<Vec<_>, LieError>>()?;
        let levi = lie
            .sub_indices(0)
            .into_par_iter()
            .map(|a| {
                let op = lie.dpi_hat(&sub[a].vector, &mu)?;
                let diagonal = op.terms().all(|(k, _)| k.z == k.d);
                Ok(LeviOp {
                    index: a,
                    name: sub[a].name.clone(),
                    op,
                    diagonal,
                })
            })
            .collect::<Result<Vec<_>, LieError>>()?;
        Ok(Prepared {
            setting,
            mu,
            nplus,
            levi,
        })
    }

    fn eigen_key(&self, m: &Monomial) -> Vec<RatFunc> {
        self.levi
            .iter()
            .filter(|l| l.diagonal)
            .map(|l| eigenvalue(&l.op, m))
            .collect()
    }

    /// Target character of the weight class of `m`: minus the eigenvalue on
    /// diagonal directions, zero elsewhere.
    pub fn class_weight(&self, m: &Monomial) -> Vec<(usize, RatFunc)> {
        self.levi
            .iter()
            .map(|l| {
                let v = if l.diagonal {
                    eigenvalue(&l.op, m).neg_ref()
                } else {
                    RatFunc::zero()
                };
                (l.index, v)
            })
            .collect()
    }

    fn target_weight(&self) -> Option<Vec<(usize, RatFunc)>> {
        let n = self.setting.lie.indices(-1).len();
        match &self.setting.target {
            Target::Discover => None,
            Target::Degree(d) => Some(self.class_weight(&Monomial::var(n - 1, *d))),
            Target::Weight(w) => Some(
                self.levi
                    .iter()
                    .map(|l| {
                        (
                            l.index,
                            w.value(l.index)
                                .map(|f| f.get(0, 0).clone())
                                .unwrap_or_else(RatFunc::zero),
                        )
                    })
                    .collect(),
            ),
        }
    }

    /// Degrees up to `degree_max` (and admitted by the parity filter) whose
    /// weight classes match the target; in discovery mode every class.
    pub fn candidate_degrees(&self) -> Vec<Candidate> {
        let n = self.setting.lie.indices(-1).len();
        let target = self.target_weight();
        let diag: Vec<usize> = self
            .levi
            .iter()
            .enumerate()
            .filter(|(_, l)| l.diagonal)
            .map(|(i, _)| i)
            .collect();
        let mut out = Vec::new();
        for d in (0..=self.setting.degree_max).filter(|&d| self.setting.parity.admits(d)) {
            let monos = monomials_of_degree(n, d);
            match &target {
                Some(w) => {
                    let want: Vec<RatFunc> = diag.iter().map(|&i| w[i].1.neg_ref()).collect();
                    let keep: Vec<Monomial> = monos
                        .into_iter()
                        .filter(|m| self.eigen_key(m) == want)
                        .collect();
                    if !keep.is_empty() {
                        out.push(Candidate {
                            degree: d,
                            weight: w.clone(),
                            monomials: keep,
                        });
                    }
                }
                None => {
                    let mut classes: Vec<(Vec<RatFunc>, Vec<Monomial>)> = Vec::new();
                    for m in monos {
                        let key = self.eigen_key(&m);
                        match classes.iter_mut().find(|(k, _)| *k == key) {
                            Some((_, v)) => v.push(m),
                            None => classes.push((key, vec![m])),
                        }
                    }
                    for (_, monomials) in classes {
                        out.push(Candidate {
                            degree: d,
                            weight: self.class_weight(&monomials[0]),
                            monomials,
                        });
                    }
                }
            }
        }
        out
    }

    /// Ansatz space for one candidate: products of the declared invariant
    /// generators inside the weight class, or the weight class itself.
    pub fn step4_reduce(&self, cand: &Candidate, reduce: bool) -> ReducedSpace {
        let dual = self.setting.dual_space().coords().clone();
        let monomial_basis = || ReducedSpace {
            basis: cand
                .monomials
                .iter()
                .map(|m| MPoly::monomial(dual.clone(), m.clone(), BigRat::one()))
                .collect(),
            reduced: false,
        };
        let Some(gens) = self.setting.invariants.as_ref().filter(|_| reduce) else {
            return monomial_basis();
        };
        let degs: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        let mut exps = Vec::new();
        enumerate_exponents(&degs, cand.degree, &mut vec![0; gens.len()], 0, &mut exps);
        let basis = exps
            .into_iter()
            .map(|e| {
                e.iter()
                    .zip(gens)
                    .fold(MPoly::one(dual.clone()), |acc, (&k, g)| &acc * &g.pow(k))
            })
            .filter(|p| p.terms().all(|(m, _)| cand.monomials.contains(m)))
            .collect();
        ReducedSpace {
            basis,
            reduced: true,
        }
    }

    /// Rows: `dπ̂_μ(C)ψ = 0` for `C ∈ 𝔫′₊`, then `(dπ̂_μ(Z) + w(Z))ψ = 0` for
    /// the non-diagonal `Z ∈ 𝔩′`, one row per output monomial.
    pub fn build_system(&self, cand: &Candidate, space: &ReducedSpace) -> System {
        let cols: Vec<Poly<RatFunc>> = space.basis.iter().map(to_rat_poly).collect();
        let mut ops: Vec<(String, WeylElement<RatFunc>)> = self.nplus.clone();
        for l in self.levi.iter().filter(|l| !l.diagonal) {
            let w = cand
                .weight
                .iter()
                .find(|(i, _)| *i == l.index)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(RatFunc::zero);
            let shift = WeylElement::scalar(l.op.space().clone(), w);
            ops.push((
                l.name.clone(),
                l.op.checked_add(&shift).expect("same space"),
            ));
        }
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        let mut row_labels = Vec::new();
        for (name, op) in &ops {
            let mut block: BTreeMap<Monomial, Vec<RatFunc>> = BTreeMap::new();
            for (j, c) in cols.iter().enumerate() {
                let img = op.apply_scalar(c).expect("ansatz lives on the dual space");
                for (m, v) in img.terms() {
                    block
                        .entry(m.clone())
                        .or_insert_with(|| vec![RatFunc::zero(); cols.len()])[j] = v.clone();
                }
            }
            for (m, row) in block {
                row_labels.push(format!(
                    "{name}:{:?}",
                    m.exponents(self.setting.dual_space().dim())
                ));
                rows.push(row);
            }
        }
        let matrix = if rows.is_empty() {
            ExactMatrix::zeros(0, cols.len())
        } else {
            ExactMatrix::from_rows(rows)
        };
        System {
            matrix,
            columns: space.basis.clone(),
            row_labels,
        }
    }

    /// Solves one candidate. Kernel vectors become normalized polynomials.
    pub fn solve_candidate(
        &self,
        cand: &Candidate,
        reduce: bool,
    ) -> Result<(Vec<SingularVector>, MultiplicityReport), SolverError> {
        let space = self.step4_reduce(cand, reduce);
        let sys = self.build_system(cand, &space);
        let ns = nullspace_detailed(&sys.matrix);
        debug!(
            "degree {}: {} columns, {} rows, rank {}, kernel {}",
            cand.degree,
            sys.matrix.cols(),
            sys.matrix.rows(),
            ns.rank,
            ns.basis.len()
        );
        let report = MultiplicityReport {
            degree: cand.degree,
            ansatz_dim: space.basis.len(),
            rows: sys.matrix.rows(),
            rank: ns.rank,
            kernel_dim: ns.basis.len(),
            reduced: space.reduced,
            anomaly: ns.basis.len() > 1,
            degeneracy: ns
                .degeneracy
                .as_ref()
                .filter(|p| !p.is_constant())
                .map(|p| p.render(false)),
        };
        let dual = self.setting.dual_space().coords().clone();
        let mut out = Vec::new();
        for v in &ns.basis {
            let mut psi = Poly::zero(dual.clone());
            for (c, b) in v.iter().zip(&space.basis) {
                psi = &psi + &to_rat_poly(b).scale(c);
            }
            let psi = self.normalize(&psi);
            self.reverify(cand, &psi)?;
            out.push(SingularVector {
                degree: cand.degree,
                psi,
                weight: cand.weight.clone(),
                report: report.clone(),
            });
        }
        Ok((out, report))
    }

    /// Primitive integer representative with positive leading coefficient.
    fn normalize(&self, psi: &Poly<RatFunc>) -> Poly<RatFunc> {
        let terms: Vec<(Monomial, RatFunc)> = psi
            .terms()
            .rev()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let coeffs: Vec<RatFunc> = terms.iter().map(|(_, c)| c.clone()).collect();
        let normed = normalize_vector(&coeffs, &self.setting.params);
        Poly::from_terms(
            psi.vars().clone(),
            terms.into_iter().map(|(m, _)| m).zip(normed),
        )
    }

    /// Independent check by direct application of every generator.
    pub fn reverify(&self, cand: &Candidate, psi: &Poly<RatFunc>) -> Result<(), SolverError> {
        for (name, op) in &self.nplus {
            if !op.apply_scalar(psi).expect("dual space").is_zero() {
                return Err(SolverError::Verification {
                    degree: cand.degree,
                    generator: name.clone(),
                });
            }
        }
        for l in &self.levi {
            let w = cand
                .weight
                .iter()
                .find(|(i, _)| *i == l.index)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(RatFunc::zero);
            let img = l.op.apply_scalar(psi).expect("dual space");
            if !(&img + &psi.scale(&w)).is_zero() {
                return Err(SolverError::Verification {
                    degree: cand.degree,
                    generator: l.name.clone(),
                });
            }
        }
        Ok(())
    }

    /// `dπ̂_μ(C)` for the subalgebra's positive generators.
    pub fn nplus_ops(&self) -> &[(String, WeylElement<RatFunc>)] {
        &self.nplus
    }
}

fn enumerate_exponents(
    degs: &[u32],
    left: u32,
    cur: &mut Vec<u32>,
    i: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if i == degs.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if degs[i] == 0 {
        cur[i] = 0;
        enumerate_exponents(degs, left, cur, i + 1, out);
        return;
    }
    for k in (0..=left / degs[i]).rev() {
        cur[i] = k;
        enumerate_exponents(degs, left - k * degs[i], cur, i + 1, out);
    }
    cur[i] = 0;
}

/// Runs every candidate in parallel and merges in ascending degree order.
pub fn solve_singular_vectors(setting: FSetting) -> Result<SolveOutput, SolverError> {
    let reduce = setting.reduce;
    let prep = Prepared::new(setting)?;
    let cands = prep.candidate_degrees();
    let results = cands
        .par_iter()
        .map(|c| prep.solve_candidate(c, reduce))
        .collect::<Result<Vec<_>, _>>()?;
    let mut vectors = Vec::new();
    let mut reports = Vec::new();
    for (v, r) in results {
        vectors.extend(v);
        reports.push(r);
    }
    Ok(SolveOutput { vectors, reports })
}
