//! From singular vectors to differential operators: the inverse symbol map,
//! restriction to the subvariety, an exact infinitesimal equivariance check,
//! and comparison with the closed Rankin–Cohen and Juhl formulas.

mod compare;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::poly::monomials_of_degree;
use crate::algebra::rational::{parse_rat, rat_to_string};
use crate::algebra::{AlgebraError, BigRat, Monomial, Poly, RatFunc, Vars};
use crate::lie::{LieError, RepWeight};
use crate::serial::{self, WeylTermJson};
use crate::solver::{Prepared, SingularVector};
use crate::weyl::{symb_inv, Space, WeylElement, WeylError};

pub use compare::{
    compare_juhl, compare_rankin_cohen, juhl_coefficients, rankin_cohen_coefficients, Comparison,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("operator does not match the setting: {0}")]
    Mismatch(String),
    #[error("no pole-free sample found after {0} attempts; try another seed")]
    NoSample(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed operator file: {0}")]
    Malformed(String),
}

/// A constant-coefficient operator on the `𝔫₋` coordinates followed by the
/// linear restriction `z_i = Σ_a restriction[i][a] w_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffOperator {
    pub setting: String,
    pub params: Vars,
    /// Weight slots fixed to numbers when the operator was built.
    pub weights: BTreeMap<String, BigRat>,
    pub degree: u32,
    pub operator: WeylElement<RatFunc>,
    pub restriction: Vec<Vec<BigRat>>,
    pub target_coords: Vars,
}

/// Step 5: `Symb⁻¹(ψ)` with the setting's restriction attached.
pub fn emit_operator(prep: &Prepared, sv: &SingularVector) -> DiffOperator {
    let lie = &prep.setting.lie;
    let operator = symb_inv(&sv.symbol(&lie.source_space()));
    DiffOperator {
        setting: prep.setting.label.clone(),
        params: prep.setting.params.clone(),
        weights: prep.setting.fixed.clone(),
        degree: sv.degree,
        operator,
        restriction: lie.restriction_map(),
        target_coords: lie.sub_coords().clone(),
    }
}

impl DiffOperator {
    pub fn source_space(&self) -> &Space {
        self.operator.space()
    }

    /// `y=x` style description of the non-identity substitutions.
    pub fn restriction_text(&self) -> String {
        let src = self.source_space().coords();
        let parts: Vec<String> = src
            .iter()
            .zip(&self.restriction)
            .filter_map(|(name, row)| {
                let image = Poly::from_terms(
                    self.target_coords.clone(),
                    row.iter()
                        .enumerate()
                        .map(|(a, c)| (Monomial::var(a, 1), c.clone())),
                );
                let same = self
                    .target_coords
                    .iter()
                    .position(|t| t == name)
                    .is_some_and(|a| {
                        row.iter().enumerate().all(|(b, c)| {
                            *c == if a == b {
                                BigRat::from_integer(1.into())
                            } else {
                                BigRat::from_integer(0.into())
                            }
                        })
                    });
                (!same).then(|| format!("{name}={}", image.render(false)))
            })
            .collect();
        parts.join(", ")
    }

    pub fn render(&self, latex: bool) -> String {
        let r = self.restriction_text();
        if latex {
            let op = self.operator.to_latex();
            if r.is_empty() {
                op
            } else {
                format!(
                    "\\left.\\left({op}\\right)\\right|_{{{}}}",
                    r.replace(", ", ",\\ ")
                )
            }
        } else if r.is_empty() {
            self.operator.to_text()
        } else {
            format!("({}) restricted to {r}", self.operator.to_text())
        }
    }

    pub fn to_json(&self) -> OperatorJson {
        OperatorJson {
            schema_version: serial::SCHEMA_VERSION,
            kind: "diff_operator".into(),
            setting: self.setting.clone(),
            params: self.params.to_vec(),
            weights: self
                .weights
                .iter()
                .map(|(k, v)| (k.clone(), rat_to_string(v)))
                .collect(),
            degree: self.degree,
            coordinates: self.source_space().coords().to_vec(),
            target_coordinates: self.target_coords.to_vec(),
            restriction: self
                .restriction
                .iter()
                .map(|r| r.iter().map(rat_to_string).collect())
                .collect(),
            operator: serial::weyl_to_json(&self.operator, &self.params),
            text: self.render(false),
            latex: self.render(true),
        }
    }

    pub fn from_json(j: &OperatorJson) -> Result<DiffOperator, VerifyError> {
        if j.schema_version != serial::SCHEMA_VERSION || j.kind != "diff_operator" {
            return Err(VerifyError::Malformed(format!(
                "expected kind diff_operator with schema_version {}",
                serial::SCHEMA_VERSION
            )));
        }
        let params: Vars = j.params.clone().into();
        let space = Space::source(j.coordinates.clone().into());
        let operator = serial::weyl_from_json(space, &params, 1, &j.operator)?;
        let restriction = j
            .restriction
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| parse_rat(c))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if restriction.len() != j.coordinates.len()
            || restriction
                .iter()
                .any(|r| r.len() != j.target_coordinates.len())
        {
            return Err(VerifyError::Malformed(
                "restriction shape does not match the coordinates".into(),
            ));
        }
        let weights = j
            .weights
            .iter()
            .map(|(k, v)| Ok((k.clone(), parse_rat(v)?)))
            .collect::<Result<_, AlgebraError>>()?;
        Ok(DiffOperator {
            setting: j.setting.clone(),
            params,
            weights,
            degree: j.degree,
            operator,
            restriction,
            target_coords: j.target_coordinates.clone().into(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub schema_version: u32,
    pub kind: String,
    pub setting: String,
    pub params: Vec<String>,
    #[serde(default)]
    pub weights: BTreeMap<String, String>,
    pub degree: u32,
    pub coordinates: Vec<String>,
    pub target_coordinates: Vec<String>,
    pub restriction: Vec<Vec<String>>,
    pub operator: Vec<WeylTermJson>,
    #[serde(default)]
    pub text: String,
    #[serde(default)]
    pub latex: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorResidual {
    pub generator: String,
    pub tested: usize,
    pub failures: usize,
    /// First nonzero residual, or `0`.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivarianceReport {
    pub schema_version: u32,
    pub kind: String,
    pub setting: String,
    pub degree: u32,
    pub assignment: BTreeMap<String, String>,
    pub target_weight: BTreeMap<String, String>,
    pub test_degree: u32,
    pub generators: Vec<GeneratorResidual>,
    pub pass: bool,
}

impl EquivarianceReport {
    pub fn failing(&self) -> Vec<&str> {
        self.generators
            .iter()
            .filter(|g| g.failures > 0)
            .map(|g| g.generator.as_str())
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} degree {} at {:?}, test degree {}: {}\n",
            self.setting,
            self.degree,
            self.assignment,
            self.test_degree,
            if self.pass { "pass" } else { "FAIL" }
        );
        for g in &self.generators {
            s.push_str(&format!(
                "  {:>6}: {}/{} nonzero residuals{}\n",
                g.generator,
                g.failures,
                g.tested,
                if g.failures > 0 {
                    format!(", first {}", g.residual)
                } else {
                    String::new()
                }
            ));
        }
        s
    }
}

/// Target character read off the operator's symbol: minus the eigenvalue of
/// the diagonal `𝔩′` directions on its leading monomial.
pub fn derive_target_weight(
    prep: &Prepared,
    op: &DiffOperator,
) -> Result<Vec<(usize, RatFunc)>, VerifyError> {
    let symbol = op.operator.symb()?;
    let Some((lead, _)) = symbol.terms().last() else {
        return Err(VerifyError::Mismatch(
            "the zero operator has no weight".into(),
        ));
    };
    Ok(prep.class_weight(lead))
}

fn specialize_weyl(
    w: &WeylElement<RatFunc>,
    a: &BTreeMap<String, BigRat>,
) -> Result<WeylElement<BigRat>, AlgebraError> {
    w.try_map_coeffs(|c| c.specialize(a))
}

fn check_compatible(prep: &Prepared, op: &DiffOperator) -> Result<(), VerifyError> {
    let lie = &prep.setting.lie;
    if op.source_space().coords() != lie.coords() {
        return Err(VerifyError::Mismatch(format!(
            "operator coordinates [{}] but setting coordinates [{}]",
            op.source_space().coords().join(","),
            lie.coords().join(",")
        )));
    }
    if op.target_coords != *lie.sub_coords() || op.restriction != lie.restriction_map() {
        return Err(VerifyError::Mismatch(
            "restriction differs from the setting's".into(),
        ));
    }
    if op.operator.fiber_dim() != 1 {
        return Err(VerifyError::Unsupported("vector-valued operators".into()));
    }
    Ok(())
}

/// Checks `R(D(dπ_λ(Z)f)) = dπ′_ν(Z)(R(Df))` for every `Z` in the subalgebra
/// basis and every monomial `f` of degree at most `test_degree`, with all
/// parameters specialized by `assignment`.
pub fn verify_equivariance(
    prep: &Prepared,
    op: &DiffOperator,
    assignment: &BTreeMap<String, BigRat>,
    test_degree: u32,
) -> Result<EquivarianceReport, VerifyError> {
    check_compatible(prep, op)?;
    let lie = &prep.setting.lie;
    let sub = lie.subalgebra()?;
    let nu = derive_target_weight(prep, op)?;
    let nu_weight = RepWeight::character(nu.iter().cloned());
    let d = specialize_weyl(&op.operator, assignment)?;
    let coords = lie.coords().clone();
    let target = op.target_coords.clone();
    let tests: Vec<Poly<BigRat>> = (0..=test_degree)
        .flat_map(|k| monomials_of_degree(coords.len(), k))
        .map(|m| Poly::monomial(coords.clone(), m, BigRat::from_integer(1.into())))
        .collect();
    let restrict = |p: &Poly<BigRat>| p.substitute_linear(target.clone(), &op.restriction);
    let restricted_d: Vec<Poly<BigRat>> = tests
        .iter()
        .map(|f| d.apply_scalar(f).map(|g| restrict(&g)))
        .collect::<Result<_, _>>()?;

    let generators = lie
        .sub()
        .par_iter()
        .enumerate()
        .map(|(a, z)| -> Result<GeneratorResidual, VerifyError> {
            let src = specialize_weyl(&lie.dpi(&z.vector, &prep.setting.lambda)?, assignment)?;
            let tgt = specialize_weyl(&sub.dpi(&sub.basis_vector(a), &nu_weight)?, assignment)?;
            let mut failures = 0;
            let mut residual = String::from("0");
            for (f, rdf) in tests.iter().zip(&restricted_d) {
                let lhs = restrict(&d.apply_scalar(&src.apply_scalar(f)?)?);
                let rhs = tgt.apply_scalar(rdf)?;
                let r = &lhs - &rhs;
                if !r.is_zero() {
                    if failures == 0 {
                        residual = format!("{} on {}", r.render(false), f.render(false));
                    }
                    failures += 1;
                }
            }
            Ok(GeneratorResidual {
                generator: z.name.clone(),
                tested: tests.len(),
                failures,
                residual,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let pass = generators.iter().all(|g| g.failures == 0);
    let target_weight = nu
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(a, v)| {
            Ok((
                lie.sub()[*a].name.clone(),
                rat_to_string(&v.specialize(assignment)?),
            ))
        })
        .collect::<Result<_, AlgebraError>>()?;
    Ok(EquivarianceReport {
        schema_version: serial::SCHEMA_VERSION,
        kind: "equivariance_report".into(),
        setting: op.setting.clone(),
        degree: op.degree,
        assignment: assignment
            .iter()
            .map(|(k, v)| (k.clone(), rat_to_string(v)))
            .collect(),
        target_weight,
        test_degree,
        generators,
        pass,
    })
}

/// A random rational in `[-30, 30]` with denominator at most 5.
fn sample_value(rng: &mut ChaCha8Rng) -> BigRat {
    let n: i64 = rng.gen_range(-30..=30);
    let d: i64 = rng.gen_range(1..=5);
    BigRat::new(n.into(), d.into())
}

pub const MAX_ATTEMPTS: usize = 50;

/// Runs [`verify_equivariance`] at `samples` pole-free random specializations,
/// resampling on poles up to [`MAX_ATTEMPTS`] times per sample.
pub fn verify_samples(
    prep: &Prepared,
    op: &DiffOperator,
    samples: usize,
    seed: u64,
    test_degree: u32,
) -> Result<Vec<EquivarianceReport>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = prep.setting.params.clone();
    let mut reports = Vec::new();
    for _ in 0..samples {
        let mut attempt = 0;
        loop {
            attempt += 1;
            let a: BTreeMap<String, BigRat> = params
                .iter()
                .map(|p| (p.clone(), sample_value(&mut rng)))
                .collect();
            match verify_equivariance(prep, op, &a, test_degree) {
                Ok(r) => {
                    reports.push(r);
                    break;
                }
                Err(VerifyError::Algebra(AlgebraError::Pole { .. })) if attempt < MAX_ATTEMPTS => {
                    continue
                }
                Err(VerifyError::Algebra(AlgebraError::Pole { .. })) => {
                    return Err(VerifyError::NoSample(attempt))
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(reports)
}

/// The operator with the coefficient of its `index`-th term (in descending
/// order) increased by one.
pub fn perturb(op: &DiffOperator, index: usize) -> DiffOperator {
    let terms: Vec<_> = op.operator.terms().rev().collect();
    let (key, _) = terms[index];
    let bump = WeylElement::term(
        op.source_space().clone(),
        key.z.clone(),
        key.d.clone(),
        crate::weyl::Fiber::scalar(RatFunc::one()),
    );
    DiffOperator {
        operator: op.operator.checked_add(&bump).expect("same space"),
        ..op.clone()
    }
}

/// True when the perturbation at `index` only rescales the operator.
pub fn perturbation_is_rescale(op: &DiffOperator) -> bool {
    op.operator.len() == 1
}
