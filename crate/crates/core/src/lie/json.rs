//! JSON description of a graded Lie algebra:
//! `{basis:[{name, grade, in_subalgebra}], brackets:[{i, j, coeffs:{k: "p/q"}}]}`
//! with optional `subalgebra_basis`, `coordinates` and `sub_coordinates`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{BasisElement, GradedLie, LieData, LieError};
use crate::algebra::rational::{parse_rat, rat_to_string};
use crate::algebra::BigRat;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisJson {
    pub name: String,
    pub grade: i8,
    #[serde(default)]
    pub in_subalgebra: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

/// A subalgebra element that is not a single ambient basis vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubJson {
    pub name: String,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieJson {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    #[serde(default)]
    pub name: String,
    pub basis: Vec<BasisJson>,
    pub brackets: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra_basis: Option<Vec<SubJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub_coordinates: Option<Vec<String>>,
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

fn bad(msg: String) -> LieError {
    LieError::Malformed(msg)
}

fn sparse_to_json(v: impl IntoIterator<Item = (usize, BigRat)>) -> BTreeMap<String, String> {
    v.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.to_string(), rat_to_string(&c)))
        .collect()
}

fn sparse_from_json(m: &BTreeMap<String, String>) -> Result<Vec<(usize, BigRat)>, LieError> {
    m.iter()
        .map(|(k, c)| {
            let k: usize = k
                .parse()
                .map_err(|_| bad(format!("basis index `{k}` is not a number")))?;
            let c = parse_rat(c).map_err(|e| bad(e.to_string()))?;
            Ok((k, c))
        })
        .collect()
}

impl GradedLie {
    pub fn to_json(&self) -> LieJson {
        let dim = self.dim();
        let unit_subs: Option<Vec<usize>> = self
            .sub
            .iter()
            .map(|s| {
                let nz: Vec<usize> = (0..dim).filter(|&k| !s.vector[k].is_zero()).collect();
                (nz.len() == 1
                    && s.vector[nz[0]] == BigRat::from_integer(1.into())
                    && s.name == self.basis[nz[0]].name)
                    .then_some(nz[0])
            })
            .collect();
        let in_sub = |i: usize| unit_subs.as_ref().is_some_and(|u| u.contains(&i));
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                if !self.table[i][j].is_empty() {
                    brackets.push(BracketJson {
                        i,
                        j,
                        coeffs: sparse_to_json(self.table[i][j].iter().cloned()),
                    });
                }
            }
        }
        LieJson {
            schema_version: SCHEMA_VERSION,
            name: self.name.clone(),
            basis: self
                .basis
                .iter()
                .enumerate()
                .map(|(i, b)| BasisJson {
                    name: b.name.clone(),
                    grade: b.grade,
                    in_subalgebra: in_sub(i),
                })
                .collect(),
            brackets,
            subalgebra_basis: unit_subs.is_none().then(|| {
                self.sub
                    .iter()
                    .map(|s| SubJson {
                        name: s.name.clone(),
                        coeffs: sparse_to_json(s.vector.iter().cloned().enumerate()),
                    })
                    .collect()
            }),
            coordinates: Some(self.coords.to_vec()),
            sub_coordinates: Some(self.sub_coords.to_vec()),
        }
    }

    pub fn from_json(j: &LieJson) -> Result<Self, LieError> {
        if j.schema_version != SCHEMA_VERSION {
            return Err(bad(format!(
                "unsupported schema_version {}",
                j.schema_version
            )));
        }
        let dim = j.basis.len();
        let basis: Vec<BasisElement> = j
            .basis
            .iter()
            .map(|b| BasisElement {
                name: b.name.clone(),
                grade: b.grade,
            })
            .collect();
        let mut brackets = BTreeMap::new();
        for b in &j.brackets {
            if brackets
                .insert((b.i, b.j), sparse_from_json(&b.coeffs)?)
                .is_some()
            {
                return Err(bad(format!("bracket [{}, {}] listed twice", b.i, b.j)));
            }
        }
        let sub = match &j.subalgebra_basis {
            Some(list) => {
                if j.basis.iter().any(|b| b.in_subalgebra) {
                    return Err(bad(
                        "give either in_subalgebra flags or subalgebra_basis, not both".into(),
                    ));
                }
                list.iter()
                    .map(|s| {
                        let mut v = vec![BigRat::zero(); dim];
                        for (k, c) in sparse_from_json(&s.coeffs)? {
                            *v.get_mut(k).ok_or_else(|| {
                                bad(format!("index {k} out of range in `{}`", s.name))
                            })? += c;
                        }
                        Ok((s.name.clone(), v))
                    })
                    .collect::<Result<Vec<_>, LieError>>()?
            }
            None => (0..dim)
                .filter(|&i| j.basis[i].in_subalgebra)
                .map(|i| {
                    let mut v = vec![BigRat::zero(); dim];
                    v[i] = BigRat::from_integer(1.into());
                    (j.basis[i].name.clone(), v)
                })
                .collect(),
        };
        GradedLie::new(LieData {
            name: j.name.clone(),
            basis,
            brackets,
            sub,
            coords: j.coordinates.clone(),
            sub_coords: j.sub_coordinates.clone(),
            realization: None,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, LieError> {
        let j: LieJson = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
        Self::from_json(&j)
    }

    /// Equal up to the oracle-only matrix realization.
    pub fn same_structure(&self, other: &GradedLie) -> bool {
        self.name == other.name
            && self.basis == other.basis
            && self.table == other.table
            && self.sub == other.sub
            && self.coords == other.coords
            && self.sub_coords == other.sub_coords
    }
}
