//! JSON shapes shared by every artifact. Rationals are `"p/q"` strings,
//! polynomials are term lists, and variable names are carried once at the
//! artifact level rather than inside every value.

use serde::{Deserialize, Serialize};

use crate::algebra::poly::Monomial;
use crate::algebra::rational::{parse_rat, rat_to_string};
use crate::algebra::{AlgebraError, BigRat, MPoly, Poly, RatFunc, Vars};
use crate::weyl::{Fiber, Space, WeylElement, WeylKey};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

pub type MPolyJson = Vec<TermJson>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: MPolyJson,
    pub den: MPolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatTermJson {
    pub exponents: Vec<u32>,
    pub coeff: RatFuncJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylTermJson {
    pub z_exp: Vec<u32>,
    pub d_exp: Vec<u32>,
    pub coeff_matrix: Vec<Vec<RatFuncJson>>,
}

fn malformed(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Malformed(msg.into())
}

fn mono_from(exps: &[u32], n: usize) -> Result<Monomial, AlgebraError> {
    if exps.len() != n {
        return Err(malformed(format!(
            "exponent vector of length {} for {n} variables",
            exps.len()
        )));
    }
    Ok(Monomial::new(exps.to_vec()))
}

/// Terms in descending graded-lex order.
pub fn mpoly_to_json(p: &MPoly, n: usize) -> MPolyJson {
    p.terms()
        .rev()
        .map(|(m, c)| TermJson {
            exponents: m.exponents(n),
            coeff: rat_to_string(c),
        })
        .collect()
}

pub fn mpoly_from_json(vars: &Vars, j: &MPolyJson) -> Result<MPoly, AlgebraError> {
    let mut out = MPoly::zero(vars.clone());
    for t in j {
        let m = mono_from(&t.exponents, vars.len())?;
        out = &out + &MPoly::monomial(vars.clone(), m, parse_rat(&t.coeff)?);
    }
    Ok(out)
}

pub fn ratfunc_to_json(f: &RatFunc, params: &Vars) -> RatFuncJson {
    let f = f.lift(params);
    RatFuncJson {
        num: mpoly_to_json(f.numer(), params.len()),
        den: mpoly_to_json(f.denom(), params.len()),
    }
}

pub fn ratfunc_from_json(params: &Vars, j: &RatFuncJson) -> Result<RatFunc, AlgebraError> {
    let num = mpoly_from_json(params, &j.num)?;
    let den = mpoly_from_json(params, &j.den)?;
    RatFunc::new(num, den).ok_or_else(|| malformed("zero denominator"))
}

pub fn rat_poly_to_json(p: &Poly<RatFunc>, params: &Vars) -> Vec<RatTermJson> {
    let n = p.nvars();
    p.terms()
        .rev()
        .map(|(m, c)| RatTermJson {
            exponents: m.exponents(n),
            coeff: ratfunc_to_json(c, params),
        })
        .collect()
}

pub fn rat_poly_from_json(
    vars: &Vars,
    params: &Vars,
    j: &[RatTermJson],
) -> Result<Poly<RatFunc>, AlgebraError> {
    let mut terms = Vec::new();
    for t in j {
        terms.push((
            mono_from(&t.exponents, vars.len())?,
            ratfunc_from_json(params, &t.coeff)?,
        ));
    }
    Ok(Poly::from_terms(vars.clone(), terms))
}

/// Terms in descending normal-order key order.
pub fn weyl_to_json(w: &WeylElement<RatFunc>, params: &Vars) -> Vec<WeylTermJson> {
    let n = w.space().dim();
    w.terms()
        .rev()
        .map(|(k, f)| WeylTermJson {
            z_exp: k.z.exponents(n),
            d_exp: k.d.exponents(n),
            coeff_matrix: f
                .rows()
                .iter()
                .map(|r| r.iter().map(|c| ratfunc_to_json(c, params)).collect())
                .collect(),
        })
        .collect()
}

pub fn weyl_from_json(
    space: Space,
    params: &Vars,
    dim: usize,
    j: &[WeylTermJson],
) -> Result<WeylElement<RatFunc>, AlgebraError> {
    let n = space.dim();
    let mut terms = Vec::new();
    for t in j {
        if t.coeff_matrix.len() != dim || t.coeff_matrix.iter().any(|r| r.len() != dim) {
            return Err(malformed(format!("coefficient matrix must be {dim}x{dim}")));
        }
        let rows = t
            .coeff_matrix
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| ratfunc_from_json(params, c))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        terms.push((
            WeylKey {
                z: mono_from(&t.z_exp, n)?,
                d: mono_from(&t.d_exp, n)?,
            },
            Fiber::from_rows(rows),
        ));
    }
    Ok(WeylElement::from_terms(space, dim, terms))
}

pub fn rat_json(r: &BigRat) -> String {
    rat_to_string(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::vars;
    use crate::algebra::rational::rat;
    use crate::algebra::Ring;
    use crate::weyl::parse::parse_weyl;

    #[test]
    fn mpoly_round_trip() {
        let v = vars(["x", "y"]);
        let p = MPoly::from_terms(
            v.clone(),
            [
                (Monomial::new(vec![2, 1]), rat(-3, 4)),
                (Monomial::new(vec![0, 0]), rat(5, 1)),
            ],
        );
        let j = mpoly_to_json(&p, 2);
        assert_eq!(j[0].exponents, vec![2, 1]);
        assert_eq!(j[0].coeff, "-3/4");
        assert_eq!(j[1].coeff, "5/1");
        assert_eq!(mpoly_from_json(&v, &j).unwrap(), p);
        assert!(mpoly_from_json(
            &v,
            &vec![TermJson {
                exponents: vec![1],
                coeff: "1".into()
            }]
        )
        .is_err());
    }

    #[test]
    fn ratfunc_and_weyl_round_trip() {
        let params = vars(["k1", "k2"]);
        let a = RatFunc::param(params.clone(), 0);
        let b = RatFunc::param(params.clone(), 1);
        let f = RatFunc::new(
            a.numer() * b.numer(),
            &(a.numer() + b.numer()) + &MPoly::one(params.clone()),
        )
        .unwrap();
        let j = ratfunc_to_json(&f, &params);
        assert_eq!(ratfunc_from_json(&params, &j).unwrap(), f);
        let w = parse_weyl("z1^2*d2 - 3/5*d1 + z2")
            .unwrap()
            .map_coeffs(|c| RatFunc::constant(c.clone()).mul_ref(&f));
        let text = serde_json::to_string(&weyl_to_json(&w, &params)).unwrap();
        let back: Vec<WeylTermJson> = serde_json::from_str(&text).unwrap();
        assert_eq!(
            weyl_from_json(w.space().clone(), &params, 1, &back).unwrap(),
            w
        );
    }
}
