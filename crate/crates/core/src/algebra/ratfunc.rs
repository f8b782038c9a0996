//! Rational functions in the spectral parameters.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};

use super::poly::{no_vars, MPoly, Monomial, Poly, Vars};
use super::rational::BigRat;
use super::{AlgebraError, Field, Ring};

/// `num / den` with `gcd(num, den) = 1` and `den` monic in graded-lex order.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let vars = p.vars().clone();
        RatFunc {
            num: p,
            den: Poly::one(vars),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(no_vars(), c))
    }

    /// The parameter `vars[i]` itself.
    pub fn param(vars: Vars, i: usize) -> Self {
        Self::from_poly(Poly::var(vars, i))
    }

    fn normalize(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            let vars = den.vars().clone();
            return RatFunc {
                num: Poly::zero(vars.clone()),
                den: Poly::one(vars),
            };
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        if self.num.vars().is_empty() {
            self.den.vars()
        } else {
            self.num.vars()
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value when the function does not depend on any parameter.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    /// Exact evaluation at rational parameter values.
    pub fn specialize(
        &self,
        assignment: &BTreeMap<String, BigRat>,
    ) -> Result<BigRat, AlgebraError> {
        let vars = self.vars().clone();
        let point = vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| AlgebraError::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let eval = |p: &MPoly| -> BigRat {
            if p.vars().is_empty() {
                p.constant_term()
            } else {
                p.with_vars(vars.clone()).eval(&point)
            }
        };
        let d = eval(&self.den);
        if d.is_zero() {
            let assignment = vars
                .iter()
                .zip(&point)
                .map(|(v, x)| format!("{v}={}", Ring::to_text(x)))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(AlgebraError::Pole { assignment });
        }
        Ok(eval(&self.num) / d)
    }

    /// Substitutes rational values for some parameters and keeps the rest
    /// symbolic over `remaining`.
    pub fn partial_specialize(
        &self,
        assignment: &BTreeMap<String, BigRat>,
        remaining: &Vars,
    ) -> Result<RatFunc, AlgebraError> {
        let map = |p: &MPoly| -> MPoly {
            let mut out = Poly::zero(remaining.clone());
            for (m, c) in p.terms() {
                let mut coeff = c.clone();
                let mut exps = vec![0u32; remaining.len()];
                for (i, name) in p.vars().iter().enumerate() {
                    let e = m.get(i);
                    if e == 0 {
                        continue;
                    }
                    if let Some(x) = assignment.get(name) {
                        for _ in 0..e {
                            coeff *= x;
                        }
                    } else {
                        let j = remaining
                            .iter()
                            .position(|r| r == name)
                            .expect("unassigned parameter must stay symbolic");
                        exps[j] = e;
                    }
                }
                out.add_term(Monomial::new(exps), &coeff);
            }
            out
        };
        let den = map(&self.den);
        if den.is_zero() {
            return Err(AlgebraError::Pole {
                assignment: assignment
                    .iter()
                    .map(|(k, v)| format!("{k}={}", Ring::to_text(v)))
                    .collect::<Vec<_>>()
                    .join(", "),
            });
        }
        Ok(Self::normalize(map(&self.num), den))
    }

    /// Re-expresses over a variable list that contains all current parameters.
    pub fn lift(&self, vars: &Vars) -> RatFunc {
        let empty = BTreeMap::new();
        self.partial_specialize(&empty, vars)
            .expect("lifting cannot create poles")
    }
}

impl Ring for RatFunc {
    fn add_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return Self::normalize(&self.num + &other.num, self.den.clone());
        }
        if self.den.is_constant() && other.den.is_constant() {
            let a = self.num.scale(&other.den.constant_term());
            let b = other.num.scale(&self.den.constant_term());
            let d = self.den.scale(&other.den.constant_term());
            return Self::normalize(&a + &b, d);
        }
        let g = self.den.gcd(&other.den);
        let sd = self.den.exact_div(&g).expect("gcd divides");
        let od = other.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &od) + &(&other.num * &sd);
        Self::normalize(num, &self.den * &od)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_constant() && other.den.is_constant() {
            return Self::normalize(&self.num * &other.num, &self.den * &other.den);
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
    fn neg_ref(&self) -> Self {
        RatFunc {
            num: self.num.neg_poly(),
            den: self.den.clone(),
        }
    }
    fn from_rat(r: &BigRat) -> Self {
        RatFunc::constant(r.clone())
    }
    fn to_text(&self) -> String {
        if self.den.is_constant() {
            self.num.render(false)
        } else {
            let wrap = |p: &MPoly| {
                if p.len() > 1 || p.leading_coeff().is_negative() {
                    format!("({})", p.render(false))
                } else {
                    p.render(false)
                }
            };
            format!("{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
    fn to_latex(&self) -> String {
        if self.den.is_constant() {
            self.num.render(true)
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.render(true),
                self.den.render(true)
            )
        }
    }
    fn is_compound(&self) -> bool {
        self.num.len() > 1
            || (!self.den.is_constant() && self.num.len() == 1 && !self.num.is_constant())
    }
    fn has_minus_sign(&self) -> bool {
        self.num.len() == 1 && self.num.leading_coeff().is_negative()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(BigRat::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::constant(BigRat::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_constant()
            && self.den.is_constant()
            && self.num.constant_term() == self.den.constant_term()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalize(self.den.clone(), self.num.clone()))
        }
    }
}

/// Evaluates `f` at the assignment.
pub fn specialize(
    f: &RatFunc,
    assignment: &BTreeMap<String, BigRat>,
) -> Result<BigRat, AlgebraError> {
    f.specialize(assignment)
}
