//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{AlgebraError, Field, Ring};

pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Serialized form: always `p/q`, denominator positive.
pub fn rat_to_string(r: &BigRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p`, `-p`, `p/q`. Zero denominators are rejected.
pub fn parse_rat(s: &str) -> Result<BigRat, AlgebraError> {
    let err = || AlgebraError::ParseRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRat::new(n, d))
}

fn display(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Ring for BigRat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn to_text(&self) -> String {
        display(self)
    }
    fn to_latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else if Signed::is_negative(self) {
            format!("-\\frac{{{}}}{{{}}}", -self.numer(), self.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn has_minus_sign(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Field for BigRat {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
