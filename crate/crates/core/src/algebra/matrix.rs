//! Dense exact matrices and fraction-free kernel computation.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use num_bigint::BigInt;

use super::poly::{MPoly, Poly, Vars};
use super::ratfunc::RatFunc;
use super::rational::BigRat;
use super::{Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        ExactMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RatFunc::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    /// Parameter list shared by the entries (empty when all are constants).
    pub fn params(&self) -> Option<Vars> {
        self.entries
            .iter()
            .map(|e| e.vars())
            .find(|v| !v.is_empty())
            .cloned()
    }
}

/// Kernel basis together with elimination diagnostics.
#[derive(Clone, Debug)]
pub struct Nullspace {
    pub basis: Vec<Vec<RatFunc>>,
    pub rank: usize,
    /// Last fraction-free pivot: a maximal nonvanishing minor. Where it
    /// vanishes the rank may drop below its generic value.
    pub degeneracy: Option<MPoly>,
}

/// Kernel basis of `m` over the field of rational functions.
///
/// Each vector is polynomial, has coprime polynomial entries with coprime
/// integer coefficients, and its first nonzero entry has positive leading
/// coefficient. Vectors are ordered by their free column.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<RatFunc>> {
    nullspace_detailed(m).basis
}

pub fn nullspace_detailed(m: &ExactMatrix) -> Nullspace {
    let vars: Vars = m.params().unwrap_or_else(super::poly::no_vars);
    let cols = m.cols;

    let mut work: Vec<Vec<MPoly>> = (0..m.rows)
        .filter_map(|i| clear_row(m.row(i), &vars))
        .collect();

    // Bareiss forward elimination with degree-minimal pivoting.
    let mut pivot_cols = Vec::new();
    let mut prev = Poly::one(vars.clone());
    let mut r = 0;
    for c in 0..cols {
        if r == work.len() {
            break;
        }
        let best = (r..work.len())
            .filter(|&i| !work[i][c].is_zero())
            .min_by_key(|&i| (work[i][c].total_degree().unwrap_or(0), work[i][c].len(), i));
        let Some(best) = best else { continue };
        work.swap(r, best);
        let (head, tail) = work.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let p = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let mut v = &p.clone() * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&factor * &pivot_row[j]);
                }
                row[j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            row[c] = Poly::zero(vars.clone());
        }
        prev = work[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    let rank = pivot_cols.len();

    let lift = |p: &MPoly| RatFunc::from_poly(p.clone());
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![RatFunc::zero(); cols];
        x[f] = RatFunc::one();
        for (row, &pc) in pivot_cols.iter().enumerate().rev() {
            let mut s = RatFunc::zero();
            for j in pc + 1..cols {
                if !work[row][j].is_zero() && !x[j].is_zero() {
                    s = s.add_ref(&lift(&work[row][j]).mul_ref(&x[j]));
                }
            }
            x[pc] = s
                .neg_ref()
                .div_ref(&lift(&work[row][pc]))
                .expect("nonzero pivot");
        }
        basis.push(normalize_vector(&x, &vars));
    }

    for v in &basis {
        assert!(
            m.mul_vec(v).iter().all(Zero::is_zero),
            "kernel vector does not annihilate the matrix"
        );
    }
    assert_eq!(
        rank + basis.len(),
        cols,
        "rank + nullity must equal the column count"
    );

    let degeneracy = if rank > 0 && !prev.is_constant() {
        Some(prev.integer_content().1)
    } else {
        None
    };
    Nullspace {
        basis,
        rank,
        degeneracy,
    }
}

fn lcm_poly(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() {
        return b.clone();
    }
    if b.is_constant() {
        return a.clone();
    }
    let g = a.gcd(b);
    (a * b).exact_div(&g).expect("gcd divides product").monic()
}

/// Multiplies a row through by the lcm of its denominators. `None` for a zero row.
fn clear_row(row: &[RatFunc], vars: &Vars) -> Option<Vec<MPoly>> {
    if row.iter().all(Zero::is_zero) {
        return None;
    }
    let l = row
        .iter()
        .filter(|e| !e.is_zero())
        .fold(Poly::one(vars.clone()), |acc, e| lcm_poly(&acc, e.denom()));
    Some(
        row.iter()
            .map(|e| {
                if e.is_zero() {
                    Poly::zero(vars.clone())
                } else {
                    let scale = l
                        .exact_div(e.denom())
                        .expect("lcm divisible by denominator");
                    (&e.numer().with_vars_lenient(vars) * &scale).with_vars_lenient(vars)
                }
            })
            .collect(),
    )
}

/// Clears denominators, removes the polynomial gcd and the rational content,
/// and fixes the sign of the first nonzero entry.
pub fn normalize_vector(v: &[RatFunc], vars: &Vars) -> Vec<RatFunc> {
    let l = v
        .iter()
        .filter(|e| !e.is_zero())
        .fold(Poly::one(vars.clone()), |acc, e| lcm_poly(&acc, e.denom()));
    let polys: Vec<MPoly> = v
        .iter()
        .map(|e| {
            if e.is_zero() {
                Poly::zero(vars.clone())
            } else {
                &e.numer().with_vars_lenient(vars) * &l.exact_div(e.denom()).expect("lcm divisible")
            }
        })
        .collect();
    let g = polys
        .iter()
        .fold(Poly::zero(vars.clone()), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return v.to_vec();
    }
    let polys: Vec<MPoly> = polys
        .iter()
        .map(|p| p.exact_div(&g).expect("gcd divides entries"))
        .collect();
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in polys.iter().flat_map(|p| p.terms().map(|(_, c)| c)) {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut scale = BigRat::new(den_lcm, num_gcd);
    if let Some(first) = polys.iter().find(|p| !p.is_zero()) {
        if first.leading_coeff().is_negative() {
            scale = -scale;
        }
    }
    polys
        .into_iter()
        .map(|p| RatFunc::from_poly(p.scale(&scale)))
        .collect()
}

impl MPoly {
    /// Adopts `vars` when this polynomial has no variables of its own.
    pub(crate) fn with_vars_lenient(&self, vars: &Vars) -> MPoly {
        if self.vars().is_empty() && !vars.is_empty() {
            self.with_vars(vars.clone())
        } else {
            self.clone()
        }
    }
}

/// Solves `sum_k x_k columns[k] = target` over the rationals; `None` when
/// the target is outside the span or the columns are dependent.
pub fn solve_rational(columns: &[Vec<BigRat>], target: &[BigRat]) -> Option<Vec<BigRat>> {
    let n = columns.len();
    let m = target.len();
    let mut a: Vec<Vec<BigRat>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRat> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let p = (r..m).find(|&i| !Zero::is_zero(&a[i][c]))?;
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in &mut a[r][c..=n] {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !Zero::is_zero(&row[c]) {
                let f = row[c].clone();
                for (x, y) in row[c..=n].iter_mut().zip(&pivot_row[c..=n]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !Zero::is_zero(&row[n])) {
        return None;
    }
    Some((0..n).map(|c| a[c][n].clone()).collect())
}
