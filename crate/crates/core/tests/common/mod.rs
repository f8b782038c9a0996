#![allow(dead_code)]

use fmethod::algebra::poly::vars;
use fmethod::algebra::{BigRat, Monomial};
use fmethod::lie::GradedLie;
use fmethod::weyl::{Fiber, Space, WeylElement, WeylKey};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

pub fn random_rat(rng: &mut ChaCha8Rng) -> BigRat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

/// `a + b t` with `t² = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual {
    pub a: BigRat,
    pub b: BigRat,
}

impl Dual {
    pub fn new(a: BigRat, b: BigRat) -> Self {
        Dual { a, b }
    }

    pub fn zero() -> Self {
        Dual::new(BigRat::zero(), BigRat::zero())
    }

    pub fn one() -> Self {
        Dual::new(BigRat::one(), BigRat::zero())
    }

    pub fn add(&self, o: &Dual) -> Dual {
        Dual::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Dual) -> Dual {
        Dual::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn mul(&self, o: &Dual) -> Dual {
        Dual::new(&self.a * &o.a, &self.a * &o.b + &self.b * &o.a)
    }

    pub fn inv(&self) -> Option<Dual> {
        if self.a.is_zero() {
            return None;
        }
        let ia = self.a.recip();
        Some(Dual::new(ia.clone(), -(&self.b * &ia * &ia)))
    }
}

pub type Mat = Vec<Vec<BigRat>>;
pub type DMat = Vec<Vec<Dual>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRat::one()
                    } else {
                        BigRat::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRat::zero(), |s, k| s + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Mat, c: &BigRat) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| x * c).collect())
        .collect()
}

/// `exp(X)` for nilpotent `X`.
pub fn exp_nilpotent(x: &Mat) -> Mat {
    let n = x.len();
    let mut out = identity(n);
    let mut power = identity(n);
    for k in 1..=n {
        power = mat_scale(&mat_mul(&power, x), &rat(1, k as i64));
        out = mat_add(&out, &power);
    }
    out
}

fn dmat_mul(a: &DMat, b: &DMat) -> DMat {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).fold(Dual::zero(), |s, k| s.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn dmat_inv(a: &DMat) -> Option<DMat> {
    let n = a.len();
    let mut m: DMat = a.clone();
    let mut inv: DMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Dual::one() } else { Dual::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].a.is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let ip = m[c][c].inv()?;
        for j in 0..n {
            m[c][j] = m[c][j].mul(&ip);
            inv[c][j] = inv[c][j].mul(&ip);
        }
        for r in 0..n {
            if r != c && !(m[r][c].a.is_zero() && m[r][c].b.is_zero()) {
                let f = m[r][c].clone();
                for j in 0..n {
                    m[r][j] = m[r][j].sub(&f.mul(&m[c][j]));
                    inv[r][j] = inv[r][j].sub(&f.mul(&inv[c][j]));
                }
            }
        }
    }
    Some(inv)
}

fn sub_block(m: &DMat, rows: &std::ops::Range<usize>, cols: &std::ops::Range<usize>) -> DMat {
    rows.clone()
        .map(|i| cols.clone().map(|j| m[i][j].clone()).collect())
        .collect()
}

/// Block factorization `m = L D U` with `L` unit lower and `U` unit upper
/// block-triangular and `D` block-diagonal.
pub fn block_ldu(m: &DMat, blocks: &[usize]) -> Option<(DMat, DMat, DMat)> {
    let n = m.len();
    let mut ranges = Vec::new();
    let mut s = 0;
    for b in blocks {
        ranges.push(s..s + b);
        s += b;
    }
    let eye = || -> DMat {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Dual::one() } else { Dual::zero() })
                    .collect()
            })
            .collect()
    };
    let (mut l, mut u) = (eye(), eye());
    let mut d: DMat = vec![vec![Dual::zero(); n]; n];
    let mut w = m.clone();
    for (k, rk) in ranges.iter().enumerate() {
        let dkk = sub_block(&w, rk, rk);
        let inv = dmat_inv(&dkk)?;
        for (a, i) in rk.clone().enumerate() {
            for (b, j) in rk.clone().enumerate() {
                d[i][j] = dkk[a][b].clone();
            }
        }
        for ri in &ranges[k + 1..] {
            let lik = dmat_mul(&sub_block(&w, ri, rk), &inv);
            let ukj = dmat_mul(&inv, &sub_block(&w, rk, ri));
            for (a, i) in ri.clone().enumerate() {
                for (b, j) in rk.clone().enumerate() {
                    l[i][j] = lik[a][b].clone();
                    u[j][i] = ukj[b][a].clone();
                }
            }
        }
        for ri in &ranges[k + 1..] {
            for rj in &ranges[k + 1..] {
                let lik = sub_block(&l, ri, rk);
                let corr = dmat_mul(&dmat_mul(&lik, &dkk), &sub_block(&u, rk, rj));
                for (a, i) in ri.clone().enumerate() {
                    for (b, j) in rj.clone().enumerate() {
                        w[i][j] = w[i][j].sub(&corr[a][b]);
                    }
                }
            }
        }
    }
    Some((l, d, u))
}

/// `α(Y, X)` and `β(Y, X)` as matrices, read off the factorization of
/// `(I + tY) exp(X) = exp(X + tβ) (I + tα) (I + t·u)`.
pub fn oracle_alpha_beta(lie: &GradedLie, y: &[BigRat], z: &[BigRat]) -> Option<(Mat, Mat)> {
    let real = lie.realization()?;
    let n = real.matrices[0].len();
    let combo = |coeffs: &mut dyn Iterator<Item = (usize, BigRat)>| -> Mat {
        let mut out = vec![vec![BigRat::zero(); n]; n];
        for (k, c) in coeffs {
            out = mat_add(&out, &mat_scale(&real.matrices[k], &c));
        }
        out
    };
    let minus = lie.indices(-1);
    let x = combo(&mut minus.iter().copied().zip(z.iter().cloned()));
    let ymat = combo(&mut y.iter().cloned().enumerate());
    let ex = exp_nilpotent(&x);
    let yex = mat_mul(&ymat, &ex);
    let g: DMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Dual::new(ex[i][j].clone(), yex[i][j].clone()))
                .collect()
        })
        .collect();
    let (l, d, _) = block_ldu(&g, &real.blocks)?;
    let alpha: Mat = d
        .iter()
        .map(|r| r.iter().map(|e| e.b.clone()).collect())
        .collect();
    let l1: Mat = l
        .iter()
        .map(|r| r.iter().map(|e| e.b.clone()).collect())
        .collect();
    let beta = mat_mul(&exp_nilpotent(&mat_scale(&x, &rat(-1, 1))), &l1);
    Some((alpha, beta))
}

/// The same two matrices from the closed bracket formulas.
pub fn closed_alpha_beta(lie: &GradedLie, y: &[BigRat], z: &[BigRat]) -> (Mat, Mat) {
    let real = lie.realization().expect("realization");
    let n = real.matrices[0].len();
    let mut alpha = vec![vec![BigRat::zero(); n]; n];
    for (k, p) in lie.alpha(y).unwrap().iter().enumerate() {
        alpha = mat_add(&alpha, &mat_scale(&real.matrices[k], &p.eval(z)));
    }
    let mut beta = vec![vec![BigRat::zero(); n]; n];
    for (k, p) in lie.indices(-1).into_iter().zip(lie.beta(y).unwrap()) {
        beta = mat_add(&beta, &mat_scale(&real.matrices[k], &p.eval(z)));
    }
    (alpha, beta)
}

/// A random element with at most `terms` terms, `nvars` variables, and
/// total degree (in `z` and `∂` together) at most `degree`.
pub fn random_weyl(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    degree: u32,
    terms: usize,
) -> WeylElement<BigRat> {
    let space = Space::source(vars((1..=nvars).map(|i| format!("z{i}"))));
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let mut z = vec![0u32; nvars];
        let mut d = vec![0u32; nvars];
        let mut left = rng.gen_range(0..=degree);
        while left > 0 {
            let i = rng.gen_range(0..nvars);
            if rng.gen_bool(0.5) {
                z[i] += 1;
            } else {
                d[i] += 1;
            }
            left -= 1;
        }
        let key = WeylKey {
            z: Monomial::new(z),
            d: Monomial::new(d),
        };
        out.push((key, Fiber::scalar(random_rat(rng))));
    }
    WeylElement::from_terms(space, 1, out)
}

/// `z ↦ -z`, `∂ ↦ -∂`.
pub fn negate_generators(a: &WeylElement<BigRat>) -> WeylElement<BigRat> {
    WeylElement::from_terms(
        a.space().clone(),
        1,
        a.terms().map(|(k, f)| {
            let odd = (k.z.degree() + k.d.degree()) % 2 == 1;
            (k.clone(), if odd { f.neg() } else { f.clone() })
        }),
    )
}
