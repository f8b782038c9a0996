use num_traits::{One, Zero};

use super::{BasisElement, GradedLie, LieError, Realization};
use crate::algebra::poly::Monomial;
use crate::algebra::{BigRat, MPoly};

pub const SETTING_NAMES: [&str; 2] = ["rankin_cohen", "juhl"];

/// A built-in setting: the algebra, the Levi directions carrying the
/// parameters of `λ`, and optional invariant generators in the dual
/// coordinates used to shrink the ansatz.
#[derive(Clone, Debug)]
pub struct BuiltinSetting {
    pub name: String,
    pub n: Option<usize>,
    pub lie: GradedLie,
    pub lambda_slots: Vec<(String, usize)>,
    pub invariants: Option<Vec<MPoly>>,
}

fn e(size: usize, i: usize, j: usize) -> Vec<Vec<BigRat>> {
    let mut m = vec![vec![BigRat::zero(); size]; size];
    m[i][j] = BigRat::one();
    m
}

fn combine(a: &[Vec<BigRat>], sa: i64, b: &[Vec<BigRat>], sb: i64) -> Vec<Vec<BigRat>> {
    a.iter()
        .zip(b)
        .map(|(r, s)| {
            r.iter()
                .zip(s)
                .map(|(x, y)| {
                    x * BigRat::from_integer(sa.into()) + y * BigRat::from_integer(sb.into())
                })
                .collect()
        })
        .collect()
}

fn elem(name: &str, grade: i8) -> BasisElement {
    BasisElement {
        name: name.to_string(),
        grade,
    }
}

fn indicator(dim: usize, picks: &[(usize, i64)]) -> Vec<BigRat> {
    let mut v = vec![BigRat::zero(); dim];
    for (k, c) in picks {
        v[*k] = BigRat::from_integer((*c).into());
    }
    v
}

/// `sl2 ⊕ sl2` with the diagonal `sl2`, realized on `ℂ² ⊕ ℂ²` in the vector
/// order `(v1, v3, v2, v4)` so that the parabolic is block upper triangular.
fn rankin_cohen() -> Result<BuiltinSetting, LieError> {
    let basis = vec![
        elem("e1", 1),
        elem("e2", 1),
        elem("h1", 0),
        elem("h2", 0),
        elem("f1", -1),
        elem("f2", -1),
    ];
    let matrices = vec![
        e(4, 0, 2),
        e(4, 1, 3),
        combine(&e(4, 0, 0), 1, &e(4, 2, 2), -1),
        combine(&e(4, 1, 1), 1, &e(4, 3, 3), -1),
        e(4, 2, 0),
        e(4, 3, 1),
    ];
    let sub = vec![
        ("e".to_string(), indicator(6, &[(0, 1), (1, 1)])),
        ("h".to_string(), indicator(6, &[(2, 1), (3, 1)])),
        ("f".to_string(), indicator(6, &[(4, 1), (5, 1)])),
    ];
    let lie = GradedLie::from_realization(
        "rankin_cohen",
        basis,
        Realization {
            matrices,
            blocks: vec![2, 2],
        },
        sub,
        vec!["x".into(), "y".into()],
        vec!["x".into()],
    )?;
    Ok(BuiltinSetting {
        name: "rankin_cohen".into(),
        n: None,
        lie,
        lambda_slots: vec![("k1".into(), 2), ("k2".into(), 3)],
        invariants: None,
    })
}

fn rot_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("M{i}{j}")
    } else {
        format!("M{i}_{j}")
    }
}

/// The conformal algebra `so(n+2)` on `(e0, e1..en, e∞)` preserving the form
/// with `⟨e0, e∞⟩ = 1`, `⟨ei, ei⟩ = 1`; the subalgebra fixes `en`.
fn juhl(n: usize) -> Result<BuiltinSetting, LieError> {
    if n < 2 {
        return Err(LieError::SizeOutOfRange {
            name: "juhl".into(),
            n,
            min: 2,
        });
    }
    let size = n + 2;
    let inf = n + 1;
    let mut basis = Vec::new();
    let mut matrices = Vec::new();
    let mut in_sub = Vec::new();
    for i in 1..=n {
        basis.push(elem(&format!("K{i}"), 1));
        matrices.push(combine(&e(size, 0, i), 1, &e(size, i, inf), -1));
        in_sub.push(i < n);
    }
    basis.push(elem("D", 0));
    matrices.push(combine(&e(size, 0, 0), 1, &e(size, inf, inf), -1));
    in_sub.push(true);
    let d_index = n;
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(elem(&rot_name(n, i, j), 0));
            matrices.push(combine(&e(size, i, j), 1, &e(size, j, i), -1));
            in_sub.push(j < n);
        }
    }
    for i in 1..=n {
        basis.push(elem(&format!("P{i}"), -1));
        matrices.push(combine(&e(size, i, 0), 1, &e(size, inf, i), -1));
        in_sub.push(i < n);
    }
    let dim = basis.len();
    let sub = (0..dim)
        .filter(|&k| in_sub[k])
        .map(|k| (basis[k].name.clone(), indicator(dim, &[(k, 1)])))
        .collect();
    let coords: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let lie = GradedLie::from_realization(
        &format!("juhl({n})"),
        basis,
        Realization {
            matrices,
            blocks: vec![1, n, 1],
        },
        sub,
        coords.clone(),
        coords[..n - 1].to_vec(),
    )?;
    let duals = lie.source_space().dual_coords().clone();
    let mut tangential = MPoly::zero(duals.clone());
    for i in 0..n - 1 {
        tangential =
            &tangential + &MPoly::monomial(duals.clone(), Monomial::var(i, 2), BigRat::one());
    }
    let normal = MPoly::var(duals, n - 1);
    Ok(BuiltinSetting {
        name: "juhl".into(),
        n: Some(n),
        lie,
        lambda_slots: vec![("lambda".into(), d_index)],
        invariants: Some(vec![tangential, normal]),
    })
}

/// `rankin_cohen`, or `juhl` with `n >= 2` (the dimension of the source space).
pub fn builtin_setting(name: &str, n: Option<usize>) -> Result<BuiltinSetting, LieError> {
    match name {
        "rankin_cohen" => rankin_cohen(),
        "juhl" => juhl(n.unwrap_or(0)),
        other => Err(LieError::UnknownSetting(other.to_string())),
    }
}
