use crate::algebra::Ring;

/// Square matrix coefficient of a Weyl term, row-major. The 1×1 case is the
/// scalar fast path.
#[derive(Clone, Debug, PartialEq)]
pub struct Fiber<C> {
    dim: usize,
    entries: Vec<C>,
}

impl<C: Ring> Fiber<C> {
    pub fn scalar(c: C) -> Self {
        Fiber {
            dim: 1,
            entries: vec![c],
        }
    }

    pub fn zero(dim: usize) -> Self {
        Fiber {
            dim,
            entries: vec![C::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut f = Self::zero(dim);
        for i in 0..dim {
            f.entries[i * dim + i] = C::one();
        }
        f
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "fiber matrices are square"
        );
        Fiber {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<C>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[C]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(C::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "fiber dimension");
        Fiber {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|e| e.mul_ref(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "fiber dimension");
        if self.dim == 1 {
            return Fiber::scalar(self.entries[0].mul_ref(&other.entries[0]));
        }
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] = out.entries[i * n + j].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> Fiber<D> {
        Fiber {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Ring, E, F: Fn(&C) -> Result<D, E>>(&self, f: F) -> Result<Fiber<D>, E> {
        Ok(Fiber {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn render(&self, latex: bool) -> String {
        let text = |c: &C| if latex { c.to_latex() } else { c.to_text() };
        if self.dim == 1 {
            return text(&self.entries[0]);
        }
        let rows: Vec<String> = self
            .entries
            .chunks(self.dim)
            .map(|r| {
                r.iter()
                    .map(text)
                    .collect::<Vec<_>>()
                    .join(if latex { " & " } else { ", " })
            })
            .collect();
        if latex {
            format!("\\begin{{pmatrix}}{}\\end{{pmatrix}}", rows.join(" \\\\ "))
        } else {
            format!("[[{}]]", rows.join("], ["))
        }
    }
}
