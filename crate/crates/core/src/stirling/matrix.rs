use alloc::vec;
use alloc::vec::Vec;

use super::{Family, Tables};
use crate::qalgebra::QPoly;

/// Square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    dim: usize,
    entries: Vec<QPoly>,
}

impl QMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> QPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        QMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { QPoly::one() } else { QPoly::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.entries[i * self.dim + j]
    }

    /// Panics if the dimensions differ.
    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let mut out = vec![QPoly::zero(); self.dim * self.dim];
        for i in 0..self.dim {
            for l in 0..self.dim {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    out[i * self.dim + j] += a * other.get(l, j);
                }
            }
        }
        QMatrix {
            dim: self.dim,
            entries: out,
        }
    }
}

/// `||(-1)^{n-k} cFbar_{n,k}||` and `||SFbar_{n,k}||`, indices `1..=dim`,
/// multiply to the identity in both orders.
pub fn matrix_inverse_check(tables: &Tables, dim: usize) -> bool {
    let signed = QMatrix::from_fn(dim, |i, j| {
        let c = tables.get(Family::CFbar).get(i + 1, j + 1).clone();
        if (i + j) % 2 == 1 {
            -c
        } else {
            c
        }
    });
    let s = QMatrix::from_fn(dim, |i, j| tables.get(Family::SFbar).get(i + 1, j + 1).clone());
    let id = QMatrix::identity(dim);
    signed.mul(&s) == id && s.mul(&signed) == id
}
