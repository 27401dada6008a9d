//! Sparse bilinear structure constants: `e_i * f_j = Σ_k c_{ij}^k g_k`.
//! Used for algebra multiplication and for bimodule actions.

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::{Accumulator, SparseVec};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("structure constant [{i}, {j}, {k}] out of range for shape {left}x{right}->{out}")]
pub struct TableError {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub left: usize,
    pub right: usize,
    pub out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable<F> {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    cells: Vec<SparseVec<F>>,
}

impl<F: Scalar> StructureTable<F> {
    pub fn zero(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        StructureTable {
            left_dim,
            right_dim,
            out_dim,
            cells: vec![SparseVec::zero(out_dim); left_dim * right_dim],
        }
    }

    /// Canonicalizes a list of `(i, j, k, c)` quadruples: duplicates are
    /// summed and zero coefficients dropped.
    pub fn from_quadruples<I>(left_dim: usize, right_dim: usize, out_dim: usize, quads: I) -> Result<Self, TableError>
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); left_dim * right_dim];
        for (i, j, k, c) in quads {
            if i >= left_dim || j >= right_dim || k >= out_dim {
                return Err(TableError {
                    i,
                    j,
                    k,
                    left: left_dim,
                    right: right_dim,
                    out: out_dim,
                });
            }
            buckets[i * right_dim + j].push((k, c));
        }
        Ok(StructureTable {
            left_dim,
            right_dim,
            out_dim,
            cells: buckets
                .into_iter()
                .map(|b| SparseVec::from_entries(out_dim, b))
                .collect(),
        })
    }

    /// Fills every cell from `f(i, j)`; cells are computed in parallel.
    pub fn from_fn<G>(left_dim: usize, right_dim: usize, out_dim: usize, f: G) -> Self
    where
        G: Fn(usize, usize) -> SparseVec<F> + Sync,
    {
        let cells: Vec<SparseVec<F>> = (0..left_dim * right_dim)
            .into_par_iter()
            .map(|x| {
                let v = f(x / right_dim.max(1), x % right_dim.max(1));
                assert_eq!(v.dim(), out_dim, "cell has the wrong output dimension");
                v
            })
            .collect();
        StructureTable {
            left_dim,
            right_dim,
            out_dim,
            cells,
        }
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn cell(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.cells[i * self.right_dim + j]
    }

    pub fn set_cell(&mut self, i: usize, j: usize, v: SparseVec<F>) {
        assert_eq!(v.dim(), self.out_dim);
        self.cells[i * self.right_dim + j] = v;
    }

    pub fn apply(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.out_dim);
        for (i, a) in x.entries() {
            for (j, b) in y.entries() {
                let ab = a.mul_ref(b);
                acc.add_scaled(&ab, self.cell(*i, *j));
            }
        }
        acc.take()
    }

    /// `e_i * y`.
    pub fn left_basis(&self, i: usize, y: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.out_dim);
        for (j, b) in y.entries() {
            acc.add_scaled(b, self.cell(i, *j));
        }
        acc.take()
    }

    /// `x * f_j`.
    pub fn right_basis(&self, x: &SparseVec<F>, j: usize) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.out_dim);
        for (i, a) in x.entries() {
            acc.add_scaled(a, self.cell(*i, j));
        }
        acc.take()
    }

    /// Nonzero constants in `(i, j, k)` order.
    pub fn quadruples(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                for (k, c) in self.cell(i, j).entries() {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.cells.iter().map(|c| c.nnz()).sum()
    }

    /// The table of `(x, y) ↦ y * x`.
    pub fn swapped(&self) -> Self {
        Self::from_fn(self.right_dim, self.left_dim, self.out_dim, |j, i| {
            self.cell(i, j).clone()
        })
    }

    /// Kronecker product of tables: `(⊗ e_{i_t}) * (⊗ f_{j_t}) = ⊗ (e_{i_t} * f_{j_t})`.
    pub fn kron(tables: &[&StructureTable<F>]) -> Self {
        let left: Vec<usize> = tables.iter().map(|t| t.left_dim).collect();
        let right: Vec<usize> = tables.iter().map(|t| t.right_dim).collect();
        let out: Vec<usize> = tables.iter().map(|t| t.out_dim).collect();
        let lr = crate::index::MixedRadix::new(left);
        let rr = crate::index::MixedRadix::new(right);
        let out_total = out.iter().product();
        Self::from_fn(lr.total(), rr.total(), out_total, |i, j| {
            let li = lr.decode(i);
            let rj = rr.decode(j);
            let mut acc = SparseVec::unit(1, 0);
            for (t, tab) in tables.iter().enumerate() {
                acc = acc.kron(tab.cell(li[t], rj[t]));
                if acc.is_zero() {
                    return SparseVec::zero(out_total);
                }
            }
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn quadruples_round_trip() {
        let quads = vec![(0, 1, 1, q(2)), (1, 1, 0, q(1)), (0, 1, 1, q(-2))];
        let t = StructureTable::from_quadruples(2, 2, 2, quads).unwrap();
        assert_eq!(t.quadruples(), vec![(1, 1, 0, q(1))]);
        assert!(StructureTable::from_quadruples(2, 2, 2, vec![(2, 0, 0, q(1))]).is_err());
    }

    #[test]
    fn apply_is_bilinear() {
        // C2 group algebra: e*x = x, a*a = e
        let t = StructureTable::from_quadruples(
            2,
            2,
            2,
            vec![(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (1, 1, 0, q(1))],
        )
        .unwrap();
        let x = SparseVec::from_dense(&[q(1), q(2)]);
        let y = SparseVec::from_dense(&[q(3), q(-1)]);
        // (1+2a)(3-a) = 3 - a + 6a - 2 = 1 + 5a
        assert_eq!(t.apply(&x, &y).to_dense(), vec![q(1), q(5)]);
        assert_eq!(t.swapped(), t);
    }
}
