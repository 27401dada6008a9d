#![allow(dead_code)]

use std::sync::Arc;

use morita_core::{FiniteGroup, GradedAlgebra, Scalar, SparseVec};

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

/// Every product of basis vectors lands in the component of the product
/// degree. Returns the first offending pair.
pub fn grading_violation<F: Scalar>(a: &GradedAlgebra<F>) -> Option<(usize, usize)> {
    let g = a.group();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let want = g.mul(a.degree(i), a.degree(j));
            if a.mult().cell(i, j).support().any(|k| a.degree(k) != want) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn basis<F: Scalar>(dim: usize, i: usize) -> SparseVec<F> {
    SparseVec::unit(dim, i)
}
