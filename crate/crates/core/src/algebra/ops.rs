use std::sync::Arc;

use super::{AlgebraError, CrossedUnits, GradedAlgebra, Subspace};
use crate::group::FiniteGroup;
use crate::linalg::{rows_of_columns, Echelon, SparseVec};
use crate::scalar::Scalar;
use crate::table::StructureTable;

/// The group algebra `F[G]`: basis the group elements, each in its own degree.
pub fn group_algebra<F: Scalar>(g: &Arc<FiniteGroup>) -> GradedAlgebra<F> {
    let n = g.order();
    let mult = StructureTable::from_fn(n, n, n, |i, j| SparseVec::unit(n, g.mul(i, j)));
    let names = (0..n).map(|x| g.name(x)).collect();
    GradedAlgebra::from_parts(
        g.clone(),
        names,
        (0..n).collect(),
        mult,
        SparseVec::unit(n, g.identity()),
    )
    .expect("group algebras satisfy the axioms")
}

/// The basis elements of a group algebra as crossed-product units.
pub fn group_algebra_units<F: Scalar>(a: &GradedAlgebra<F>) -> CrossedUnits<F> {
    let g = a.group();
    let units = (0..g.order())
        .map(|x| SparseVec::unit(a.dim(), a.basis_of_degree(x)[0]))
        .collect();
    CrossedUnits::certify(a, units).expect("group elements are units")
}

/// `A_g` as a subspace.
pub fn component<F: Scalar>(a: &GradedAlgebra<F>, g: usize) -> Subspace<F> {
    Subspace::span(
        a.dim(),
        a.basis_of_degree(g).into_iter().map(|i| a.basis(i)),
    )
}

/// `{x : x·s = s·x for all s in S}`, in reduced echelon form.
pub fn centralizer<F: Scalar>(a: &GradedAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    let d = a.dim();
    let mut e = Echelon::new(d);
    for b in s.basis() {
        let cols: Vec<SparseVec<F>> = (0..d)
            .map(|j| a.mult().left_basis(j, b).sub(&a.mult().right_basis(b, j)))
            .collect();
        for row in rows_of_columns(d, &cols) {
            e.insert(&row);
        }
    }
    Subspace::span(d, e.nullspace().basis().iter().cloned())
}

/// `A^op` with `(A^op)_g = A_{g⁻¹}`.
pub fn opposite<F: Scalar>(a: &GradedAlgebra<F>) -> GradedAlgebra<F> {
    let g = a.group();
    GradedAlgebra::from_parts(
        g.clone(),
        a.names().to_vec(),
        a.degrees().iter().map(|&x| g.inv(x)).collect(),
        a.mult().swapped(),
        a.one().clone(),
    )
    .expect("the opposite of a graded algebra is graded")
}

/// The identity component `B = A₁` as a standalone algebra with the same
/// grading group (every basis element in degree 1), together with the
/// indices of its basis inside `A`.
pub fn identity_component_subalgebra<F: Scalar>(
    a: &GradedAlgebra<F>,
) -> Result<(GradedAlgebra<F>, Vec<usize>), AlgebraError> {
    let e = a.group().identity();
    let idx = a.basis_of_degree(e);
    let mut pos = vec![usize::MAX; a.dim()];
    for (k, &i) in idx.iter().enumerate() {
        pos[i] = k;
    }
    let b = idx.len();
    let mult = StructureTable::from_fn(b, b, b, |i, j| {
        a.mult().cell(idx[i], idx[j]).reindex(b, |k| pos[k])
    });
    let sub = GradedAlgebra::from_parts(
        a.group().clone(),
        idx.iter().map(|&i| a.names()[i].clone()).collect(),
        vec![e; b],
        mult,
        a.one().reindex(b, |k| pos[k]),
    )?;
    Ok((sub, idx))
}
