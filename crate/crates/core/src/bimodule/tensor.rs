use rayon::prelude::*;

use super::{same_map, BimoduleError, GradedBimodule};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::Scalar;
use crate::table::StructureTable;

/// A quotient `(X ⊗ Y) / R` of a tensor product of based spaces. Pure tensors
/// `x_i ⊗ y_j` are indexed `i · dim Y + j`. The relations are kept in
/// reduced echelon form; the quotient basis is the set of pure tensors at
/// non-pivot positions, so every basis vector has a canonical representative.
#[derive(Clone, Debug)]
pub struct TensorQuotient<F> {
    left_dim: usize,
    right_dim: usize,
    relations: Echelon<F>,
    free: Vec<usize>,
    slot: Vec<usize>,
}

impl<F: Scalar> TensorQuotient<F> {
    /// Relations are inserted in the given order; the result depends only on
    /// that order.
    pub fn new<I: IntoIterator<Item = SparseVec<F>>>(left_dim: usize, right_dim: usize, relations: I) -> Self {
        let n = left_dim * right_dim;
        let relations = Echelon::from_rows(n, relations);
        let free = relations.free_columns();
        let mut slot = vec![usize::MAX; n];
        for (k, &c) in free.iter().enumerate() {
            slot[c] = k;
        }
        TensorQuotient {
            left_dim,
            right_dim,
            relations,
            free,
            slot,
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.right_dim + j
    }

    /// The pure tensor `(i, j)` representing quotient basis vector `q`.
    pub fn representative(&self, q: usize) -> (usize, usize) {
        let p = self.free[q];
        (p / self.right_dim, p % self.right_dim)
    }

    pub fn relations(&self) -> &Echelon<F> {
        &self.relations
    }

    /// Image of an element of `X ⊗ Y` in the quotient basis.
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let r = self.relations.reduce(v);
        SparseVec::from_entries(
            self.dim(),
            r.into_entries().into_iter().map(|(c, x)| (self.slot[c], x)),
        )
    }

    /// `x ⊗ y` as a vector of `X ⊗ Y`.
    pub fn pure(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        x.kron(y)
    }
}

/// The balancing relations `x·s ⊗ y − x ⊗ s·y` for each generator `s` of the
/// middle algebra and all basis vectors `x`, `y`. Relations for generators
/// suffice: if `s` and `t` are balanced, so is `st`.
pub fn balanced_relations<F: Scalar>(
    left_ract: &StructureTable<F>,
    right_lact: &StructureTable<F>,
    gens: &[usize],
) -> Vec<SparseVec<F>> {
    let (dl, dr) = (left_ract.left_dim(), right_lact.right_dim());
    let total = gens.len() * dl * dr;
    (0..total)
        .into_par_iter()
        .map(|x| {
            let s = gens[x / (dl * dr)];
            let i = (x / dr) % dl;
            let j = x % dr;
            let mut entries: Vec<(usize, F)> = left_ract
                .cell(i, s)
                .entries()
                .iter()
                .map(|(k, c)| (k * dr + j, c.clone()))
                .collect();
            entries.extend(right_lact.cell(s, j).entries().iter().map(|(k, c)| (i * dr + k, -c.clone())));
            SparseVec::from_entries(dl * dr, entries)
        })
        .filter(|v| !v.is_zero())
        .collect()
}

/// `M ⊗_{A′} N` for `M` over `(A, A′)` and `N` over `(A′, A″)`.
pub fn tensor_over<F: Scalar>(m: &GradedBimodule<F>, n: &GradedBimodule<F>) -> Result<GradedBimodule<F>, BimoduleError> {
    if !same_map(m.right(), n.left()) {
        return Err(BimoduleError::MiddleMismatch);
    }
    let gens = m.right_algebra().generators().to_vec();
    let rels = balanced_relations(m.ract(), n.lact(), &gens);
    let q = TensorQuotient::new(m.dim(), n.dim(), rels);
    let d = q.dim();
    let dn = n.dim();
    let group = m.group();
    let reps: Vec<(usize, usize)> = (0..d).map(|t| q.representative(t)).collect();
    let degree = reps.iter().map(|&(i, j)| group.mul(m.degree(i), n.degree(j))).collect();
    let names = reps
        .iter()
        .map(|&(i, j)| format!("{}⊗{}", m.names()[i], n.names()[j]))
        .collect();
    let lact = StructureTable::from_fn(m.left_algebra().dim(), d, d, |a, t| {
        let (i, j) = reps[t];
        let v = SparseVec::from_entries(
            m.dim() * dn,
            m.lact().cell(a, i).entries().iter().map(|(k, c)| (k * dn + j, c.clone())),
        );
        q.project(&v)
    });
    let ract = StructureTable::from_fn(d, n.right_algebra().dim(), d, |t, b| {
        let (i, j) = reps[t];
        let v = SparseVec::from_entries(
            m.dim() * dn,
            n.ract().cell(j, b).entries().iter().map(|(k, c)| (i * dn + k, c.clone())),
        );
        q.project(&v)
    });
    GradedBimodule::from_parts(m.left().clone(), n.right().clone(), names, degree, lact, ract)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Rational;

    #[test]
    fn regular_tensor_regular() {
        let a = fixtures::regular_c2_bimodule::<Rational>();
        let t = tensor_over(&a, &a).unwrap();
        assert_eq!(t.dim(), 2);
    }

    #[test]
    fn column_row_examples() {
        let col = fixtures::column_module::<Rational>();
        let row = fixtures::row_module_trivial::<Rational>();
        assert_eq!(tensor_over(&col, &row).unwrap().dim(), 4);
        assert_eq!(tensor_over(&row, &col).unwrap().dim(), 1);
        assert_eq!(tensor_over(&col, &col).unwrap_err(), BimoduleError::MiddleMismatch);
    }

    #[test]
    fn quotient_projection_kills_relations() {
        let col = fixtures::column_module::<Rational>();
        let row = fixtures::row_module_trivial::<Rational>();
        let gens = row.right_algebra().generators().to_vec();
        let rels = balanced_relations(row.ract(), col.lact(), &gens);
        let q = TensorQuotient::new(row.dim(), col.dim(), rels.clone());
        assert_eq!(q.dim(), 1);
        assert!(rels.iter().all(|r| q.project(r).is_zero()));
    }
}
