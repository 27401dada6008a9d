use crate::linalg::{Echelon, SparseVec};
use crate::scalar::Scalar;

/// A subspace of an algebra, held as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<SparseVec<F>>,
}

impl<F: Scalar> Subspace<F> {
    /// Span of arbitrary vectors; the stored basis is their reduced echelon form.
    pub fn span<I: IntoIterator<Item = SparseVec<F>>>(ambient: usize, vectors: I) -> Self {
        let e = Echelon::from_rows(ambient, vectors);
        Subspace {
            ambient,
            basis: e.rows(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| SparseVec::unit(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        Echelon::from_rows(self.ambient, self.basis.iter().cloned()).contains(v)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    /// Reads them off the pivot columns, then confirms by reconstruction.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        let coords: Vec<F> = self
            .basis
            .iter()
            .map(|b| v.value(b.leading().expect("basis vectors are nonzero").0))
            .collect();
        (self.combine(&coords) == *v).then_some(coords)
    }

    pub fn combine(&self, coords: &[F]) -> SparseVec<F> {
        let mut out = SparseVec::zero(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        // x = Σ a_i b_i = Σ c_j d_j; solve on the stacked coefficients.
        let k = self.dim();
        let cols: Vec<SparseVec<F>> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|d| d.neg()))
            .collect();
        let rows = crate::linalg::rows_of_columns(self.ambient, &cols);
        let ns = Echelon::from_rows(cols.len(), rows).nullspace();
        Subspace::span(
            self.ambient,
            ns.basis().iter().map(|v| {
                let coords: Vec<F> = (0..k).map(|i| v.value(i)).collect();
                self.combine(&coords)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn qv(xs: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(&xs.iter().map(|&v| Rational::from_i64(v)).collect::<Vec<_>>())
    }

    #[test]
    fn span_coordinates_and_intersection() {
        let s = Subspace::span(3, vec![qv(&[1, 1, 0]), qv(&[2, 2, 0]), qv(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        let v = qv(&[1, 3, 2]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(s.coordinates(&qv(&[1, 0, 0])).is_none());
        let t = Subspace::span(3, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0])]);
        let i = s.intersect(&t);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&qv(&[1, 1, 0])));
    }
}
