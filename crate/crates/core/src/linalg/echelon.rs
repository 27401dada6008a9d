use super::sparse::{Accumulator, SparseVec};
use crate::scalar::Scalar;

/// An incrementally maintained reduced row echelon form.
///
/// Pivots are chosen as the first nonzero column of the reduced incoming
/// row, so the final form depends only on the insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec<F>>>(ncols: usize, rows: I) -> Self {
        let mut e = Self::new(ncols);
        for r in rows {
            e.insert(&r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// The reduced rows, sorted by pivot column.
    pub fn rows(&self) -> Vec<SparseVec<F>> {
        self.pivot_row
            .iter()
            .filter_map(|r| r.map(|r| self.rows[r].clone()))
            .collect()
    }

    /// Fully reduces `v` against the current rows; the result is supported
    /// on non-pivot columns only.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        assert_eq!(v.dim(), self.ncols, "vector length does not match column count");
        if !v.entries().iter().any(|(c, _)| self.pivot_row[*c].is_some()) {
            return v.clone();
        }
        let mut acc = Accumulator::new(self.ncols);
        acc.add_scaled(&F::one(), v);
        let minus_one = -F::one();
        for (c, val) in v.entries() {
            if let Some(r) = self.pivot_row[*c] {
                acc.add_scaled(&val.mul_ref(&minus_one), &self.rows[r]);
            }
        }
        acc.take()
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, v: &SparseVec<F>) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.leading()?;
        let r = r.scale(&lead.inv().expect("leading entry is nonzero"));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(p).cloned() {
                row.add_scaled(&-c, &r);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(r);
        Some(p)
    }

    /// Basis of the solution space of `row · x = 0` for all rows.
    pub fn nullspace(&self) -> NullSpace<F> {
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut parts: Vec<Vec<(usize, F)>> = free.iter().map(|&f| vec![(f, F::one())]).collect();
        for (p, r) in self.pivot_row.iter().enumerate() {
            if let Some(r) = r {
                for (c, v) in self.rows[*r].entries() {
                    if *c != p {
                        parts[slot[*c]].push((p, -v.clone()));
                    }
                }
            }
        }
        let basis = parts
            .into_iter()
            .map(|e| SparseVec::from_entries(self.ncols, e))
            .collect();
        NullSpace {
            ncols: self.ncols,
            free,
            basis,
        }
    }
}

/// Null space basis indexed by free variables: basis vector `k` has a 1 in
/// free column `free[k]` and zeros in all other free columns.
#[derive(Clone, Debug)]
pub struct NullSpace<F> {
    ncols: usize,
    free: Vec<usize>,
    basis: Vec<SparseVec<F>>,
}

impl<F: Scalar> NullSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        let coords: Vec<F> = self.free.iter().map(|&f| v.value(f)).collect();
        let mut acc = Accumulator::new(self.ncols);
        for (c, b) in coords.iter().zip(&self.basis) {
            acc.add_scaled(c, b);
        }
        if acc.take() == *v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn combine(&self, coords: &[F]) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.ncols);
        for (c, b) in coords.iter().zip(&self.basis) {
            acc.add_scaled(c, b);
        }
        acc.take()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, GF2};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn qv(xs: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(&xs.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn incremental_rref() {
        let mut e = Echelon::new(3);
        assert_eq!(e.insert(&qv(&[0, 2, 4])), Some(1));
        assert_eq!(e.insert(&qv(&[1, 1, 1])), Some(0));
        assert_eq!(e.insert(&qv(&[1, 2, 3])), None);
        assert_eq!(e.rank(), 2);
        let rows = e.rows();
        assert_eq!(rows[0], qv(&[1, 0, -1]));
        assert_eq!(rows[1], qv(&[0, 1, 2]));
        assert_eq!(e.reduce(&qv(&[0, 0, 5])), qv(&[0, 0, 5]));
        assert_eq!(e.reduce(&qv(&[1, 0, 0])), qv(&[0, 0, 1]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![qv(&[1, 2, 3, 4]), qv(&[2, 4, 6, 9])];
        let e = Echelon::from_rows(4, rows.clone());
        let ns = e.nullspace();
        assert_eq!(ns.dim(), 2);
        for v in ns.basis() {
            for r in &rows {
                let dot: Rational = r
                    .entries()
                    .iter()
                    .map(|(i, a)| a.clone() * v.value(*i))
                    .fold(q(0), |s, x| s + x);
                assert_eq!(dot, q(0));
            }
        }
        let w = ns.combine(&[q(3), q(-1)]);
        assert_eq!(ns.coordinates(&w), Some(vec![q(3), q(-1)]));
        assert_eq!(ns.coordinates(&qv(&[1, 0, 0, 0])), None);
    }

    #[test]
    fn gf2_cancellation() {
        let one = GF2::new(1);
        let v = SparseVec::from_dense(&[one, one]);
        let mut e = Echelon::new(2);
        e.insert(&v);
        assert!(e.contains(&SparseVec::from_dense(&[one, one])));
        assert!(!e.contains(&SparseVec::unit(2, 0)));
    }
}
