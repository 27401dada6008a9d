use crate::scalar::Scalar;

/// A coefficient vector with sorted, nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    dim: usize,
    entries: Vec<(usize, F)>,
}

impl<F: Scalar> SparseVec<F> {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        SparseVec {
            dim,
            entries: vec![(i, F::one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_entries<I: IntoIterator<Item = (usize, F)>>(dim: usize, iter: I) -> Self {
        let mut entries: Vec<(usize, F)> = iter.into_iter().collect();
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            match out.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { dim, entries: out }
    }

    /// Caller guarantees sorted, distinct, nonzero entries.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < dim && !v.is_zero()));
        SparseVec { dim, entries }
    }

    pub fn from_dense(values: &[F]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVec {
            dim: values.len(),
            entries,
        }
    }

    pub fn to_dense(&self) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn value(&self, i: usize) -> F {
        self.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| (*i, v.mul_ref(c)))
            .collect();
        SparseVec {
            dim: self.dim,
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, -v.clone()))
                .collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, w.mul_ref(c)));
                }
                (Some(_), Some(_)) => {
                    let (i, mut v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    v += &w.mul_ref(c);
                    if !v.is_zero() {
                        out.push((i, v));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, w.mul_ref(c)));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&F::one(), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-F::one(), other);
        out
    }

    /// Kronecker product; index `(i, j)` becomes `i * other.dim + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * other.dim + j, a.mul_ref(b)));
            }
        }
        SparseVec {
            dim: self.dim * other.dim,
            entries,
        }
    }

    /// Re-indexes into a space of dimension `dim` via an injective map.
    pub fn reindex(&self, dim: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::from_entries(dim, self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }
}

/// Dense scratch space for accumulating many sparse contributions.
pub(crate) struct Accumulator<F> {
    values: Vec<F>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl<F: Scalar> Accumulator<F> {
    pub(crate) fn new(dim: usize) -> Self {
        Accumulator {
            values: vec![F::zero(); dim],
            touched: Vec::new(),
            seen: vec![false; dim],
        }
    }

    pub(crate) fn add(&mut self, i: usize, v: &F) {
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.values[i] += v;
    }

    pub(crate) fn add_product(&mut self, i: usize, a: &F, b: &F) {
        self.add(i, &a.mul_ref(b));
    }

    pub(crate) fn add_scaled(&mut self, c: &F, v: &SparseVec<F>) {
        for (i, w) in v.entries() {
            self.add_product(*i, c, w);
        }
    }

    pub(crate) fn take(&mut self) -> SparseVec<F> {
        let dim = self.values.len();
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let v = std::mem::replace(&mut self.values[i], F::zero());
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SparseVec::from_sorted_unchecked(dim, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, GF5};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn canonical_form() {
        let v = SparseVec::from_entries(5, vec![(3, q(1)), (1, q(2)), (3, q(-1)), (0, q(0))]);
        assert_eq!(v.entries(), &[(1, q(2))]);
        assert_eq!(v.value(3), q(0));
    }

    #[test]
    fn add_scaled_merges_and_cancels() {
        let mut a = SparseVec::from_dense(&[q(1), q(0), q(2)]);
        let b = SparseVec::from_dense(&[q(0), q(3), q(1)]);
        a.add_scaled(&q(-2), &b);
        assert_eq!(a.to_dense(), vec![q(1), q(-6), q(0)]);
        assert_eq!(a.nnz(), 2);
    }

    #[test]
    fn kron_indexing() {
        let a = SparseVec::from_dense(&[GF5::new(1), GF5::new(2)]);
        let b = SparseVec::from_dense(&[GF5::new(0), GF5::new(3), GF5::new(1)]);
        let k = a.kron(&b);
        assert_eq!(k.dim(), 6);
        assert_eq!(
            k.to_dense(),
            vec![0, 3, 1, 0, 1, 2].into_iter().map(GF5::new).collect::<Vec<_>>()
        );
    }

    #[test]
    fn accumulator_round_trip() {
        let mut acc = Accumulator::<Rational>::new(4);
        acc.add(2, &q(1));
        acc.add(0, &q(3));
        acc.add(2, &q(-1));
        let v = acc.take();
        assert_eq!(v.entries(), &[(0, q(3))]);
        acc.add(1, &q(5));
        assert_eq!(acc.take().entries(), &[(1, q(5))]);
    }
}
