//! Partitioned axiom sweeps. The outer index is split across rayon workers;
//! the reported witness is always the first failure in index order, so the
//! outcome does not depend on the number of threads.

use rayon::prelude::*;

pub(crate) fn first_failure<E, G>(n: usize, f: G) -> Option<E>
where
    E: Send,
    G: Fn(usize) -> Option<E> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

pub(crate) fn sweep<E, G>(n: usize, f: G) -> Result<(), E>
where
    E: Send,
    G: Fn(usize) -> Option<E> + Sync + Send,
{
    match first_failure(n, f) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// First coordinate where two vectors differ, rendered for diagnostics.
pub(crate) fn first_difference<F: crate::scalar::Scalar>(
    a: &crate::linalg::SparseVec<F>,
    b: &crate::linalg::SparseVec<F>,
) -> Option<(usize, String, String)> {
    let diff = a.sub(b);
    diff.leading()
        .map(|(k, _)| (k, a.value(k).to_string(), b.value(k).to_string()))
}

/// Above this many triples, associativity-type axioms are checked with one
/// slot restricted to algebra generators. An identity that is linear in that
/// slot and holds for the unit and each generator `t` also holds for `w·t`
/// whenever it holds for `w`, so the reduced check is still complete.
pub(crate) const EXHAUSTIVE_TRIPLES: usize = 1 << 18;

/// Indices to sweep for one slot: everything for small problems, otherwise
/// the given generators.
pub(crate) fn slot(dim: usize, triples: usize, gens: impl FnOnce() -> Vec<usize>) -> Vec<usize> {
    if triples <= EXHAUSTIVE_TRIPLES {
        (0..dim).collect()
    } else {
        gens()
    }
}
