use std::fmt;

use super::GroupError;

/// A permutation of `{0, …, n-1}` stored as its image list. Externally
/// (one-line notation, documents) points are numbered from 1.
///
/// Composition is right-to-left: `(σ∘τ)(i) = σ(τ(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::InvalidPermutation(
                    images.iter().map(|v| v + 1).collect(),
                ));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, GroupError> {
        if one_line.contains(&0) {
            return Err(GroupError::InvalidPermutation(one_line.to_vec()));
        }
        Self::from_images(one_line.iter().map(|v| v - 1).collect())
            .map_err(|_| GroupError::InvalidPermutation(one_line.to_vec()))
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Position in the lexicographic order of one-line notations.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        let mut used = vec![false; n];
        for (pos, &x) in self.images.iter().enumerate() {
            let smaller = (0..x).filter(|&y| !used[y]).count();
            rank += smaller * factorial(n - 1 - pos);
            used[x] = true;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Self {
        let mut avail: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for pos in 0..n {
            let f = factorial(n - 1 - pos);
            images.push(avail.remove(rank / f));
            rank %= f;
        }
        Permutation { images }
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..factorial(n)).map(|r| Self::unrank(n, r)).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `^σ(x₁,…,xₙ) = (x_{σ⁻¹(1)},…,x_{σ⁻¹(n)})`: the entry at position `i`
/// moves to position `σ(i)`.
pub fn tuple_permute<T: Clone>(sigma: &Permutation, xs: &[T]) -> Result<Vec<T>, GroupError> {
    if sigma.degree() != xs.len() {
        return Err(GroupError::ArityMismatch {
            expected: sigma.degree(),
            found: xs.len(),
        });
    }
    let inv = sigma.inverse();
    Ok((0..xs.len()).map(|i| xs[inv.apply(i)].clone()).collect())
}
