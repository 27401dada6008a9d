//! Finite groups given by multiplication tables, symmetric groups, direct
//! products and wreath products `Ḡ ≀ Sₙ`.

mod perm;
mod product;

pub use perm::{factorial, tuple_permute, Permutation};
pub use product::{direct_product, wreath_group, DirectProduct, WreathElement, WreathGroup};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 200;
const SAMPLED_TRIPLES: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("table row {row} has {found} entries, expected {expected}")]
    Shape {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is not an element index")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("table is not a Latin square: element {value} repeats in {line}")]
    NotLatin { line: String, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails: ({a}·{b})·{c} = {left} but {a}·({b}·{c}) = {right}")]
    Associativity {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("{found} names supplied for a group of order {order}")]
    Names { order: usize, found: usize },
    #[error("the arity n must be at least 1")]
    ZeroArity,
    #[error("a direct product needs at least one factor")]
    EmptyProduct,
    #[error("tuple of length {found} where {expected} was required")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a permutation in one-line notation")]
    InvalidPermutation(Vec<usize>),
}

/// A finite group as a multiplication table on `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a table given row by row.
    pub fn from_table(rows: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let order = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::Shape {
                    row: r,
                    expected: order,
                    found: row.len(),
                });
            }
        }
        Self::from_flat(order, rows.into_iter().flatten().collect(), names)
    }

    /// Validates a row-major table.
    pub fn from_flat(order: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != order * order {
            return Err(GroupError::Shape {
                row: table.len() / order,
                expected: order,
                found: table.len() % order,
            });
        }
        if let Some(names) = &names {
            if names.len() != order {
                return Err(GroupError::Names {
                    order,
                    found: names.len(),
                });
            }
        }
        if let Some(k) = table.iter().position(|&v| v >= order) {
            return Err(GroupError::OutOfRange {
                row: k / order,
                col: k % order,
                value: table[k],
            });
        }
        check_latin(order, &table)?;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![0; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a * order + b] == identity)
                .ok_or(GroupError::NoInverse(a))?;
            if table[b * order + a] != identity {
                return Err(GroupError::NoInverse(a));
            }
            inverse[a] = b;
        }
        let group = FiniteGroup {
            order,
            table,
            identity,
            inverse,
            names,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let failure = |a: usize, b: usize, c: usize| {
            let left = self.mul(self.mul(a, b), c);
            let right = self.mul(a, self.mul(b, c));
            (left != right).then_some(GroupError::Associativity {
                a,
                b,
                c,
                left,
                right,
            })
        };
        let found = if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            (0..n)
                .into_par_iter()
                .find_map_first(|a| (0..n).find_map(|b| (0..n).find_map(|c| failure(a, b, c))))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            (0..SAMPLED_TRIPLES).find_map(|_| {
                let (a, b, c) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                failure(a, b, c)
            })
        };
        found.map_or(Ok(()), Err)
    }

    /// Cyclic group of order `n`; element `k` is the `k`-th power of a generator.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        Self::from_flat(n, table, Some(names))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Whether `map` (indexed by elements of `self`) is an injective
    /// homomorphism into `target`.
    pub fn is_embedding_into(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        if map.len() != self.order || map.iter().any(|&x| x >= target.order) {
            return false;
        }
        let mut seen = vec![false; target.order];
        for &x in map {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
        (0..self.order).all(|a| {
            (0..self.order).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
        })
    }
}

fn check_latin(order: usize, table: &[usize]) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; order];
    for r in 0..order {
        for c in 0..order {
            let v = table[r * order + c];
            if seen[v] == r {
                return Err(GroupError::NotLatin {
                    line: format!("row {r}"),
                    value: v,
                });
            }
            seen[v] = r;
        }
    }
    let mut seen = vec![usize::MAX; order];
    for c in 0..order {
        for r in 0..order {
            let v = table[r * order + c];
            if seen[v] == c {
                return Err(GroupError::NotLatin {
                    line: format!("column {c}"),
                    value: v,
                });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

/// `Sₙ` with elements in lexicographic order of one-line notation; element
/// 0 is the identity and the product is `(στ)(i) = σ(τ(i))`.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroArity);
    }
    let perms = Permutation::all(n);
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    for s in &perms {
        for t in &perms {
            table.push(s.compose(t).rank());
        }
    }
    let names = perms
        .iter()
        .map(|p| {
            p.one_line()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    FiniteGroup::from_flat(order, table, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(3).unwrap().order(), 6);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert_eq!(symmetric_group(0), Err(GroupError::ZeroArity));
    }

    #[test]
    fn symmetric_product_convention() {
        let s3 = symmetric_group(3).unwrap();
        let sigma = Permutation::from_one_line(&[2, 1, 3]).unwrap().rank();
        let tau = Permutation::from_one_line(&[1, 3, 2]).unwrap().rank();
        let st = Permutation::unrank(3, s3.mul(sigma, tau));
        assert_eq!(st.one_line(), vec![2, 3, 1]);
        assert_eq!(s3.identity(), 0);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn table_validation_errors() {
        assert_eq!(FiniteGroup::from_table(vec![], None), Err(GroupError::Empty));
        let not_latin = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_table(not_latin, None),
            Err(GroupError::NotLatin { .. })
        ));
        // x·y = -x - y mod 3 is a Latin square without identity
        let no_id = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(matches!(
            FiniteGroup::from_table(no_id, None),
            Err(GroupError::NoIdentity)
        ));
        // a loop of order 5 with identity and inverses, but not associative
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(loop5, None),
            Err(GroupError::Associativity { .. })
        ));
    }

    #[test]
    fn cyclic_basics() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(c3.mul(2, 2), 1);
        assert_eq!(c3.inv(1), 2);
        assert_eq!(c3.element_order(1), 3);
        assert!(c3.is_abelian());
    }
}
