//! Exact linear algebra: sparse vectors, dense matrices, an incremental
//! reduced echelon form, and the three solvers every verification reduces to.

mod echelon;
mod matrix;
mod sparse;

pub use echelon::{Echelon, NullSpace};
pub use matrix::Matrix;
pub use sparse::SparseVec;
pub(crate) use sparse::Accumulator;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix {rows}x{cols} cannot hold {entries} entries")]
    EntryCount {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

/// Solves `m · x = rhs`. Free variables are set to zero, so the answer is
/// deterministic. Returns `Ok(None)` for an inconsistent system.
pub fn solve_linear<F: Scalar>(m: &Matrix<F>, rhs: &[F]) -> Result<Option<Vec<F>>, LinalgError> {
    if m.rows() != rhs.len() {
        return Err(LinalgError::Shape {
            op: "solve_linear",
            left: (m.rows(), m.cols()),
            right: (rhs.len(), 1),
        });
    }
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for (i, b) in rhs.iter().enumerate() {
        let mut row: Vec<(usize, F)> = m
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        if !b.is_zero() {
            row.push((n, b.clone()));
        }
        e.insert(&SparseVec::from_sorted_unchecked(n + 1, row));
    }
    if e.is_pivot(n) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); n];
    for row in e.rows() {
        let (p, _) = row.leading().expect("echelon rows are nonzero");
        x[p] = row.value(n);
    }
    Ok(Some(x))
}

/// Basis of the null space of `m`, returned in reduced echelon form.
pub fn kernel_basis<F: Scalar>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let e = Echelon::from_rows(m.cols(), (0..m.rows()).map(|i| m.row_sparse(i)));
    let ns = e.nullspace();
    Echelon::from_rows(m.cols(), ns.basis().iter().cloned())
        .rows()
        .into_iter()
        .map(|v| v.to_dense())
        .collect()
}

/// Rows of the matrix whose columns are `columns`, each of length `nrows`.
pub fn rows_of_columns<F: Scalar>(nrows: usize, columns: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.entries() {
            rows[*i].push((j, v.clone()));
        }
    }
    rows.into_iter()
        .map(|r| SparseVec::from_sorted_unchecked(columns.len(), r))
        .collect()
}

pub fn rank<F: Scalar>(m: &Matrix<F>) -> usize {
    Echelon::from_rows(m.cols(), (0..m.rows()).map(|i| m.row_sparse(i))).rank()
}

/// Inverse of a square matrix, `Ok(None)` when singular.
pub fn invert<F: Scalar>(m: &Matrix<F>) -> Result<Option<Matrix<F>>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut e = Echelon::new(2 * n);
    for i in 0..n {
        let mut row: Vec<(usize, F)> = m
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        row.push((n + i, F::one()));
        e.insert(&SparseVec::from_sorted_unchecked(2 * n, row));
    }
    if (0..n).any(|c| !e.is_pivot(c)) {
        return Ok(None);
    }
    let mut inv = Matrix::zeros(n, n);
    for row in e.rows() {
        let (p, _) = row.leading().expect("echelon rows are nonzero");
        for (c, v) in row.entries() {
            if *c >= n {
                inv.set(p, c - n, v.clone());
            }
        }
    }
    Ok(Some(inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational, GF2};
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::<Rational>::identity(2);
        assert_eq!(solve_linear(&m, &[q(3), q(4)]).unwrap(), Some(vec![q(3), q(4)]));
    }

    #[test]
    fn solve_inconsistent() {
        let m = qm(&[&[1, 1], &[0, 0]]);
        assert_eq!(solve_linear(&m, &[q(1), q(1)]).unwrap(), None);
    }

    #[test]
    fn solve_gf2_matches_enumeration() {
        let one = GF2::new(1);
        let zero = GF2::new(0);
        let m = Matrix::from_rows(vec![vec![one, one], vec![one, zero]]).unwrap();
        let rhs = [zero, one];
        // brute force over all four candidates
        let mut sols = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                let x = [GF2::new(a), GF2::new(b)];
                let y0 = m.get(0, 0).mul_ref(&x[0]) + m.get(0, 1).mul_ref(&x[1]);
                let y1 = m.get(1, 0).mul_ref(&x[0]) + m.get(1, 1).mul_ref(&x[1]);
                if y0 == rhs[0] && y1 == rhs[1] {
                    sols.push(x.to_vec());
                }
            }
        }
        assert_eq!(sols, vec![vec![one, one]]);
        assert_eq!(solve_linear(&m, &rhs).unwrap(), Some(sols[0].clone()));
    }

    #[test]
    fn solve_shape_error() {
        let m = Matrix::<Rational>::identity(2);
        assert!(matches!(solve_linear(&m, &[q(1)]), Err(LinalgError::Shape { .. })));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::<Rational>::identity(3)).is_empty());
        assert_eq!(kernel_basis(&Matrix::<Rational>::zeros(2, 3)).len(), 3);
        let m = qm(&[&[1, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = q(1) * v[0].clone() + q(2) * v[1].clone() + q(3) * v[2].clone();
            assert_eq!(dot, q(0));
        }
        // reduced echelon: leading ones in distinct columns, zero above/below
        assert_eq!(k[0][0], q(1));
        assert_eq!(k[1][0], q(0));
        assert_eq!(k[1][1], q(1));
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::<Rational>::identity(3);
        assert_eq!(invert(&id).unwrap(), Some(id.clone()));
        let swap = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&swap).unwrap(), Some(swap.clone()));
        assert_eq!(invert(&qm(&[&[1, 1], &[1, 1]])).unwrap(), None);
        assert!(matches!(
            invert(&Matrix::<Rational>::zeros(2, 3)),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn entry_count_checked() {
        assert!(Matrix::<Rational>::new(2, 2, vec![q(1)]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c))
        })
    }

    proptest! {
        #[test]
        fn solve_reproduces_rhs_q((r, c, data) in small_matrix(), x in proptest::collection::vec(-5i64..=5, 8)) {
            let m = Matrix::new(r, c, data.iter().map(|&v| q(v)).collect()).unwrap();
            let x = SparseVec::from_dense(&x[..c].iter().map(|&v| q(v)).collect::<Vec<_>>());
            let b = m.apply(&x).to_dense();
            let sol = solve_linear(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.apply(&SparseVec::from_dense(&sol)).to_dense(), b);
        }

        #[test]
        fn solve_reproduces_rhs_gf7((r, c, data) in small_matrix(), x in proptest::collection::vec(0i64..7, 8)) {
            let m = Matrix::new(r, c, data.iter().map(|&v| Fp::<7>::from_i64(v)).collect()).unwrap();
            let x = SparseVec::from_dense(&x[..c].iter().map(|&v| Fp::<7>::from_i64(v)).collect::<Vec<_>>());
            let b = m.apply(&x).to_dense();
            let sol = solve_linear(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.apply(&SparseVec::from_dense(&sol)).to_dense(), b);
        }

        #[test]
        fn invertible_iff_trivial_kernel(n in 1usize..=8, data in proptest::collection::vec(-2i64..=2, 64)) {
            let m = Matrix::new(n, n, data[..n * n].iter().map(|&v| q(v)).collect()).unwrap();
            let inv = invert(&m).unwrap();
            prop_assert_eq!(inv.is_some(), kernel_basis(&m).is_empty());
            if let Some(inv) = inv {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
        }

        #[test]
        fn invertible_iff_trivial_kernel_gf3(n in 1usize..=8, data in proptest::collection::vec(0i64..3, 64)) {
            let m = Matrix::new(n, n, data[..n * n].iter().map(|&v| Fp::<3>::from_i64(v)).collect()).unwrap();
            prop_assert_eq!(invert(&m).unwrap().is_some(), kernel_basis(&m).is_empty());
        }
    }
}
