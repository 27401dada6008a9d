//! Ḡ-graded algebras by structure constants.

mod ops;
mod subspace;
mod units;

pub use ops::{centralizer, component, group_algebra, group_algebra_units, identity_component_subalgebra, opposite};
pub use subspace::Subspace;
pub use units::{is_crossed_product, CrossedUnits, UnitError, UnitSearchFailure};

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::check::{first_difference, sweep, EXHAUSTIVE_TRIPLES};
use crate::group::FiniteGroup;
use crate::linalg::{solve_linear, Echelon, Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::table::{StructureTable, TableError};

/// An algebra element as a coefficient vector over the homogeneous basis.
pub type AlgebraElement<F> = SparseVec<F>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("the zero ring is not allowed (1 ≠ 0)")]
    ZeroDimension,
    #[error("{0}")]
    Shape(String),
    #[error("basis element {basis} has degree {degree}, but the grading group has order {order}")]
    DegreeOutOfRange {
        basis: usize,
        degree: usize,
        order: usize,
    },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("grading violated: e{i}·e{j} has a component on e{k} of degree {found}, expected degree {expected}")]
    Grading {
        i: usize,
        j: usize,
        k: usize,
        expected: usize,
        found: usize,
    },
    #[error("associativity fails on basis triple ({i}, {j}, {k}): coordinate {coord} of (e{i}e{j})e{k} is {left}, of e{i}(e{j}e{k}) is {right}")]
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        coord: usize,
        left: String,
        right: String,
    },
    #[error("the unit has support on basis element {basis} of degree {degree}, outside the identity component")]
    UnitDegree { basis: usize, degree: usize },
    #[error("1·e{basis} ≠ e{basis}")]
    LeftUnit { basis: usize },
    #[error("e{basis}·1 ≠ e{basis}")]
    RightUnit { basis: usize },
}

/// Raw, unvalidated algebra data.
#[derive(Clone, Debug)]
pub struct AlgebraSpec<F> {
    pub group: Arc<FiniteGroup>,
    pub names: Vec<String>,
    pub degree: Vec<usize>,
    pub mult: Vec<(usize, usize, usize, F)>,
    pub one: Vec<F>,
}

/// A validated finite-dimensional Ḡ-graded algebra with a homogeneous basis.
#[derive(Clone)]
pub struct GradedAlgebra<F> {
    group: Arc<FiniteGroup>,
    names: Vec<String>,
    degree: Vec<usize>,
    mult: StructureTable<F>,
    one: SparseVec<F>,
    generators: OnceLock<Vec<usize>>,
}

impl<F: Scalar> PartialEq for GradedAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
            && self.degree == other.degree
            && self.mult == other.mult
            && self.one == other.one
    }
}

impl<F: Scalar> Eq for GradedAlgebra<F> {}

impl<F: Scalar> fmt::Debug for GradedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedAlgebra")
            .field("dim", &self.dim())
            .field("group_order", &self.group.order())
            .field("nnz", &self.mult.nnz())
            .finish()
    }
}

/// Validates raw algebra data.
pub fn make_graded_algebra<F: Scalar>(spec: AlgebraSpec<F>) -> Result<GradedAlgebra<F>, AlgebraError> {
    let dim = spec.degree.len();
    if spec.one.len() != dim {
        return Err(AlgebraError::Shape(format!(
            "unit has {} coefficients for dimension {dim}",
            spec.one.len()
        )));
    }
    let mult = StructureTable::from_quadruples(dim, dim, dim, spec.mult)?;
    GradedAlgebra::from_parts(
        spec.group,
        spec.names,
        spec.degree,
        mult,
        SparseVec::from_dense(&spec.one),
    )
}

impl<F: Scalar> GradedAlgebra<F> {
    /// Validates the grading, associativity and unit axioms.
    pub fn from_parts(
        group: Arc<FiniteGroup>,
        names: Vec<String>,
        degree: Vec<usize>,
        mult: StructureTable<F>,
        one: SparseVec<F>,
    ) -> Result<Self, AlgebraError> {
        let dim = degree.len();
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if names.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "{} basis names for dimension {dim}",
                names.len()
            )));
        }
        if mult.left_dim() != dim || mult.right_dim() != dim || mult.out_dim() != dim {
            return Err(AlgebraError::Shape(format!(
                "multiplication table shape {}x{}->{} for dimension {dim}",
                mult.left_dim(),
                mult.right_dim(),
                mult.out_dim()
            )));
        }
        if one.dim() != dim {
            return Err(AlgebraError::Shape(format!(
                "unit has length {} for dimension {dim}",
                one.dim()
            )));
        }
        if let Some(b) = degree.iter().position(|&d| d >= group.order()) {
            return Err(AlgebraError::DegreeOutOfRange {
                basis: b,
                degree: degree[b],
                order: group.order(),
            });
        }
        let a = GradedAlgebra {
            group,
            names,
            degree,
            mult,
            one,
            generators: OnceLock::new(),
        };
        a.check_grading()?;
        let d = a.dim();
        if d * d * d <= EXHAUSTIVE_TRIPLES {
            a.check_associativity(&(0..d).collect::<Vec<_>>())?;
            a.check_unit()?;
        } else {
            // the generator shortcut needs the unit law first
            a.check_unit()?;
            a.check_associativity(a.generators())?;
        }
        Ok(a)
    }

    fn check_grading(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        sweep(d, |i| {
            (0..d).find_map(|j| {
                let expected = self.group.mul(self.degree[i], self.degree[j]);
                self.mult
                    .cell(i, j)
                    .support()
                    .find(|&k| self.degree[k] != expected)
                    .map(|k| AlgebraError::Grading {
                        i,
                        j,
                        k,
                        expected,
                        found: self.degree[k],
                    })
            })
        })
    }

    /// `(x·y)·z = x·(y·z)` for all basis `x, y` and `z` in `ks`.
    fn check_associativity(&self, ks: &[usize]) -> Result<(), AlgebraError> {
        let d = self.dim();
        sweep(d, |i| {
            for j in 0..d {
                let ij = self.mult.cell(i, j);
                for &k in ks {
                    let left = self.mult.right_basis(ij, k);
                    let right = self.mult.left_basis(i, self.mult.cell(j, k));
                    if let Some((coord, l, r)) = first_difference(&left, &right) {
                        return Some(AlgebraError::Associativity {
                            i,
                            j,
                            k,
                            coord,
                            left: l,
                            right: r,
                        });
                    }
                }
            }
            None
        })
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        let e = self.group.identity();
        if let Some((b, _)) = self.one.entries().iter().find(|(b, _)| self.degree[*b] != e) {
            return Err(AlgebraError::UnitDegree {
                basis: *b,
                degree: self.degree[*b],
            });
        }
        sweep(self.dim(), |i| {
            let ei = SparseVec::unit(self.dim(), i);
            if self.mult.apply(&self.one, &ei) != ei {
                return Some(AlgebraError::LeftUnit { basis: i });
            }
            if self.mult.apply(&ei, &self.one) != ei {
                return Some(AlgebraError::RightUnit { basis: i });
            }
            None
        })
    }

    pub fn dim(&self) -> usize {
        self.degree.len()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn mult(&self) -> &StructureTable<F> {
        &self.mult
    }

    pub fn one(&self) -> &SparseVec<F> {
        &self.one
    }

    pub fn basis(&self, i: usize) -> SparseVec<F> {
        SparseVec::unit(self.dim(), i)
    }

    pub fn mul(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        self.mult.apply(x, y)
    }

    /// Basis indices of degree `g`.
    pub fn basis_of_degree(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree[i] == g).collect()
    }

    /// Degree of `x` if it is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, x: &SparseVec<F>) -> Option<usize> {
        let mut degs = x.support().map(|i| self.degree[i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul_matrix(&self, x: &SparseVec<F>) -> Matrix<F> {
        let cols: Vec<SparseVec<F>> = (0..self.dim())
            .map(|j| self.mult.right_basis(x, j))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul_matrix(&self, x: &SparseVec<F>) -> Matrix<F> {
        let cols: Vec<SparseVec<F>> = (0..self.dim())
            .map(|j| self.mult.left_basis(j, x))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Two-sided inverse in the whole algebra: solves `x·y = 1` and
    /// `z·x = 1` and confirms both.
    pub fn inverse_of(&self, x: &SparseVec<F>) -> Option<SparseVec<F>> {
        let one = self.one.to_dense();
        let y = solve_linear(&self.left_mul_matrix(x), &one).ok()??;
        let y = SparseVec::from_dense(&y);
        let z = solve_linear(&self.right_mul_matrix(x), &one).ok()??;
        let z = SparseVec::from_dense(&z);
        (y == z && self.mul(x, &y) == self.one && self.mul(&y, x) == self.one).then_some(y)
    }

    /// A set of basis elements generating the algebra, chosen greedily in
    /// index order. Cached.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| self.compute_generators())
    }

    fn compute_generators(&self) -> Vec<usize> {
        let d = self.dim();
        let mut span = Echelon::new(d);
        let mut words: Vec<SparseVec<F>> = Vec::new();
        let mut gens: Vec<usize> = Vec::new();
        span.insert(&self.one);
        words.push(self.one.clone());
        for i in 0..d {
            if span.rank() == d {
                break;
            }
            if span.contains(&self.basis(i)) {
                continue;
            }
            gens.push(i);
            let mut queue: VecDeque<SparseVec<F>> =
                words.iter().map(|w| self.mult.right_basis(w, i)).collect();
            while let Some(w) = queue.pop_front() {
                if span.insert(&w).is_some() {
                    for &g in &gens {
                        queue.push_back(self.mult.right_basis(&w, g));
                    }
                    words.push(w);
                }
            }
        }
        gens
    }

    pub fn to_spec(&self) -> AlgebraSpec<F> {
        AlgebraSpec {
            group: self.group.clone(),
            names: self.names.clone(),
            degree: self.degree.clone(),
            mult: self.mult.quadruples(),
            one: self.one.to_dense(),
        }
    }
}
