//! Graded bimodules over acted algebras: validation, duals, tensor products
//! over the middle algebra, hom spaces, isomorphism certificates and Morita
//! verification.

mod dual;
mod hom;
mod tensor;

pub use dual::dual;
pub use hom::{find_isomorphism, hom_space, verify_morita, BimoduleMap, IsoVerdict, MapError, MoritaReport, MoritaSide};
pub use tensor::{balanced_relations, tensor_over, TensorQuotient};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::acted::{ActedAlgebra, StructureMap};
use crate::algebra::GradedAlgebra;
use crate::check::{first_difference, slot, sweep, EXHAUSTIVE_TRIPLES};
use crate::group::FiniteGroup;
use crate::linalg::SparseVec;
use crate::scalar::Scalar;
use crate::table::{StructureTable, TableError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BimoduleError {
    #[error("left and right structure maps have different sources C")]
    SourceMismatch,
    #[error("left and right algebras are graded by different groups")]
    GroupMismatch,
    #[error("the middle algebras (with their structure maps) do not agree")]
    MiddleMismatch,
    #[error("{0}")]
    Shape(String),
    #[error("basis element m{basis} has degree {degree}, but the grading group has order {order}")]
    DegreeOutOfRange {
        basis: usize,
        degree: usize,
        order: usize,
    },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("grading violated: a{a}·m{m} has a component on m{k} of degree {found}, expected degree {expected}")]
    LeftGrading {
        a: usize,
        m: usize,
        k: usize,
        expected: usize,
        found: usize,
    },
    #[error("grading violated: m{m}·a'{a} has a component on m{k} of degree {found}, expected degree {expected}")]
    RightGrading {
        m: usize,
        a: usize,
        k: usize,
        expected: usize,
        found: usize,
    },
    #[error("left module axiom fails on (a{i}, a{j}, m{m}): coordinate {coord} of (a{i}a{j})m{m} is {left}, of a{i}(a{j}m{m}) is {right}")]
    LeftAssociativity {
        i: usize,
        j: usize,
        m: usize,
        coord: usize,
        left: String,
        right: String,
    },
    #[error("1·m{m} ≠ m{m}")]
    LeftUnit { m: usize },
    #[error("right module axiom fails on (m{m}, a'{i}, a'{j}): coordinate {coord} of m{m}(a'{i}a'{j}) is {left}, of (m{m}a'{i})a'{j} is {right}")]
    RightAssociativity {
        m: usize,
        i: usize,
        j: usize,
        coord: usize,
        left: String,
        right: String,
    },
    #[error("m{m}·1 ≠ m{m}")]
    RightUnit { m: usize },
    #[error("bimodule compatibility fails on (a{a}, m{m}, a'{b}): coordinate {coord} of (a{a}m{m})a'{b} is {left}, of a{a}(m{m}a'{b}) is {right}")]
    Compatibility {
        a: usize,
        m: usize,
        b: usize,
        coord: usize,
        left: String,
        right: String,
    },
    #[error("over-C condition fails for m{m} of degree {degree} and c{c}: coordinate {coord} of m·ζ'(c) is {left}, of ζ(^g c)·m is {right}")]
    OverC {
        m: usize,
        c: usize,
        degree: usize,
        coord: usize,
        left: String,
        right: String,
    },
}

/// Raw, unvalidated bimodule data.
#[derive(Clone, Debug)]
pub struct BimoduleSpec<F: Scalar> {
    pub left: Arc<StructureMap<F>>,
    pub right: Arc<StructureMap<F>>,
    pub names: Vec<String>,
    pub degree: Vec<usize>,
    pub lact: Vec<(usize, usize, usize, F)>,
    pub ract: Vec<(usize, usize, usize, F)>,
}

/// A validated graded `(A, A′)`-bimodule over `C`.
#[derive(Clone)]
pub struct GradedBimodule<F> {
    left: Arc<StructureMap<F>>,
    right: Arc<StructureMap<F>>,
    names: Vec<String>,
    degree: Vec<usize>,
    lact: StructureTable<F>,
    ract: StructureTable<F>,
}

impl<F: Scalar> PartialEq for GradedBimodule<F> {
    fn eq(&self, other: &Self) -> bool {
        same_map(&self.left, &other.left)
            && same_map(&self.right, &other.right)
            && self.degree == other.degree
            && self.lact == other.lact
            && self.ract == other.ract
    }
}

impl<F: Scalar> Eq for GradedBimodule<F> {}

impl<F: Scalar> fmt::Debug for GradedBimodule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedBimodule")
            .field("dim", &self.dim())
            .field("left_dim", &self.left_algebra().dim())
            .field("right_dim", &self.right_algebra().dim())
            .finish()
    }
}

pub(crate) fn same_map<F: Scalar>(a: &Arc<StructureMap<F>>, b: &Arc<StructureMap<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn same_source<F: Scalar>(a: &Arc<ActedAlgebra<F>>, b: &Arc<ActedAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn make_bimodule<F: Scalar>(spec: BimoduleSpec<F>) -> Result<GradedBimodule<F>, BimoduleError> {
    if !same_source(spec.left.source(), spec.right.source()) {
        return Err(BimoduleError::SourceMismatch);
    }
    let dm = spec.degree.len();
    let (da, db) = (spec.left.target().dim(), spec.right.target().dim());
    let lact = StructureTable::from_quadruples(da, dm, dm, spec.lact)?;
    let ract = StructureTable::from_quadruples(dm, db, dm, spec.ract)?;
    GradedBimodule::from_parts(spec.left, spec.right, spec.names, spec.degree, lact, ract)
}

impl<F: Scalar> GradedBimodule<F> {
    pub fn from_parts(
        left: Arc<StructureMap<F>>,
        right: Arc<StructureMap<F>>,
        names: Vec<String>,
        degree: Vec<usize>,
        lact: StructureTable<F>,
        ract: StructureTable<F>,
    ) -> Result<Self, BimoduleError> {
        if !same_source(left.source(), right.source()) {
            return Err(BimoduleError::SourceMismatch);
        }
        if **left.target().group() != **right.target().group() {
            return Err(BimoduleError::GroupMismatch);
        }
        let dm = degree.len();
        let (da, db) = (left.target().dim(), right.target().dim());
        if names.len() != dm {
            return Err(BimoduleError::Shape(format!("{} basis names for dimension {dm}", names.len())));
        }
        if (lact.left_dim(), lact.right_dim(), lact.out_dim()) != (da, dm, dm) {
            return Err(BimoduleError::Shape(format!(
                "left action table is {}x{}->{}, expected {da}x{dm}->{dm}",
                lact.left_dim(),
                lact.right_dim(),
                lact.out_dim()
            )));
        }
        if (ract.left_dim(), ract.right_dim(), ract.out_dim()) != (dm, db, dm) {
            return Err(BimoduleError::Shape(format!(
                "right action table is {}x{}->{}, expected {dm}x{db}->{dm}",
                ract.left_dim(),
                ract.right_dim(),
                ract.out_dim()
            )));
        }
        let order = left.target().group().order();
        if let Some(b) = degree.iter().position(|&d| d >= order) {
            return Err(BimoduleError::DegreeOutOfRange {
                basis: b,
                degree: degree[b],
                order,
            });
        }
        let m = GradedBimodule {
            left,
            right,
            names,
            degree,
            lact,
            ract,
        };
        m.check_grading()?;
        m.check_module_axioms()?;
        m.check_over_c()?;
        Ok(m)
    }

    fn check_grading(&self) -> Result<(), BimoduleError> {
        let g = self.group();
        let (a, b) = (self.left_algebra(), self.right_algebra());
        let dm = self.dim();
        sweep(dm, |m| {
            for i in 0..a.dim() {
                let expected = g.mul(a.degree(i), self.degree[m]);
                if let Some(k) = self.lact.cell(i, m).support().find(|&k| self.degree[k] != expected) {
                    return Some(BimoduleError::LeftGrading {
                        a: i,
                        m,
                        k,
                        expected,
                        found: self.degree[k],
                    });
                }
            }
            for j in 0..b.dim() {
                let expected = g.mul(self.degree[m], b.degree(j));
                if let Some(k) = self.ract.cell(m, j).support().find(|&k| self.degree[k] != expected) {
                    return Some(BimoduleError::RightGrading {
                        m,
                        a: j,
                        k,
                        expected,
                        found: self.degree[k],
                    });
                }
            }
            None
        })
    }

    fn check_module_axioms(&self) -> Result<(), BimoduleError> {
        let (a, b) = (self.left_algebra(), self.right_algebra());
        let (dm, da, db) = (self.dim(), a.dim(), b.dim());
        // the outer factor on the left and the inner one on the right may be
        // restricted to generators once the unit laws hold
        let la = slot(da, da * da * dm, || a.generators().to_vec());
        let rb = slot(db, db * db * dm, || b.generators().to_vec());
        let (ca, cb) = if da * db * dm <= EXHAUSTIVE_TRIPLES {
            ((0..da).collect(), (0..db).collect())
        } else {
            (a.generators().to_vec(), b.generators().to_vec())
        };
        sweep(dm, |m| {
            let em = SparseVec::unit(dm, m);
            if self.act_left(a.one(), &em) != em {
                return Some(BimoduleError::LeftUnit { m });
            }
            if self.act_right(&em, b.one()) != em {
                return Some(BimoduleError::RightUnit { m });
            }
            for &i in &la {
                for j in 0..da {
                    let left = self.act_left(a.mult().cell(i, j), &em);
                    let right = self.lact.left_basis(i, self.lact.cell(j, m));
                    if let Some((coord, l, r)) = first_difference(&left, &right) {
                        return Some(BimoduleError::LeftAssociativity {
                            i,
                            j,
                            m,
                            coord,
                            left: l,
                            right: r,
                        });
                    }
                }
            }
            for i in 0..db {
                let mi = self.ract.cell(m, i);
                for &j in &rb {
                    let left = self.act_right(&em, b.mult().cell(i, j));
                    let right = self.ract.right_basis(mi, j);
                    if let Some((coord, l, r)) = first_difference(&left, &right) {
                        return Some(BimoduleError::RightAssociativity {
                            m,
                            i,
                            j,
                            coord,
                            left: l,
                            right: r,
                        });
                    }
                }
            }
            for &i in &ca {
                let am = self.lact.cell(i, m);
                for &j in &cb {
                    let left = self.ract.right_basis(am, j);
                    let right = self.lact.left_basis(i, self.ract.cell(m, j));
                    if let Some((coord, l, r)) = first_difference(&left, &right) {
                        return Some(BimoduleError::Compatibility {
                            a: i,
                            m,
                            b: j,
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

    fn check_over_c(&self) -> Result<(), BimoduleError> {
        let c = self.left.source();
        let dc = c.algebra().dim();
        let dm = self.dim();
        sweep(dm, |m| {
            let em = SparseVec::unit(dm, m);
            let g = self.degree[m];
            (0..dc).find_map(|k| {
                let ck = c.algebra().basis(k);
                let left = self.act_right(&em, &self.right.apply(&ck));
                let right = self.act_left(&self.left.apply(&c.act(g, &ck)), &em);
                first_difference(&left, &right).map(|(coord, l, r)| BimoduleError::OverC {
                    m,
                    c: k,
                    degree: g,
                    coord,
                    left: l,
                    right: r,
                })
            })
        })
    }

    /// `A` as an `(A, A)`-bimodule over `C`.
    pub fn regular(z: Arc<StructureMap<F>>) -> Result<Self, BimoduleError> {
        let a = z.target().clone();
        Self::from_parts(
            z.clone(),
            z,
            a.names().to_vec(),
            a.degrees().to_vec(),
            a.mult().clone(),
            a.mult().clone(),
        )
    }

    /// `M ⊕ N` with the basis of `M` first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, BimoduleError> {
        if !same_map(&self.left, &other.left) || !same_map(&self.right, &other.right) {
            return Err(BimoduleError::MiddleMismatch);
        }
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 + d2;
        let lact = StructureTable::from_fn(self.left_algebra().dim(), d, d, |i, m| {
            if m < d1 {
                self.lact.cell(i, m).reindex(d, |k| k)
            } else {
                other.lact.cell(i, m - d1).reindex(d, |k| k + d1)
            }
        });
        let ract = StructureTable::from_fn(d, self.right_algebra().dim(), d, |m, j| {
            if m < d1 {
                self.ract.cell(m, j).reindex(d, |k| k)
            } else {
                other.ract.cell(m - d1, j).reindex(d, |k| k + d1)
            }
        });
        let names = self
            .names
            .iter()
            .map(|n| format!("{n}⊕0"))
            .chain(other.names.iter().map(|n| format!("0⊕{n}")))
            .collect();
        let degree = self.degree.iter().chain(&other.degree).copied().collect();
        Self::from_parts(self.left.clone(), self.right.clone(), names, degree, lact, ract)
    }

    pub fn dim(&self) -> usize {
        self.degree.len()
    }

    pub fn left(&self) -> &Arc<StructureMap<F>> {
        &self.left
    }

    pub fn right(&self) -> &Arc<StructureMap<F>> {
        &self.right
    }

    pub fn left_algebra(&self) -> &Arc<GradedAlgebra<F>> {
        self.left.target()
    }

    pub fn right_algebra(&self) -> &Arc<GradedAlgebra<F>> {
        self.right.target()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.left.target().group()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, m: usize) -> usize {
        self.degree[m]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn lact(&self) -> &StructureTable<F> {
        &self.lact
    }

    pub fn ract(&self) -> &StructureTable<F> {
        &self.ract
    }

    pub fn basis(&self, m: usize) -> SparseVec<F> {
        SparseVec::unit(self.dim(), m)
    }

    pub fn act_left(&self, a: &SparseVec<F>, m: &SparseVec<F>) -> SparseVec<F> {
        self.lact.apply(a, m)
    }

    pub fn act_right(&self, m: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        self.ract.apply(m, b)
    }

    /// Basis indices of the identity component.
    pub fn identity_component(&self) -> Vec<usize> {
        let e = self.group().identity();
        (0..self.dim()).filter(|&m| self.degree[m] == e).collect()
    }

    pub fn to_spec(&self) -> BimoduleSpec<F> {
        BimoduleSpec {
            left: self.left.clone(),
            right: self.right.clone(),
            names: self.names.clone(),
            degree: self.degree.clone(),
            lact: self.lact.quadruples(),
            ract: self.ract.quadruples(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::{Rational, GF5};

    #[test]
    fn regular_bimodule_accepted() {
        let m = fixtures::regular_c2_bimodule::<Rational>();
        assert_eq!(m.dim(), 2);
        let m5 = fixtures::regular_c2_bimodule::<GF5>();
        assert_eq!(m5.identity_component(), vec![0]);
    }

    #[test]
    fn row_module_accepted() {
        let m = fixtures::row_module::<Rational>();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.right_algebra().dim(), 8);
        assert_eq!(m.identity_component().len(), 2);
    }

    #[test]
    fn corrupted_degree_label_rejected() {
        let m = fixtures::row_module::<Rational>();
        let mut spec = m.to_spec();
        spec.degree[0] = 1 - spec.degree[0];
        let err = make_bimodule(spec).unwrap_err();
        assert!(
            matches!(err, BimoduleError::LeftGrading { .. } | BimoduleError::RightGrading { .. }),
            "{err}"
        );
    }

    #[test]
    fn corrupted_action_constant_rejected() {
        let m = fixtures::regular_c2_bimodule::<Rational>();
        let mut spec = m.to_spec();
        // a·a = e becomes a·a = 2e on the left
        let slot = spec.lact.iter().position(|&(i, j, _, _)| i == 1 && j == 1).unwrap();
        spec.lact[slot].3 = Rational::from_i64(2);
        let err = make_bimodule(spec).unwrap_err();
        assert!(matches!(err, BimoduleError::LeftAssociativity { .. }), "{err}");
    }

    #[test]
    fn over_c_violation_detected() {
        // F[C2] with the right action twisted by the automorphism a ↦ -a is a
        // graded bimodule, but m·ζ'(a) = -m·a while ζ(a)·m = a·m.
        let m = fixtures::regular_c2_bimodule::<Rational>();
        let mut spec = m.to_spec();
        for q in spec.ract.iter_mut() {
            if q.1 == 1 {
                q.3 = -q.3.clone();
            }
        }
        let err = make_bimodule(spec).unwrap_err();
        assert!(matches!(err, BimoduleError::OverC { m: 0, c: 1, .. }), "{err}");
    }

    #[test]
    fn mismatched_sources_rejected() {
        let z = Arc::new(fixtures::matrix_structure_map::<Rational>());
        let m = GradedBimodule::regular(z).unwrap();
        let mut spec = m.to_spec();
        spec.right = Arc::new(fixtures::regular_structure_map::<Rational>(fixtures::group_algebra_c2()));
        assert_eq!(make_bimodule(spec).unwrap_err(), BimoduleError::SourceMismatch);
    }

    #[test]
    fn direct_sum_dims() {
        let m = fixtures::regular_c2_bimodule::<Rational>();
        let s = m.direct_sum(&m).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.degrees(), &[0, 1, 0, 1]);
    }
}
