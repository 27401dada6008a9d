//! Graded algebras with a group action by automorphisms, and structure maps
//! `ζ: C → C_A(B)` that make a graded algebra `A` an algebra over `C`.
//!
//! The acting group `K` may be larger than the grading group `H` of `C`; an
//! injective homomorphism `H → K` identifies `H` with a normal subgroup, and
//! `K` acts on degrees by conjugation. For a plain acted algebra both groups
//! coincide. The wreath construction is the case where they do not.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{centralizer, component, CrossedUnits, GradedAlgebra, Subspace};
use crate::check::sweep;
use crate::group::FiniteGroup;
use crate::linalg::{invert, Matrix, SparseVec};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActedError {
    #[error("the embedding of the grading group is not an injective homomorphism into the acting group")]
    Embedding,
    #[error("expected one action matrix per acting-group element ({expected}), got {found}")]
    Count { expected: usize, found: usize },
    #[error("action matrix of element {g} is {rows}x{cols}, expected {dim}x{dim}")]
    Shape {
        g: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("action matrix of element {g} is singular")]
    Singular { g: usize },
    #[error("grading compatibility fails: element {g} sends basis c{basis} of degree {degree} outside degree {expected}")]
    Grading {
        g: usize,
        basis: usize,
        degree: usize,
        expected: String,
    },
    #[error("the identity element does not act as the identity")]
    Identity,
    #[error("action law fails: act({g})·act({h}) ≠ act({g}·{h})")]
    Composition { g: usize, h: usize },
    #[error("element {g} is not multiplicative on basis pair (c{i}, c{j})")]
    Automorphism { g: usize, i: usize, j: usize },
    #[error("element {g} does not fix the unit")]
    Unital { g: usize },
    #[error("conjugation by the unit of degree {g} does not preserve the centralizer")]
    CentralizerNotPreserved { g: usize },
}

/// A graded algebra `C` with a left action of `K` by algebra automorphisms
/// compatible with the grading: `^g(C_h) ⊆ C_{ghg⁻¹}`.
#[derive(Clone)]
pub struct ActedAlgebra<F> {
    algebra: Arc<GradedAlgebra<F>>,
    acting: Arc<FiniteGroup>,
    embedding: Vec<usize>,
    action: Vec<Matrix<F>>,
}

impl<F: Scalar> PartialEq for ActedAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.acting == other.acting
            && self.embedding == other.embedding
            && self.action == other.action
    }
}

impl<F: Scalar> Eq for ActedAlgebra<F> {}

impl<F: Scalar> fmt::Debug for ActedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActedAlgebra")
            .field("dim", &self.algebra.dim())
            .field("acting_order", &self.acting.order())
            .finish()
    }
}

/// Attaches an action of the grading group itself.
pub fn attach_action<F: Scalar>(c: Arc<GradedAlgebra<F>>, matrices: Vec<Matrix<F>>) -> Result<ActedAlgebra<F>, ActedError> {
    let k = c.group().clone();
    let embedding = (0..k.order()).collect();
    ActedAlgebra::new(c, k, embedding, matrices)
}

impl<F: Scalar> ActedAlgebra<F> {
    pub fn new(
        algebra: Arc<GradedAlgebra<F>>,
        acting: Arc<FiniteGroup>,
        embedding: Vec<usize>,
        action: Vec<Matrix<F>>,
    ) -> Result<Self, ActedError> {
        if !algebra.group().is_embedding_into(&acting, &embedding) {
            return Err(ActedError::Embedding);
        }
        if action.len() != acting.order() {
            return Err(ActedError::Count {
                expected: acting.order(),
                found: action.len(),
            });
        }
        let d = algebra.dim();
        for (g, m) in action.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(ActedError::Shape {
                    g,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim: d,
                });
            }
        }
        sweep(action.len(), |g| {
            invert(&action[g])
                .expect("square")
                .is_none()
                .then_some(ActedError::Singular { g })
        })?;
        let c = ActedAlgebra {
            algebra,
            acting,
            embedding,
            action,
        };
        c.check_grading()?;
        c.check_action_laws()?;
        c.check_automorphisms()?;
        Ok(c)
    }

    /// Trivial action of `acting` on `c`, with `c` graded by a subgroup
    /// via `embedding`.
    pub fn trivial(c: Arc<GradedAlgebra<F>>, acting: Arc<FiniteGroup>, embedding: Vec<usize>) -> Result<Self, ActedError> {
        let action = vec![Matrix::identity(c.dim()); acting.order()];
        Self::new(c, acting, embedding, action)
    }

    /// The ground field as an algebra graded by the trivial group and acted
    /// on trivially by `acting`.
    pub fn scalars(acting: Arc<FiniteGroup>) -> Self {
        let trivial = Arc::new(FiniteGroup::trivial());
        let f = crate::algebra::group_algebra(&trivial);
        let e = acting.identity();
        Self::trivial(Arc::new(f), acting, vec![e]).expect("scalars carry the trivial action")
    }

    /// Degree of `^g c` for `c` of degree `h`, if it lies in the grading group.
    pub fn act_on_degree(&self, g: usize, h: usize) -> Option<usize> {
        let target = self.acting.conjugate(g, self.embedding[h]);
        self.embedding.iter().position(|&x| x == target)
    }

    fn check_grading(&self) -> Result<(), ActedError> {
        let d = self.algebra.dim();
        sweep(self.acting.order(), |g| {
            (0..d).find_map(|i| {
                let h = self.algebra.degree(i);
                let image = self.action[g].column(i);
                let expected = self.act_on_degree(g, h);
                let ok = match expected {
                    Some(x) => image.support().all(|k| self.algebra.degree(k) == x),
                    None => false,
                };
                (!ok).then(|| ActedError::Grading {
                    g,
                    basis: i,
                    degree: h,
                    expected: match expected {
                        Some(x) => x.to_string(),
                        None => format!("{} (not in the grading group)", self.acting.conjugate(g, self.embedding[h])),
                    },
                })
            })
        })
    }

    fn check_action_laws(&self) -> Result<(), ActedError> {
        if !self.action[self.acting.identity()].is_identity() {
            return Err(ActedError::Identity);
        }
        let k = self.acting.order();
        sweep(k, |g| {
            (0..k).find_map(|h| {
                let lhs = self.action[g].mul(&self.action[h]).expect("square");
                (lhs != self.action[self.acting.mul(g, h)]).then_some(ActedError::Composition { g, h })
            })
        })
    }

    fn check_automorphisms(&self) -> Result<(), ActedError> {
        let a = &self.algebra;
        let d = a.dim();
        sweep(self.acting.order(), |g| {
            let m = &self.action[g];
            let cols = m.columns();
            for i in 0..d {
                for j in 0..d {
                    let lhs = m.apply(a.mult().cell(i, j));
                    let rhs = a.mul(&cols[i], &cols[j]);
                    if lhs != rhs {
                        return Some(ActedError::Automorphism { g, i, j });
                    }
                }
            }
            (m.apply(a.one()) != *a.one()).then_some(ActedError::Unital { g })
        })
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra<F>> {
        &self.algebra
    }

    pub fn acting_group(&self) -> &Arc<FiniteGroup> {
        &self.acting
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn action(&self, g: usize) -> &Matrix<F> {
        &self.action[g]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.action
    }

    pub fn act(&self, g: usize, c: &SparseVec<F>) -> SparseVec<F> {
        self.action[g].apply(c)
    }
}

/// The action of the acting group on `C_A(B)` by conjugation with crossed
/// product units, in the echelon basis of the centralizer.
#[derive(Clone, Debug)]
pub struct CentralizerAction<F: Scalar> {
    pub centralizer: Subspace<F>,
    pub matrices: Vec<Matrix<F>>,
}

pub fn induced_centralizer_action<F: Scalar>(
    a: &GradedAlgebra<F>,
    units: &CrossedUnits<F>,
) -> Result<CentralizerAction<F>, ActedError> {
    let b = component(a, a.group().identity());
    let cab = centralizer(a, &b);
    let k = cab.dim();
    let matrices = (0..a.group().order())
        .map(|g| {
            let cols = cab
                .basis()
                .iter()
                .map(|x| {
                    let y = units.conjugate(a, g, x);
                    cab.coordinates(&y)
                        .map(|c| SparseVec::from_dense(&c))
                        .ok_or(ActedError::CentralizerNotPreserved { g })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Matrix::from_columns(k, &cols))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CentralizerAction {
        centralizer: cab,
        matrices,
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureMapError {
    #[error("the target algebra is graded by a different group than the one acting on C")]
    GroupMismatch,
    #[error("ζ is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("ζ is not multiplicative on basis pair (c{i}, c{j})")]
    Homomorphism { i: usize, j: usize },
    #[error("ζ(1) ≠ 1")]
    Unital,
    #[error("ζ(c{basis}) is not homogeneous of degree {expected}")]
    Degree { basis: usize, expected: usize },
    #[error("ζ(c{basis}) does not commute with basis element a{b} of the identity component")]
    Centralizer { basis: usize, b: usize },
    #[error("equivariance fails: ζ(^{g} c{basis}) ≠ u_{g} ζ(c{basis}) u_{g}⁻¹")]
    Equivariance { g: usize, basis: usize },
}

/// `ζ: C → C_A(B)`: a unital, degree-preserving, equivariant homomorphism.
/// The action on `C_A(B)` is conjugation by the supplied units.
#[derive(Clone)]
pub struct StructureMap<F> {
    source: Arc<ActedAlgebra<F>>,
    target: Arc<GradedAlgebra<F>>,
    zeta: Matrix<F>,
    units: CrossedUnits<F>,
}

impl<F: Scalar> PartialEq for StructureMap<F> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.zeta == other.zeta
            && self.units == other.units
    }
}

impl<F: Scalar> Eq for StructureMap<F> {}

impl<F: Scalar> fmt::Debug for StructureMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureMap")
            .field("source_dim", &self.source.algebra().dim())
            .field("target_dim", &self.target.dim())
            .finish()
    }
}

pub fn make_structure_map<F: Scalar>(
    source: Arc<ActedAlgebra<F>>,
    target: Arc<GradedAlgebra<F>>,
    zeta: Matrix<F>,
    units: CrossedUnits<F>,
) -> Result<StructureMap<F>, StructureMapError> {
    if **target.group() != **source.acting_group() {
        return Err(StructureMapError::GroupMismatch);
    }
    let (dc, da) = (source.algebra().dim(), target.dim());
    if zeta.rows() != da || zeta.cols() != dc {
        return Err(StructureMapError::Shape {
            rows: zeta.rows(),
            cols: zeta.cols(),
            expected_rows: da,
            expected_cols: dc,
        });
    }
    let s = StructureMap {
        source,
        target,
        zeta,
        units,
    };
    s.validate()?;
    Ok(s)
}

impl<F: Scalar> StructureMap<F> {
    fn validate(&self) -> Result<(), StructureMapError> {
        let c = self.source.algebra();
        let a = &self.target;
        let dc = c.dim();
        let images = self.zeta.columns();
        sweep(dc, |i| {
            (0..dc).find_map(|j| {
                let lhs = self.zeta.apply(c.mult().cell(i, j));
                let rhs = a.mul(&images[i], &images[j]);
                (lhs != rhs).then_some(StructureMapError::Homomorphism { i, j })
            })
        })?;
        if self.zeta.apply(c.one()) != *a.one() {
            return Err(StructureMapError::Unital);
        }
        let emb = self.source.embedding();
        for (i, z) in images.iter().enumerate() {
            let expected = emb[c.degree(i)];
            if z.support().any(|k| a.degree(k) != expected) {
                return Err(StructureMapError::Degree { basis: i, expected });
            }
        }
        let b = a.basis_of_degree(a.group().identity());
        sweep(dc, |i| {
            b.iter().find_map(|&k| {
                let bk = a.basis(k);
                (a.mul(&images[i], &bk) != a.mul(&bk, &images[i]))
                    .then_some(StructureMapError::Centralizer { basis: i, b: k })
            })
        })?;
        sweep(self.source.acting_group().order(), |g| {
            (0..dc).find_map(|i| {
                let lhs = self.zeta.apply(&self.source.action(g).column(i));
                let rhs = self.units.conjugate(a, g, &images[i]);
                (lhs != rhs).then_some(StructureMapError::Equivariance { g, basis: i })
            })
        })
    }

    pub fn source(&self) -> &Arc<ActedAlgebra<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedAlgebra<F>> {
        &self.target
    }

    pub fn zeta(&self) -> &Matrix<F> {
        &self.zeta
    }

    pub fn units(&self) -> &CrossedUnits<F> {
        &self.units
    }

    pub fn apply(&self, c: &SparseVec<F>) -> SparseVec<F> {
        self.zeta.apply(c)
    }

    /// The same map with different crossed-product units, revalidated.
    pub fn with_units(&self, units: CrossedUnits<F>) -> Result<Self, StructureMapError> {
        make_structure_map(self.source.clone(), self.target.clone(), self.zeta.clone(), units)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra_units, is_crossed_product};
    use crate::fixtures;
    use crate::scalar::Rational;
    use std::collections::BTreeMap;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn trivial_and_conjugation_actions_accepted() {
        let c2 = Arc::new(fixtures::group_algebra_c2::<Rational>());
        let id = vec![Matrix::identity(2); 2];
        assert!(attach_action(c2.clone(), id).is_ok());
        // conjugation by group elements of an abelian group is trivial
        let u = group_algebra_units(&c2);
        let conj: Vec<Matrix<Rational>> = (0..2)
            .map(|g| {
                let cols: Vec<_> = (0..2).map(|i| u.conjugate(&c2, g, &c2.basis(i))).collect();
                Matrix::from_columns(2, &cols)
            })
            .collect();
        assert!(conj.iter().all(|m| m.is_identity()));
        assert!(attach_action(c2, conj).is_ok());
    }

    #[test]
    fn diagonal_swap_action_accepted() {
        let c = fixtures::diagonal_acted::<Rational>();
        assert!(!c.action(1).is_identity());
    }

    #[test]
    fn degree_swapping_action_rejected() {
        // on F[C2], swapping e and a moves degree e to degree a
        let c2 = Arc::new(fixtures::group_algebra_c2::<Rational>());
        let swap = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        let err = attach_action(c2, vec![Matrix::identity(2), swap]).unwrap_err();
        assert!(matches!(err, ActedError::Grading { g: 1, .. }), "{err}");
    }

    #[test]
    fn action_law_faults() {
        let c = fixtures::diagonal_acted::<Rational>();
        let alg = c.algebra().clone();
        let sing = Matrix::zeros(2, 2);
        assert_eq!(
            attach_action(alg.clone(), vec![Matrix::identity(2), sing]).unwrap_err(),
            ActedError::Singular { g: 1 }
        );
        // -1 on the unit: an invertible, grading-compatible map that is not an automorphism
        let neg = Matrix::identity(2).scale(&q(-1));
        let err = attach_action(alg.clone(), vec![neg.clone(), neg]).unwrap_err();
        assert_eq!(err, ActedError::Identity);
        let scaled = Matrix::from_rows(vec![vec![q(2), q(0)], vec![q(0), q(1)]]).unwrap();
        let err = attach_action(alg, vec![Matrix::identity(2), scaled]).unwrap_err();
        assert_eq!(err, ActedError::Composition { g: 1, h: 1 });
    }

    #[test]
    fn induced_action_on_centralizer() {
        let m = fixtures::matrix_algebra_c2::<Rational>();
        let swap = SparseVec::from_dense(&[q(0), q(1), q(1), q(0)]);
        let units = is_crossed_product(&m, &BTreeMap::from([(1, swap)]), 0, 0).unwrap();
        let act = induced_centralizer_action(&m, &units).unwrap();
        assert_eq!(act.centralizer.dim(), 2);
        // the swap exchanges E11 and E22
        let expected = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(act.matrices[1], expected);
        assert!(act.matrices[0].is_identity());
        // a different unit, b·u with b = diag(2, 3) ∈ B, induces the same action
        let b = SparseVec::from_dense(&[q(2), q(0), q(0), q(3)]);
        let u2 = CrossedUnits::certify(
            &m,
            vec![m.one().clone(), m.mul(&b, units.unit(1))],
        )
        .unwrap();
        let act2 = induced_centralizer_action(&m, &u2).unwrap();
        assert_eq!(act2.matrices, act.matrices);
        // left action law
        assert_eq!(act.matrices[1].mul(&act.matrices[1]).unwrap(), act.matrices[0]);
    }

    #[test]
    fn induced_action_full_conjugation_when_b_is_scalars() {
        let c3 = fixtures::group_algebra_c3::<Rational>();
        let u = group_algebra_units(&c3);
        let act = induced_centralizer_action(&c3, &u).unwrap();
        assert_eq!(act.centralizer.dim(), 3);
        assert!(act.matrices.iter().all(|m| m.is_identity()));
    }

    #[test]
    fn identity_structure_map_accepted() {
        let z = fixtures::regular_structure_map::<Rational>(fixtures::group_algebra_c2());
        assert!(z.zeta().is_identity());
    }

    #[test]
    fn scalar_structure_map_accepted() {
        for a in [
            fixtures::matrix_algebra_c2::<Rational>(),
            fixtures::group_algebra_c3(),
            fixtures::group_algebra_c2(),
        ] {
            let units = is_crossed_product(&a, &BTreeMap::new(), 16, 0).unwrap();
            let c = Arc::new(ActedAlgebra::scalars(a.group().clone()));
            let zeta = Matrix::from_columns(a.dim(), &[a.one().clone()]);
            assert!(make_structure_map(c, Arc::new(a), zeta, units).is_ok());
        }
    }

    #[test]
    fn rescaled_zeta_rejected() {
        let z = fixtures::regular_structure_map::<Rational>(fixtures::group_algebra_c2());
        let mut zeta = z.zeta().clone();
        zeta.set(1, 1, q(2));
        let err = make_structure_map(z.source().clone(), z.target().clone(), zeta, z.units().clone()).unwrap_err();
        assert_eq!(err, StructureMapError::Homomorphism { i: 1, j: 1 });
    }

    #[test]
    fn matrix_structure_map_and_faults() {
        let z = fixtures::matrix_structure_map::<Rational>();
        // dropping the swap from the action breaks equivariance
        let c = z.source();
        let trivial = ActedAlgebra::trivial(c.algebra().clone(), c.acting_group().clone(), c.embedding().to_vec()).unwrap();
        let err = make_structure_map(Arc::new(trivial), z.target().clone(), z.zeta().clone(), z.units().clone()).unwrap_err();
        assert_eq!(err, StructureMapError::Equivariance { g: 1, basis: 0 });
    }

    #[test]
    fn centralizer_violation_detected() {
        // C = F[C2] with trivial action mapped identically into M₂ graded
        // trivially would not centralize B = M₂; build C = F×F into M₂(F)
        // trivially graded: the diagonal does not commute with E12.
        let m = Arc::new(fixtures::matrix_algebra_trivial::<Rational>());
        let d = Arc::new(fixtures::diagonal_algebra_trivial::<Rational>());
        let units = is_crossed_product(&m, &BTreeMap::from([(0, m.one().clone())]), 0, 0).unwrap();
        let c = Arc::new(ActedAlgebra::trivial(d, m.group().clone(), vec![0]).unwrap());
        let mut zeta = Matrix::zeros(4, 2);
        zeta.set(0, 0, q(1));
        zeta.set(3, 1, q(1));
        let err = make_structure_map(c, m, zeta, units).unwrap_err();
        assert_eq!(err, StructureMapError::Centralizer { basis: 0, b: 1 });
    }
}
