//! Small reference objects: group algebras of C2 and C3, the 2×2 matrix
//! algebra graded by C2, the row module over `(F[C2], M₂(F[C2]))`, and the
//! column and row modules that realize the Morita equivalence of `M₂(F)`
//! and `F`.
//!
//! Matrix units `E_ij` are indexed `2i + j` (0-based).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::acted::{attach_action, make_structure_map, ActedAlgebra, StructureMap};
use crate::algebra::{group_algebra, group_algebra_units, is_crossed_product, CrossedUnits, GradedAlgebra};
use crate::bimodule::GradedBimodule;
use crate::group::FiniteGroup;
use crate::linalg::{Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::table::StructureTable;

fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).expect("n > 0"))
}

fn trivial_group() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::trivial())
}

pub fn group_algebra_c2<F: Scalar>() -> GradedAlgebra<F> {
    group_algebra(&cyclic(2))
}

pub fn group_algebra_c3<F: Scalar>() -> GradedAlgebra<F> {
    group_algebra(&cyclic(3))
}

fn matrix_units<F: Scalar>(group: Arc<FiniteGroup>, degree: Vec<usize>) -> GradedAlgebra<F> {
    let mult = StructureTable::from_fn(4, 4, 4, |x, y| {
        let (i, j, k, l) = (x / 2, x % 2, y / 2, y % 2);
        if j == k {
            SparseVec::unit(4, 2 * i + l)
        } else {
            SparseVec::zero(4)
        }
    });
    let names = ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect();
    let one = SparseVec::from_entries(4, [(0, F::one()), (3, F::one())]);
    GradedAlgebra::from_parts(group, names, degree, mult, one).expect("M₂ is a graded algebra")
}

/// `M₂(F)` graded by C2: diagonal in degree e, antidiagonal in degree a.
pub fn matrix_algebra_c2<F: Scalar>() -> GradedAlgebra<F> {
    matrix_units(cyclic(2), vec![0, 1, 1, 0])
}

/// `M₂(F)` graded by the trivial group.
pub fn matrix_algebra_trivial<F: Scalar>() -> GradedAlgebra<F> {
    matrix_units(trivial_group(), vec![0; 4])
}

fn diagonal<F: Scalar>(group: Arc<FiniteGroup>) -> GradedAlgebra<F> {
    let mult = StructureTable::from_fn(2, 2, 2, |i, j| {
        if i == j {
            SparseVec::unit(2, i)
        } else {
            SparseVec::zero(2)
        }
    });
    let names = vec!["d1".to_string(), "d2".to_string()];
    let one = SparseVec::from_dense(&[F::one(), F::one()]);
    GradedAlgebra::from_parts(group, names, vec![0, 0], mult, one).expect("F×F is an algebra")
}

/// `F × F` graded by the trivial group.
pub fn diagonal_algebra_trivial<F: Scalar>() -> GradedAlgebra<F> {
    diagonal(trivial_group())
}

fn swap<F: Scalar>() -> Matrix<F> {
    Matrix::from_rows(vec![vec![F::zero(), F::one()], vec![F::one(), F::zero()]]).expect("2x2")
}

/// `C = F × F` concentrated in degree e of C2, with `a` swapping the factors.
pub fn diagonal_acted<F: Scalar>() -> ActedAlgebra<F> {
    attach_action(Arc::new(diagonal(cyclic(2))), vec![Matrix::identity(2), swap()]).expect("swap is an action")
}

/// Units `1` and the swap matrix `E12 + E21` of the C2-graded `M₂(F)`.
pub fn swap_units<F: Scalar>(m: &GradedAlgebra<F>) -> CrossedUnits<F> {
    let s = SparseVec::from_entries(4, [(1, F::one()), (2, F::one())]);
    CrossedUnits::certify(m, vec![m.one().clone(), s]).expect("the swap matrix is a unit")
}

/// The diagonal `F × F ⊂ M₂(F)` as `C`, with the swap as crossed-product unit.
pub fn matrix_structure_map<F: Scalar>() -> StructureMap<F> {
    let m = matrix_algebra_c2::<F>();
    let units = swap_units(&m);
    let mut zeta = Matrix::zeros(4, 2);
    zeta.set(0, 0, F::one());
    zeta.set(3, 1, F::one());
    make_structure_map(Arc::new(diagonal_acted()), Arc::new(m), zeta, units).expect("inclusion of the diagonal")
}

/// `ζ = id: A → A` for a commutative algebra graded by an abelian group,
/// with `A` acted on trivially.
pub fn regular_structure_map<F: Scalar>(a: GradedAlgebra<F>) -> StructureMap<F> {
    let a = Arc::new(a);
    let units = is_crossed_product(&a, &BTreeMap::new(), 64, 0).expect("a crossed product");
    let k = a.group().clone();
    let c = ActedAlgebra::trivial(a.clone(), k.clone(), (0..k.order()).collect()).expect("trivial action");
    make_structure_map(Arc::new(c), a.clone(), Matrix::identity(a.dim()), units).expect("identity structure map")
}

/// `F[C2]` as a bimodule over itself, over `C = F[C2]`.
pub fn regular_c2_bimodule<F: Scalar>() -> GradedBimodule<F> {
    GradedBimodule::regular(Arc::new(regular_structure_map(group_algebra_c2()))).expect("regular bimodule")
}

/// The zero `(F[C2], F[C2])`-bimodule.
pub fn zero_c2_bimodule<F: Scalar>() -> GradedBimodule<F> {
    let z = Arc::new(regular_structure_map(group_algebra_c2()));
    GradedBimodule::from_parts(
        z.clone(),
        z,
        vec![],
        vec![],
        StructureTable::zero(2, 0, 0),
        StructureTable::zero(0, 2, 0),
    )
    .expect("zero module")
}

/// `M₂(F[C2]) = M₂(F) ⊗ F[C2]`, graded by the degree of the entries. Basis
/// `E_ij ⊗ g` has index `(2i + j)·2 + g`.
pub fn matrix_over_c2<F: Scalar>() -> GradedAlgebra<F> {
    let g = cyclic(2);
    let mult = StructureTable::from_fn(8, 8, 8, |x, y| {
        let (ij, g1, kl, g2) = (x / 2, x % 2, y / 2, y % 2);
        let (i, j, k, l) = (ij / 2, ij % 2, kl / 2, kl % 2);
        if j == k {
            SparseVec::unit(8, (2 * i + l) * 2 + (g1 + g2) % 2)
        } else {
            SparseVec::zero(8)
        }
    });
    let names = (0..8)
        .map(|x| format!("E{}{}⊗{}", x / 4 + 1, (x / 2) % 2 + 1, g.name(x % 2)))
        .collect();
    let degree = (0..8).map(|x| x % 2).collect();
    let one = SparseVec::from_entries(8, [(0, F::one()), (6, F::one())]);
    GradedAlgebra::from_parts(g, names, degree, mult, one).expect("M₂(F[C2]) is graded")
}

fn c2_acted_trivially<F: Scalar>() -> Arc<ActedAlgebra<F>> {
    let c = Arc::new(group_algebra_c2::<F>());
    Arc::new(ActedAlgebra::trivial(c, cyclic(2), vec![0, 1]).expect("trivial action"))
}

/// `ζ′(c) = c·I` into `M₂(F[C2])`, with units `g·I`.
pub fn scalar_matrix_structure_map<F: Scalar>() -> StructureMap<F> {
    let a = matrix_over_c2::<F>();
    let diag = |g: usize| SparseVec::from_entries(8, [(g, F::one()), (6 + g, F::one())]);
    let zeta = Matrix::from_columns(8, &[diag(0), diag(1)]);
    let units = CrossedUnits::certify(&a, vec![diag(0), diag(1)]).expect("g·I is a unit");
    make_structure_map(c2_acted_trivially(), Arc::new(a), zeta, units).expect("scalar matrices")
}

/// The row space `F[C2]^{1×2}` over `(F[C2], M₂(F[C2]))`, over `C = F[C2]`.
/// Basis `e_k ⊗ g` has index `2k + g` and degree `g`.
pub fn row_module<F: Scalar>() -> GradedBimodule<F> {
    let left = Arc::new(regular_structure_map(group_algebra_c2::<F>()));
    let right = Arc::new(scalar_matrix_structure_map::<F>());
    let lact = StructureTable::from_fn(2, 4, 4, |h, m| {
        let (k, g) = (m / 2, m % 2);
        SparseVec::unit(4, 2 * k + (h + g) % 2)
    });
    let ract = StructureTable::from_fn(4, 8, 4, |m, x| {
        let (k, g) = (m / 2, m % 2);
        let (ij, h) = (x / 2, x % 2);
        let (i, j) = (ij / 2, ij % 2);
        if k == i {
            SparseVec::unit(4, 2 * j + (g + h) % 2)
        } else {
            SparseVec::zero(4)
        }
    });
    let names = (0..4).map(|m| format!("r{}⊗{}", m / 2 + 1, if m % 2 == 0 { "e" } else { "a" })).collect();
    GradedBimodule::from_parts(left, right, names, vec![0, 1, 0, 1], lact, ract).expect("row module")
}

fn scalar_maps<F: Scalar>() -> (Arc<StructureMap<F>>, Arc<StructureMap<F>>) {
    let c = Arc::new(ActedAlgebra::scalars(trivial_group()));
    let m = Arc::new(matrix_algebra_trivial::<F>());
    let mu = CrossedUnits::certify(&m, vec![m.one().clone()]).expect("identity is a unit");
    let zm = make_structure_map(c.clone(), m.clone(), Matrix::from_columns(4, &[m.one().clone()]), mu).expect("scalars");
    let f = Arc::new(group_algebra::<F>(&trivial_group()));
    let fu = group_algebra_units(&f);
    let zf = make_structure_map(c, f, Matrix::identity(1), fu).expect("identity");
    (Arc::new(zm), Arc::new(zf))
}

/// Columns `F²` over `(M₂(F), F)`, trivially graded.
pub fn column_module<F: Scalar>() -> GradedBimodule<F> {
    let (zm, zf) = scalar_maps::<F>();
    let lact = StructureTable::from_fn(4, 2, 2, |x, k| {
        let (i, j) = (x / 2, x % 2);
        if j == k {
            SparseVec::unit(2, i)
        } else {
            SparseVec::zero(2)
        }
    });
    let ract = StructureTable::from_fn(2, 1, 2, |k, _| SparseVec::unit(2, k));
    GradedBimodule::from_parts(zm, zf, vec!["c1".into(), "c2".into()], vec![0, 0], lact, ract).expect("column module")
}

/// Rows `F^{1×2}` over `(F, M₂(F))`, trivially graded.
pub fn row_module_trivial<F: Scalar>() -> GradedBimodule<F> {
    let (zm, zf) = scalar_maps::<F>();
    let lact = StructureTable::from_fn(1, 2, 2, |_, k| SparseVec::unit(2, k));
    let ract = StructureTable::from_fn(2, 4, 2, |k, x| {
        let (i, j) = (x / 2, x % 2);
        if k == i {
            SparseVec::unit(2, j)
        } else {
            SparseVec::zero(2)
        }
    });
    GradedBimodule::from_parts(zf, zm, vec!["r1".into(), "r2".into()], vec![0, 0], lact, ract).expect("row module")
}
