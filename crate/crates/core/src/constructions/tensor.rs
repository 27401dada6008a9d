use std::sync::Arc;

use super::{join_names, kron_all, ConstructionError};
use crate::acted::{make_structure_map, ActedAlgebra, StructureMap};
use crate::algebra::{CrossedUnits, GradedAlgebra};
use crate::bimodule::GradedBimodule;
use crate::group::DirectProduct;
use crate::index::MixedRadix;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::table::StructureTable;

fn tuple_names(radix: &MixedRadix, names: &[&[String]]) -> Vec<String> {
    (0..radix.total())
        .map(|x| {
            let digits = radix.decode(x);
            join_names(digits.iter().zip(names).map(|(&i, n)| n[i].clone()))
        })
        .collect()
}

/// `A₁ ⊗ … ⊗ Aₙ`, graded by `G₁ × … × Gₙ` with
/// `(A₁ ⊗ … ⊗ Aₙ)_{(g₁,…,gₙ)} = A_{1,g₁} ⊗ … ⊗ A_{n,gₙ}`.
pub fn tensor_algebras<F: Scalar>(factors: &[&GradedAlgebra<F>]) -> Result<GradedAlgebra<F>, ConstructionError> {
    if factors.is_empty() {
        return Err(ConstructionError::Empty);
    }
    let product = DirectProduct::new(factors.iter().map(|a| a.group().clone()).collect())?;
    let radix = MixedRadix::new(factors.iter().map(|a| a.dim()).collect());
    let tables: Vec<&StructureTable<F>> = factors.iter().map(|a| a.mult()).collect();
    let mult = StructureTable::kron(&tables);
    let degree = (0..radix.total())
        .map(|x| {
            let digits = radix.decode(x);
            let degs: Vec<usize> = digits.iter().zip(factors).map(|(&i, a)| a.degree(i)).collect();
            product.encode(&degs)
        })
        .collect();
    let names: Vec<&[String]> = factors.iter().map(|a| a.names()).collect();
    let one = kron_all(factors.iter().map(|a| a.one()));
    Ok(GradedAlgebra::from_parts(
        product.group().clone(),
        tuple_names(&radix, &names),
        degree,
        mult,
        one,
    )?)
}

/// `u_{(g₁,…,gₙ)} = u_{1,g₁} ⊗ … ⊗ u_{n,gₙ}` with inverse
/// `u⁻¹_{1,g₁} ⊗ … ⊗ u⁻¹_{n,gₙ}`, both checked in `product`.
pub fn tensor_units<F: Scalar>(
    product: &GradedAlgebra<F>,
    units: &[&CrossedUnits<F>],
) -> Result<CrossedUnits<F>, ConstructionError> {
    let radix = MixedRadix::new(units.iter().map(|u| u.len()).collect());
    let (mut us, mut vs) = (Vec::new(), Vec::new());
    for g in 0..radix.total() {
        let digits = radix.decode(g);
        us.push(kron_all(digits.iter().zip(units).map(|(&h, u)| u.unit(h))));
        vs.push(kron_all(digits.iter().zip(units).map(|(&h, u)| u.inverse(h))));
    }
    Ok(CrossedUnits::with_inverses(product, us, vs)?)
}

/// `C₁ ⊗ … ⊗ Cₙ` acted on by `K₁ × … × Kₙ` factorwise.
pub fn tensor_acted<F: Scalar>(factors: &[&ActedAlgebra<F>]) -> Result<ActedAlgebra<F>, ConstructionError> {
    if factors.is_empty() {
        return Err(ConstructionError::Empty);
    }
    let algebras: Vec<&GradedAlgebra<F>> = factors.iter().map(|c| c.algebra().as_ref()).collect();
    let algebra = tensor_algebras(&algebras)?;
    let acting = DirectProduct::new(factors.iter().map(|c| c.acting_group().clone()).collect())?;
    let grading = MixedRadix::new(factors.iter().map(|c| c.algebra().group().order()).collect());
    let embedding = (0..grading.total())
        .map(|h| {
            let digits = grading.decode(h);
            let images: Vec<usize> = digits.iter().zip(factors).map(|(&x, c)| c.embedding()[x]).collect();
            acting.encode(&images)
        })
        .collect();
    let action = (0..acting.group().order())
        .map(|k| {
            let digits = acting.decode(k);
            digits
                .iter()
                .zip(factors)
                .fold(Matrix::identity(1), |acc, (&x, c)| acc.kron(c.action(x)))
        })
        .collect();
    Ok(ActedAlgebra::new(Arc::new(algebra), acting.group().clone(), embedding, action)?)
}

/// `ζ₁ ⊗ … ⊗ ζₙ` from a fixed tensor source into a fixed tensor target.
pub(crate) fn tensor_structure_maps_over<F: Scalar>(
    source: Arc<ActedAlgebra<F>>,
    target: Arc<GradedAlgebra<F>>,
    factors: &[&StructureMap<F>],
) -> Result<StructureMap<F>, ConstructionError> {
    let zeta = factors.iter().fold(Matrix::identity(1), |acc, z| acc.kron(z.zeta()));
    let units: Vec<&CrossedUnits<F>> = factors.iter().map(|z| z.units()).collect();
    let units = tensor_units(&target, &units)?;
    Ok(make_structure_map(source, target, zeta, units)?)
}

/// `ζ(c₁ ⊗ … ⊗ cₙ) = ζ₁(c₁) ⊗ … ⊗ ζₙ(cₙ)`, revalidated against the tensor
/// source, target and units.
pub fn tensor_structure_maps<F: Scalar>(factors: &[&StructureMap<F>]) -> Result<StructureMap<F>, ConstructionError> {
    if factors.is_empty() {
        return Err(ConstructionError::Empty);
    }
    let sources: Vec<&ActedAlgebra<F>> = factors.iter().map(|z| z.source().as_ref()).collect();
    let targets: Vec<&GradedAlgebra<F>> = factors.iter().map(|z| z.target().as_ref()).collect();
    let source = Arc::new(tensor_acted(&sources)?);
    let target = Arc::new(tensor_algebras(&targets)?);
    tensor_structure_maps_over(source, target, factors)
}

/// Unvalidated data of one structure map.
#[derive(Clone, Debug)]
pub struct StructureMapParts<F: Scalar> {
    pub source: Arc<ActedAlgebra<F>>,
    pub target: Arc<GradedAlgebra<F>>,
    pub zeta: Matrix<F>,
    pub units: CrossedUnits<F>,
}

/// Like [`tensor_structure_maps`], but validates each factor first so that a
/// faulty factor is reported by its position.
pub fn tensor_structure_maps_from_parts<F: Scalar>(
    parts: Vec<StructureMapParts<F>>,
) -> Result<StructureMap<F>, ConstructionError> {
    let maps = parts
        .into_iter()
        .enumerate()
        .map(|(index, p)| {
            make_structure_map(p.source, p.target, p.zeta, p.units)
                .map_err(|error| ConstructionError::Factor { index, error })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&StructureMap<F>> = maps.iter().collect();
    tensor_structure_maps(&refs)
}

/// The outer tensor product `M₁ ⊗ … ⊗ Mₙ` over `(⊗Aᵢ, ⊗A′ᵢ)`, graded by
/// tuples of degrees, as a bimodule over `⊗Cᵢ`.
pub fn tensor_bimodules<F: Scalar>(factors: &[&GradedBimodule<F>]) -> Result<GradedBimodule<F>, ConstructionError> {
    if factors.is_empty() {
        return Err(ConstructionError::Empty);
    }
    let sources: Vec<&ActedAlgebra<F>> = factors.iter().map(|m| m.left().source().as_ref()).collect();
    let source = Arc::new(tensor_acted(&sources)?);
    let lefts: Vec<&StructureMap<F>> = factors.iter().map(|m| m.left().as_ref()).collect();
    let rights: Vec<&StructureMap<F>> = factors.iter().map(|m| m.right().as_ref()).collect();
    let la: Vec<&GradedAlgebra<F>> = factors.iter().map(|m| m.left_algebra().as_ref()).collect();
    let ra: Vec<&GradedAlgebra<F>> = factors.iter().map(|m| m.right_algebra().as_ref()).collect();
    let left = tensor_structure_maps_over(source.clone(), Arc::new(tensor_algebras(&la)?), &lefts)?;
    let right = tensor_structure_maps_over(source, Arc::new(tensor_algebras(&ra)?), &rights)?;

    let radix = MixedRadix::new(factors.iter().map(|m| m.dim()).collect());
    let groups = MixedRadix::new(factors.iter().map(|m| m.group().order()).collect());
    let degree = (0..radix.total())
        .map(|x| {
            let digits = radix.decode(x);
            let degs: Vec<usize> = digits.iter().zip(factors).map(|(&i, m)| m.degree(i)).collect();
            groups.encode(&degs)
        })
        .collect();
    let names: Vec<&[String]> = factors.iter().map(|m| m.names()).collect();
    let lact = StructureTable::kron(&factors.iter().map(|m| m.lact()).collect::<Vec<_>>());
    let ract = StructureTable::kron(&factors.iter().map(|m| m.ract()).collect::<Vec<_>>());
    Ok(GradedBimodule::from_parts(
        Arc::new(left),
        Arc::new(right),
        tuple_names(&radix, &names),
        degree,
        lact,
        ract,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acted::StructureMapError;
    use crate::fixtures;
    use crate::linalg::SparseVec;
    use crate::scalar::{Rational, GF3};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn group_algebra_square() {
        let c2 = fixtures::group_algebra_c2::<Rational>();
        let t = tensor_algebras(&[&c2, &c2]).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.group().order(), 4);
        // component (a,a) is spanned by a⊗a, index 3
        assert_eq!(t.basis_of_degree(3), vec![3]);
        // (a⊗e)·(a⊗a) = e⊗a
        assert_eq!(t.mul(&t.basis(2), &t.basis(3)), t.basis(1));
    }

    #[test]
    fn single_factor_is_a_copy() {
        let m = fixtures::matrix_algebra_c2::<GF3>();
        let t = tensor_algebras(&[&m]).unwrap();
        assert_eq!(t.mult(), m.mult());
        assert_eq!(t.degrees(), m.degrees());
        assert_eq!(t.one(), m.one());
        assert_eq!(tensor_algebras::<GF3>(&[]).unwrap_err(), ConstructionError::Empty);
    }

    #[test]
    fn tensor_units_are_certified() {
        let m = fixtures::matrix_algebra_c2::<Rational>();
        let c3 = fixtures::group_algebra_c3::<Rational>();
        let t = tensor_algebras(&[&m, &c3]).unwrap();
        let um = fixtures::swap_units(&m);
        let uc = crate::algebra::group_algebra_units(&c3);
        let u = tensor_units(&t, &[&um, &uc]).unwrap();
        assert_eq!(u.len(), 6);
        for g in 0..6 {
            assert_eq!(t.mul(u.unit(g), u.inverse(g)), *t.one());
        }
    }

    #[test]
    fn kronecker_action() {
        let c = fixtures::diagonal_acted::<Rational>();
        let t = tensor_acted(&[&c, &c]).unwrap();
        assert_eq!(t.action(3), &c.action(1).kron(c.action(1)));
        assert!(t.action(0).is_identity());
        // (a, e) swaps the first factor only: d1⊗d2 ↦ d2⊗d2
        let x = SparseVec::unit(4, 1);
        assert_eq!(t.act(2, &x), SparseVec::unit(4, 3));
    }

    #[test]
    fn identity_structure_maps() {
        let z = fixtures::regular_structure_map(fixtures::group_algebra_c2::<Rational>());
        let t = tensor_structure_maps(&[&z, &z]).unwrap();
        assert!(t.zeta().is_identity());
        assert_eq!(t.target().dim(), 4);
    }

    #[test]
    fn corrupted_factor_is_named() {
        let good = fixtures::regular_structure_map(fixtures::group_algebra_c2::<Rational>());
        let parts = |z: &StructureMap<Rational>| StructureMapParts {
            source: z.source().clone(),
            target: z.target().clone(),
            zeta: z.zeta().clone(),
            units: z.units().clone(),
        };
        let mut bad = parts(&good);
        bad.zeta = bad.zeta.scale(&q(2));
        let err = tensor_structure_maps_from_parts(vec![parts(&good), bad]).unwrap_err();
        assert_eq!(
            err,
            ConstructionError::Factor {
                index: 1,
                error: StructureMapError::Homomorphism { i: 0, j: 0 }
            }
        );
        assert!(err.to_string().starts_with("factor 1:"));
    }

    #[test]
    fn bimodule_dimensions_multiply() {
        let a = fixtures::regular_c2_bimodule::<Rational>();
        let row = fixtures::row_module::<Rational>();
        let t = tensor_bimodules(&[&a, &row]).unwrap();
        assert_eq!(t.dim(), 8);
        let aa = tensor_bimodules(&[&a, &a]).unwrap();
        let reg = GradedBimodule::regular(aa.left().clone()).unwrap();
        assert_eq!(aa.lact(), reg.lact());
        assert_eq!(aa.ract(), reg.ract());
        assert_eq!(aa.degrees(), reg.degrees());
    }
}
