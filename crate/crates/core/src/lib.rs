//! Group-graded algebras, graded bimodules over graded acted algebras, their
//! tensor and wreath products, and exact verification of graded Morita
//! equivalences.
//!
//! Everything is generic over an exact [`Scalar`] field: the rationals
//! ([`Rational`]) or a prime field [`Fp<P>`](scalar::Fp). Objects are
//! validated on construction and immutable afterwards.
//!
//! ```
//! use morita_core::{fixtures, verify_morita, Rational};
//!
//! let row = fixtures::row_module::<Rational>();
//! let report = verify_morita(&row, 0, 64).unwrap();
//! assert!(report.certified());
//! ```

pub mod acted;
pub mod algebra;
pub mod bimodule;
mod check;
pub mod constructions;
pub mod fixtures;
pub mod group;
pub mod index;
pub mod linalg;
pub mod scalar;
pub mod table;

pub use acted::{attach_action, induced_centralizer_action, make_structure_map, ActedAlgebra, StructureMap};
pub use algebra::{
    centralizer, component, group_algebra, is_crossed_product, make_graded_algebra, opposite, CrossedUnits,
    GradedAlgebra, Subspace,
};
pub use constructions::{
    compare_induced, iso_f, iso_g, oracle_group_algebra, tensor_acted, tensor_algebras, tensor_bimodules,
    tensor_structure_maps, tensor_units, wreath_acted, wreath_algebra, wreath_bimodule, wreath_structure_map, wreath_units,
    ConstructionError,
    InducedIso,
};
pub use bimodule::{dual, find_isomorphism, hom_space, make_bimodule, tensor_over, verify_morita, GradedBimodule, IsoVerdict};
pub use group::{direct_product, symmetric_group, tuple_permute, wreath_group, FiniteGroup, Permutation, WreathElement};
pub use linalg::{invert, kernel_basis, solve_linear, Matrix, SparseVec};
pub use scalar::{Field, Fp, Rational, Scalar, GF2, GF3, GF5, GF7};

pub type AlgebraQ = GradedAlgebra<Rational>;
pub type ActedAlgebraQ = ActedAlgebra<Rational>;
pub type StructureMapQ = StructureMap<Rational>;
pub type BimoduleQ = GradedBimodule<Rational>;
pub type MatrixQ = Matrix<Rational>;
