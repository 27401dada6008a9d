//! Tensor products and wreath products of graded algebras, acted algebras,
//! structure maps and bimodules, and the two isomorphisms identifying the
//! wreath product of a bimodule with modules induced from its identity
//! component.
//!
//! Every tensor basis is ordered as row-major tuples, leftmost factor
//! slowest. A wreath basis vector `(x₁ ⊗ … ⊗ xₙ) ⊗ σ` has index
//! `tuple · n! + rank(σ)`, with permutations ranked lexicographically. The
//! wreath group uses the same coordinates, so the group algebra of `Ḡ ≀ Sₙ`
//! and `F[Ḡ] ≀ Sₙ` have identical indices.

mod iso;
mod tensor;
mod wreath;

pub use iso::{compare_induced, iso_f, iso_f_with_units, iso_g, iso_g_with_units, InducedIso, Side};
pub use tensor::{
    tensor_acted, tensor_algebras, tensor_bimodules, tensor_structure_maps, tensor_structure_maps_from_parts,
    tensor_units, StructureMapParts,
};
pub use wreath::{
    oracle_group_algebra, wreath_acted, wreath_algebra, wreath_bimodule, wreath_structure_map, wreath_units,
    OracleDiff,
};

use thiserror::Error;

use crate::acted::{ActedError, StructureMapError};
use crate::algebra::{AlgebraError, UnitError};
use crate::bimodule::{BimoduleError, MapError};
use crate::group::GroupError;
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("a tensor product needs at least one factor")]
    Empty,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Acted(#[from] ActedError),
    #[error(transparent)]
    StructureMap(#[from] StructureMapError),
    #[error("factor {index}: {error}")]
    Factor { index: usize, error: StructureMapError },
    #[error(transparent)]
    Units(#[from] UnitError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("{what} leaves the identity component")]
    OutsideIdentityComponent { what: String },
    #[error("induced module has dimension {induced}, the wreath product {wreath}")]
    DimensionMismatch { induced: usize, wreath: usize },
    #[error("the comparison map is singular")]
    Singular,
    #[error("the comparison map does not vanish on balancing relation {relation}")]
    RelationNotKilled { relation: usize },
    #[error("acting by generator {generator} does not preserve balancing relation {relation}")]
    NotWellDefined { relation: usize, generator: usize },
    #[error("the explicit preimage of basis vector {basis} does not map back to it")]
    Preimage { basis: usize },
}

/// `v₁ ⊗ … ⊗ vₖ`; the empty product is the scalar `1`.
pub(crate) fn kron_all<'a, F: Scalar + 'a>(vs: impl IntoIterator<Item = &'a SparseVec<F>>) -> SparseVec<F> {
    let mut acc = SparseVec::unit(1, 0);
    for v in vs {
        acc = acc.kron(v);
    }
    acc
}

pub(crate) fn join_names(names: impl IntoIterator<Item = String>) -> String {
    names.into_iter().collect::<Vec<_>>().join("⊗")
}
