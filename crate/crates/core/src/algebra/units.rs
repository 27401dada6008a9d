use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::GradedAlgebra;
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnitError {
    #[error("expected {expected} units, got {found}")]
    Count { expected: usize, found: usize },
    #[error("unit for degree {degree} has length {found}, expected {expected}")]
    Length {
        degree: usize,
        expected: usize,
        found: usize,
    },
    #[error("unit for degree {degree} is not homogeneous of that degree")]
    NotHomogeneous { degree: usize },
    #[error("unit for degree {degree} has no two-sided inverse in the algebra")]
    NotInvertible { degree: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnitSearchFailure {
    /// `A_g = 0`: there is definitely no unit of this degree.
    #[error("component of degree {degree} is zero, so the algebra is not a crossed product")]
    EmptyComponent { degree: usize },
    #[error("no invertible element of degree {degree} found after {tried} candidates (not certified)")]
    NotCertified { degree: usize, tried: usize },
}

/// One invertible homogeneous element `u_g ∈ A_g` per group element, with
/// its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedUnits<F> {
    units: Vec<SparseVec<F>>,
    inverses: Vec<SparseVec<F>>,
}

impl<F: Scalar> CrossedUnits<F> {
    /// Checks that `units[g]` is homogeneous of degree `g` and invertible in
    /// `A`, computing the inverses.
    pub fn certify(a: &GradedAlgebra<F>, units: Vec<SparseVec<F>>) -> Result<Self, UnitError> {
        let order = a.group().order();
        if units.len() != order {
            return Err(UnitError::Count {
                expected: order,
                found: units.len(),
            });
        }
        let inverses = units
            .par_iter()
            .enumerate()
            .map(|(g, u)| check_unit(a, g, u))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CrossedUnits { units, inverses })
    }

    /// Checks units together with claimed inverses: each `units[g]` must be
    /// homogeneous of degree `g` and `units[g]·inverses[g] = inverses[g]·units[g] = 1`.
    pub fn with_inverses(
        a: &GradedAlgebra<F>,
        units: Vec<SparseVec<F>>,
        inverses: Vec<SparseVec<F>>,
    ) -> Result<Self, UnitError> {
        let order = a.group().order();
        for found in [units.len(), inverses.len()] {
            if found != order {
                return Err(UnitError::Count { expected: order, found });
            }
        }
        crate::check::sweep(order, |g| {
            let (u, v) = (&units[g], &inverses[g]);
            if u.dim() != a.dim() || v.dim() != a.dim() {
                return Some(UnitError::Length {
                    degree: g,
                    expected: a.dim(),
                    found: u.dim().max(v.dim()),
                });
            }
            if a.homogeneous_degree(u) != Some(g) {
                return Some(UnitError::NotHomogeneous { degree: g });
            }
            (a.mul(u, v) != *a.one() || a.mul(v, u) != *a.one()).then_some(UnitError::NotInvertible { degree: g })
        })?;
        Ok(CrossedUnits { units, inverses })
    }

    pub fn unit(&self, g: usize) -> &SparseVec<F> {
        &self.units[g]
    }

    pub fn inverse(&self, g: usize) -> &SparseVec<F> {
        &self.inverses[g]
    }

    pub fn units(&self) -> &[SparseVec<F>] {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    /// `x ↦ u_g x u_g⁻¹`.
    pub fn conjugate(&self, a: &GradedAlgebra<F>, g: usize, x: &SparseVec<F>) -> SparseVec<F> {
        a.mul(&a.mul(&self.units[g], x), &self.inverses[g])
    }
}

fn check_unit<F: Scalar>(a: &GradedAlgebra<F>, g: usize, u: &SparseVec<F>) -> Result<SparseVec<F>, UnitError> {
    if u.dim() != a.dim() {
        return Err(UnitError::Length {
            degree: g,
            expected: a.dim(),
            found: u.dim(),
        });
    }
    if a.homogeneous_degree(u) != Some(g) {
        return Err(UnitError::NotHomogeneous { degree: g });
    }
    a.inverse_of(u).ok_or(UnitError::NotInvertible { degree: g })
}

/// Searches for crossed-product units. For each degree `g` it tries the hint,
/// then `1` if `g = e`, then each basis vector of `A_g`, then `trials` random elements of `A_g`.
/// Degree `g` draws from its own ChaCha8 stream of `seed`, so the outcome does
/// not depend on how degrees are scheduled. A failed search is reported as
/// not certified; only `A_g = 0` is a definite negative.
pub fn is_crossed_product<F: Scalar>(
    a: &GradedAlgebra<F>,
    hints: &BTreeMap<usize, SparseVec<F>>,
    trials: usize,
    seed: u64,
) -> Result<CrossedUnits<F>, UnitSearchFailure> {
    let order = a.group().order();
    let found: Vec<Result<_, UnitSearchFailure>> = (0..order)
        .into_par_iter()
        .map(|g| search_degree(a, g, hints.get(&g), trials, seed))
        .collect();
    let mut units = Vec::with_capacity(order);
    let mut inverses = Vec::with_capacity(order);
    for r in found {
        let (u, v) = r?;
        units.push(u);
        inverses.push(v);
    }
    Ok(CrossedUnits { units, inverses })
}

fn search_degree<F: Scalar>(
    a: &GradedAlgebra<F>,
    g: usize,
    hint: Option<&SparseVec<F>>,
    trials: usize,
    seed: u64,
) -> Result<(SparseVec<F>, SparseVec<F>), UnitSearchFailure> {
    let basis = a.basis_of_degree(g);
    if basis.is_empty() {
        return Err(UnitSearchFailure::EmptyComponent { degree: g });
    }
    let mut tried = 0;
    let mut attempt = |u: SparseVec<F>| {
        tried += 1;
        check_unit(a, g, &u).ok().map(|v| (u, v))
    };
    if let Some(h) = hint {
        if let Some(r) = attempt(h.clone()) {
            return Ok(r);
        }
    }
    if g == a.group().identity() {
        if let Some(r) = attempt(a.one().clone()) {
            return Ok(r);
        }
    }
    for &i in &basis {
        if let Some(r) = attempt(a.basis(i)) {
            return Ok(r);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(g as u64);
    for _ in 0..trials {
        let u = SparseVec::from_entries(a.dim(), basis.iter().map(|&i| (i, F::random(&mut rng))));
        if let Some(r) = attempt(u) {
            return Ok(r);
        }
    }
    Err(UnitSearchFailure::NotCertified { degree: g, tried })
}
