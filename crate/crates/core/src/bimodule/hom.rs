use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::{dual, same_map, tensor_over, BimoduleError, GradedBimodule};
use crate::check::sweep;
use crate::linalg::{invert, Echelon, Matrix, SparseVec};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("map is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("φ(m{m}) has a component on n{n} of a different degree")]
    Degree { m: usize, n: usize },
    #[error("φ(a{a}·m{m}) ≠ a{a}·φ(m{m})")]
    Left { a: usize, m: usize },
    #[error("φ(m{m}·a'{a}) ≠ φ(m{m})·a'{a}")]
    Right { m: usize, a: usize },
    #[error("the claimed inverse does not invert the map")]
    NotInverse,
}

/// A degree-preserving bimodule homomorphism; column `i` is the image of
/// the `i`-th basis vector of the source.
#[derive(Clone, Debug)]
pub struct BimoduleMap<F: Scalar> {
    source: Arc<GradedBimodule<F>>,
    target: Arc<GradedBimodule<F>>,
    matrix: Matrix<F>,
}

impl<F: Scalar> BimoduleMap<F> {
    /// Checks shape, degrees and both intertwining laws on every basis pair.
    pub fn new(source: Arc<GradedBimodule<F>>, target: Arc<GradedBimodule<F>>, matrix: Matrix<F>) -> Result<Self, MapError> {
        let map = BimoduleMap {
            source,
            target,
            matrix,
        };
        map.check()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: Arc<GradedBimodule<F>>, target: Arc<GradedBimodule<F>>, matrix: Matrix<F>) -> Self {
        BimoduleMap {
            source,
            target,
            matrix,
        }
    }

    pub fn check(&self) -> Result<(), MapError> {
        let (m, n, phi) = (&self.source, &self.target, &self.matrix);
        if phi.rows() != n.dim() || phi.cols() != m.dim() {
            return Err(MapError::Shape {
                rows: phi.rows(),
                cols: phi.cols(),
                expected_rows: n.dim(),
                expected_cols: m.dim(),
            });
        }
        let cols = phi.columns();
        for (i, c) in cols.iter().enumerate() {
            if let Some(k) = c.support().find(|&k| n.degree(k) != m.degree(i)) {
                return Err(MapError::Degree { m: i, n: k });
            }
        }
        let (da, db) = (m.left_algebra().dim(), m.right_algebra().dim());
        sweep(m.dim(), |i| {
            for a in 0..da {
                if phi.apply(m.lact().cell(a, i)) != n.lact().left_basis(a, &cols[i]) {
                    return Some(MapError::Left { a, m: i });
                }
            }
            for b in 0..db {
                if phi.apply(m.ract().cell(i, b)) != n.ract().right_basis(&cols[i], b) {
                    return Some(MapError::Right { m: i, a: b });
                }
            }
            None
        })
    }

    pub fn source(&self) -> &Arc<GradedBimodule<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedBimodule<F>> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.matrix.apply(v)
    }
}

/// Basis of the graded bimodule homomorphisms `M → N`, solved from the
/// intertwining constraints for algebra generators on both sides.
pub fn hom_space<F: Scalar>(
    m: &Arc<GradedBimodule<F>>,
    n: &Arc<GradedBimodule<F>>,
) -> Result<Vec<BimoduleMap<F>>, BimoduleError> {
    if !same_map(m.left(), n.left()) || !same_map(m.right(), n.right()) {
        return Err(BimoduleError::MiddleMismatch);
    }
    let (dm, dn) = (m.dim(), n.dim());
    // unknown x_{ij}: coefficient of n_j in φ(m_i), only for equal degrees
    let mut var = vec![usize::MAX; dm * dn];
    let mut nvars = 0;
    for i in 0..dm {
        for j in 0..dn {
            if m.degree(i) == n.degree(j) {
                var[i * dn + j] = nvars;
                nvars += 1;
            }
        }
    }
    let var = &var;
    let lgens = m.left_algebra().generators().to_vec();
    let rgens = m.right_algebra().generators().to_vec();
    let nl = lgens.len() * dm;
    let blocks: Vec<Vec<SparseVec<F>>> = (0..nl + rgens.len() * dm)
        .into_par_iter()
        .map(|x| {
            let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); dn];
            // image of m_i under the generator, and the generator applied to each n_j
            let (image, i, acted): (&SparseVec<F>, usize, Vec<&SparseVec<F>>) = if x < nl {
                let (s, i) = (lgens[x / dm], x % dm);
                (m.lact().cell(s, i), i, (0..dn).map(|j| n.lact().cell(s, j)).collect())
            } else {
                let (t, i) = (rgens[(x - nl) / dm], (x - nl) % dm);
                (m.ract().cell(i, t), i, (0..dn).map(|j| n.ract().cell(j, t)).collect())
            };
            // φ(s·m_i) − s·φ(m_i), resp. φ(m_i·t) − φ(m_i)·t, coordinate l
            for (ip, c) in image.entries() {
                for (l, row) in rows.iter_mut().enumerate() {
                    let v = var[ip * dn + l];
                    if v != usize::MAX {
                        row.push((v, c.clone()));
                    }
                }
            }
            for j in 0..dn {
                let v = var[i * dn + j];
                if v == usize::MAX {
                    continue;
                }
                for (l, c) in acted[j].entries() {
                    rows[*l].push((v, -c.clone()));
                }
            }
            rows.into_iter()
                .map(|r| SparseVec::from_entries(nvars, r))
                .filter(|r| !r.is_zero())
                .collect()
        })
        .collect();
    let ns = Echelon::from_rows(nvars, blocks.into_iter().flatten()).nullspace();
    let mut pair = vec![(0, 0); nvars];
    for i in 0..dm {
        for j in 0..dn {
            let v = var[i * dn + j];
            if v != usize::MAX {
                pair[v] = (i, j);
            }
        }
    }
    Ok(ns
        .basis()
        .iter()
        .map(|x| {
            let mut phi = Matrix::zeros(dn, dm);
            for (v, c) in x.entries() {
                let (i, j) = pair[*v];
                phi.set(j, i, c.clone());
            }
            BimoduleMap::new_unchecked(m.clone(), n.clone(), phi)
        })
        .collect())
}

/// Outcome of an isomorphism search.
#[derive(Clone, Debug)]
pub enum IsoVerdict<F: Scalar> {
    /// Different dimensions: definitely not isomorphic.
    DimensionMismatch { source: usize, target: usize },
    /// An isomorphism with its exact inverse, both checked.
    Certified {
        map: BimoduleMap<F>,
        inverse: Matrix<F>,
        hom_dim: usize,
        attempt: usize,
    },
    /// No invertible map was found; this is not a proof of non-isomorphism.
    NotCertified { hom_dim: usize, tried: usize },
}

impl<F: Scalar> IsoVerdict<F> {
    pub fn is_certified(&self) -> bool {
        matches!(self, IsoVerdict::Certified { .. })
    }
}

/// Looks for an invertible element of `hom_space(m, n)`: each basis map in
/// order, then `trials` random combinations drawn from `seed`. A candidate is
/// returned only after its inverse and all bimodule laws are checked.
pub fn find_isomorphism<F: Scalar>(
    m: &Arc<GradedBimodule<F>>,
    n: &Arc<GradedBimodule<F>>,
    seed: u64,
    trials: usize,
) -> Result<IsoVerdict<F>, BimoduleError> {
    if !same_map(m.left(), n.left()) || !same_map(m.right(), n.right()) {
        return Err(BimoduleError::MiddleMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::DimensionMismatch {
            source: m.dim(),
            target: n.dim(),
        });
    }
    let basis = hom_space(m, n)?;
    let hom_dim = basis.len();
    let certify = |phi: Matrix<F>| -> Option<(BimoduleMap<F>, Matrix<F>)> {
        let inv = invert(&phi).expect("square")?;
        let map = BimoduleMap::new(m.clone(), n.clone(), phi).ok()?;
        let d = m.dim();
        let ok = map.matrix.mul(&inv).ok()? == Matrix::identity(d) && inv.mul(&map.matrix).ok()? == Matrix::identity(d);
        ok.then_some((map, inv))
    };
    let mut tried = 0;
    if m.dim() == 0 {
        return Ok(IsoVerdict::Certified {
            map: BimoduleMap::new_unchecked(m.clone(), n.clone(), Matrix::zeros(0, 0)),
            inverse: Matrix::zeros(0, 0),
            hom_dim,
            attempt: 0,
        });
    }
    for b in &basis {
        tried += 1;
        if let Some((map, inverse)) = certify(b.matrix.clone()) {
            return Ok(IsoVerdict::Certified {
                map,
                inverse,
                hom_dim,
                attempt: tried,
            });
        }
    }
    if hom_dim > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            tried += 1;
            let mut phi = Matrix::zeros(n.dim(), m.dim());
            for b in &basis {
                let c = F::random(&mut rng);
                phi = phi.add(&b.matrix.scale(&c)).expect("same shape");
            }
            if let Some((map, inverse)) = certify(phi) {
                return Ok(IsoVerdict::Certified {
                    map,
                    inverse,
                    hom_dim,
                    attempt: tried,
                });
            }
        }
    }
    Ok(IsoVerdict::NotCertified { hom_dim, tried })
}

/// One of the two isomorphisms a Morita equivalence requires.
#[derive(Clone, Debug)]
pub struct MoritaSide<F: Scalar> {
    pub tensor_dim: usize,
    pub regular_dim: usize,
    pub verdict: IsoVerdict<F>,
}

#[derive(Clone, Debug)]
pub struct MoritaReport<F: Scalar> {
    pub dim: usize,
    pub dual_dim: usize,
    /// `M ⊗_{A′} M* ≅ A`.
    pub left: MoritaSide<F>,
    /// `M* ⊗_A M ≅ A′`.
    pub right: MoritaSide<F>,
}

impl<F: Scalar> MoritaReport<F> {
    pub fn certified(&self) -> bool {
        self.left.verdict.is_certified() && self.right.verdict.is_certified()
    }
}

/// Builds `M*` and both tensor products and searches for isomorphisms with
/// the regular bimodules `A` and `A′`.
pub fn verify_morita<F: Scalar>(m: &GradedBimodule<F>, seed: u64, trials: usize) -> Result<MoritaReport<F>, BimoduleError> {
    let d = dual(m)?;
    let side = |t: GradedBimodule<F>, reg: GradedBimodule<F>| -> Result<MoritaSide<F>, BimoduleError> {
        let (t, reg) = (Arc::new(t), Arc::new(reg));
        Ok(MoritaSide {
            tensor_dim: t.dim(),
            regular_dim: reg.dim(),
            verdict: find_isomorphism(&t, &reg, seed, trials)?,
        })
    };
    let left = side(tensor_over(m, &d)?, GradedBimodule::regular(m.left().clone())?)?;
    let right = side(tensor_over(&d, m)?, GradedBimodule::regular(m.right().clone())?)?;
    Ok(MoritaReport {
        dim: m.dim(),
        dual_dim: d.dim(),
        left,
        right,
    })
}
