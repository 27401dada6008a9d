use std::sync::Arc;

use super::{join_names, kron_all, ConstructionError};
use crate::acted::{make_structure_map, ActedAlgebra, StructureMap};
use crate::algebra::{group_algebra, CrossedUnits, GradedAlgebra};
use crate::bimodule::GradedBimodule;
use crate::group::{tuple_permute, FiniteGroup, GroupError, Permutation, WreathGroup};
use crate::index::MixedRadix;
use crate::linalg::{Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::table::StructureTable;

/// Coordinates of `X^{⊗n} ⊗ F[Sₙ]` for a based space `X`: index
/// `tuple · n! + rank(σ)`.
#[derive(Clone, Debug)]
pub(crate) struct WreathCoords {
    pub(crate) tuples: MixedRadix,
    perms: Vec<Permutation>,
    perm_mul: Vec<usize>,
    perm_inv: Vec<usize>,
}

impl WreathCoords {
    pub(crate) fn new(base_dim: usize, n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroArity);
        }
        let perms = Permutation::all(n);
        let nf = perms.len();
        let perm_mul = (0..nf * nf)
            .map(|x| perms[x / nf].compose(&perms[x % nf]).rank())
            .collect();
        let perm_inv = perms.iter().map(|p| p.inverse().rank()).collect();
        Ok(WreathCoords {
            tuples: MixedRadix::uniform(base_dim, n),
            perms,
            perm_mul,
            perm_inv,
        })
    }

    pub(crate) fn nf(&self) -> usize {
        self.perms.len()
    }

    pub(crate) fn dim(&self) -> usize {
        self.tuples.total() * self.nf()
    }

    /// `(digits, rank)` of a basis index.
    pub(crate) fn split(&self, x: usize) -> (Vec<usize>, usize) {
        (self.tuples.decode(x / self.nf()), x % self.nf())
    }

    pub(crate) fn mul(&self, r: usize, s: usize) -> usize {
        self.perm_mul[r * self.nf() + s]
    }

    pub(crate) fn inv(&self, r: usize) -> usize {
        self.perm_inv[r]
    }

    /// `^σ(x₁,…,xₙ)` for the permutation of rank `r`.
    pub(crate) fn permute<T: Clone>(&self, r: usize, xs: &[T]) -> Vec<T> {
        tuple_permute(&self.perms[r], xs).expect("arity matches")
    }

    /// `v ⊗ σ` for `v ∈ X^{⊗n}`.
    pub(crate) fn lift<F: Scalar>(&self, v: &SparseVec<F>, r: usize) -> SparseVec<F> {
        let nf = self.nf();
        v.reindex(self.dim(), |k| k * nf + r)
    }

    pub(crate) fn names(&self, base: &[String]) -> Vec<String> {
        (0..self.dim())
            .map(|x| {
                let (t, r) = self.split(x);
                let perm: String = self.perms[r].one_line().iter().map(|v| v.to_string()).collect();
                format!("({})⊗[{perm}]", join_names(t.iter().map(|&i| base[i].clone())))
            })
            .collect()
    }
}

fn wreath_degrees(wg: &WreathGroup, coords: &WreathCoords, degree: impl Fn(usize) -> usize) -> Vec<usize> {
    (0..coords.dim())
        .map(|x| {
            let (t, r) = coords.split(x);
            let degs: Vec<usize> = t.iter().map(|&i| degree(i)).collect();
            wg.embed_base(&degs) + r
        })
        .collect()
}

/// `A ≀ Sₙ = A^{⊗n} ⊗ F[Sₙ]` with product
/// `(a ⊗ σ)(b ⊗ τ) = (a · ^σb) ⊗ στ`, graded by `Ḡ ≀ Sₙ` through
/// `(A_{g₁} ⊗ … ⊗ A_{gₙ}) ⊗ σ`.
pub fn wreath_algebra<F: Scalar>(a: &GradedAlgebra<F>, n: usize) -> Result<GradedAlgebra<F>, ConstructionError> {
    let wg = WreathGroup::new(a.group().clone(), n)?;
    let coords = WreathCoords::new(a.dim(), n)?;
    let d = coords.dim();
    let mult = StructureTable::from_fn(d, d, d, |x, y| {
        let (s, sigma) = coords.split(x);
        let (t, tau) = coords.split(y);
        let moved = coords.permute(sigma, &t);
        let v = kron_all(s.iter().zip(&moved).map(|(&i, &j)| a.mult().cell(i, j)));
        coords.lift(&v, coords.mul(sigma, tau))
    });
    let degree = wreath_degrees(&wg, &coords, |i| a.degree(i));
    let one = coords.lift(&kron_all(std::iter::repeat_n(a.one(), n)), 0);
    Ok(GradedAlgebra::from_parts(
        wg.group().clone(),
        coords.names(a.names()),
        degree,
        mult,
        one,
    )?)
}

/// Units of `A ≀ Sₙ`: `u_{((g₁,…,gₙ),σ)} = (u_{g₁} ⊗ … ⊗ u_{gₙ}) ⊗ σ` with
/// inverse `(u⁻¹_{g_{σ(1)}} ⊗ … ⊗ u⁻¹_{g_{σ(n)}}) ⊗ σ⁻¹`, checked in
/// `wreath`.
pub fn wreath_units<F: Scalar>(
    wreath: &GradedAlgebra<F>,
    base: &GradedAlgebra<F>,
    units: &CrossedUnits<F>,
    n: usize,
) -> Result<CrossedUnits<F>, ConstructionError> {
    let wg = WreathGroup::new(base.group().clone(), n)?;
    let coords = WreathCoords::new(base.dim(), n)?;
    let (mut us, mut vs) = (Vec::new(), Vec::new());
    for w in 0..wg.group().order() {
        let e = wg.decode(w);
        let r = e.perm.rank();
        us.push(coords.lift(&kron_all(e.base.iter().map(|&g| units.unit(g))), r));
        let back = coords.permute(coords.inv(r), &e.base);
        vs.push(coords.lift(&kron_all(back.iter().map(|&g| units.inverse(g))), coords.inv(r)));
    }
    Ok(CrossedUnits::with_inverses(wreath, us, vs)?)
}

/// `C^{⊗n}` graded by `Hⁿ` and acted on by `K ≀ Sₙ` through
/// `^{((g₁,…,gₙ),σ)}(c₁ ⊗ … ⊗ cₙ) = ^{g₁}c_{σ⁻¹(1)} ⊗ … ⊗ ^{gₙ}c_{σ⁻¹(n)}`.
pub fn wreath_acted<F: Scalar>(c: &ActedAlgebra<F>, n: usize) -> Result<ActedAlgebra<F>, ConstructionError> {
    if n == 0 {
        return Err(GroupError::ZeroArity.into());
    }
    let copies: Vec<&GradedAlgebra<F>> = vec![c.algebra().as_ref(); n];
    let algebra = super::tensor_algebras(&copies)?;
    let wg = WreathGroup::new(c.acting_group().clone(), n)?;
    let grading = MixedRadix::uniform(c.algebra().group().order(), n);
    let embedding = (0..grading.total())
        .map(|h| {
            let images: Vec<usize> = grading.decode(h).iter().map(|&x| c.embedding()[x]).collect();
            wg.embed_base(&images)
        })
        .collect();
    let radix = MixedRadix::uniform(c.algebra().dim(), n);
    let columns: Vec<Vec<SparseVec<F>>> = c.actions().iter().map(|m| m.columns()).collect();
    let action = (0..wg.group().order())
        .map(|w| {
            let e = wg.decode(w);
            let cols: Vec<SparseVec<F>> = (0..radix.total())
                .map(|x| {
                    let moved = tuple_permute(&e.perm, &radix.decode(x)).expect("arity matches");
                    kron_all(e.base.iter().zip(&moved).map(|(&g, &i)| &columns[g][i]))
                })
                .collect();
            Matrix::from_columns(radix.total(), &cols)
        })
        .collect();
    Ok(ActedAlgebra::new(Arc::new(algebra), wg.group().clone(), embedding, action)?)
}

/// `ζ^{⊗n}` followed by `a ↦ a ⊗ 1`, into `A ≀ Sₙ` with the wreath units.
pub(crate) fn wreath_structure_map_over<F: Scalar>(
    source: Arc<ActedAlgebra<F>>,
    z: &StructureMap<F>,
    n: usize,
) -> Result<StructureMap<F>, ConstructionError> {
    let a = z.target();
    let wa = Arc::new(wreath_algebra(a, n)?);
    let units = wreath_units(&wa, a, z.units(), n)?;
    let coords = WreathCoords::new(a.dim(), n)?;
    let radix = MixedRadix::uniform(z.source().algebra().dim(), n);
    let images = z.zeta().columns();
    let cols: Vec<SparseVec<F>> = (0..radix.total())
        .map(|x| coords.lift(&kron_all(radix.decode(x).iter().map(|&i| &images[i])), 0))
        .collect();
    let zeta = Matrix::from_columns(wa.dim(), &cols);
    Ok(make_structure_map(source, wa, zeta, units)?)
}

/// `ζ_wr: C^{⊗n} → C_{A≀Sₙ}(B^{⊗n})`, validated including equivariance for
/// `K ≀ Sₙ` acting on `A ≀ Sₙ` through the wreath units.
pub fn wreath_structure_map<F: Scalar>(z: &StructureMap<F>, n: usize) -> Result<StructureMap<F>, ConstructionError> {
    let source = Arc::new(wreath_acted(z.source(), n)?);
    wreath_structure_map_over(source, z, n)
}

/// `M̃ ≀ Sₙ = M̃^{⊗n} ⊗ F[Sₙ]` over `(A ≀ Sₙ, A′ ≀ Sₙ)`, with
/// `(a ⊗ σ)(m ⊗ τ) = (a · ^σm) ⊗ στ` and `(m ⊗ τ)(a′ ⊗ π) = (m · ^τa′) ⊗ τπ`,
/// validated as a bimodule over `C^{⊗n}`.
pub fn wreath_bimodule<F: Scalar>(m: &GradedBimodule<F>, n: usize) -> Result<GradedBimodule<F>, ConstructionError> {
    let source = Arc::new(wreath_acted(m.left().source(), n)?);
    let left = wreath_structure_map_over(source.clone(), m.left(), n)?;
    let right = wreath_structure_map_over(source, m.right(), n)?;
    let wg = WreathGroup::new(m.group().clone(), n)?;
    let cm = WreathCoords::new(m.dim(), n)?;
    let ca = WreathCoords::new(m.left_algebra().dim(), n)?;
    let cb = WreathCoords::new(m.right_algebra().dim(), n)?;
    let dm = cm.dim();
    let lact = StructureTable::from_fn(ca.dim(), dm, dm, |x, y| {
        let (s, sigma) = ca.split(x);
        let (t, tau) = cm.split(y);
        let moved = ca.permute(sigma, &t);
        let v = kron_all(s.iter().zip(&moved).map(|(&i, &j)| m.lact().cell(i, j)));
        cm.lift(&v, ca.mul(sigma, tau))
    });
    let ract = StructureTable::from_fn(dm, cb.dim(), dm, |x, y| {
        let (t, tau) = cm.split(x);
        let (s, pi) = cb.split(y);
        let moved = cm.permute(tau, &s);
        let v = kron_all(t.iter().zip(&moved).map(|(&i, &j)| m.ract().cell(i, j)));
        cm.lift(&v, cm.mul(tau, pi))
    });
    let degree = wreath_degrees(&wg, &cm, |i| m.degree(i));
    Ok(GradedBimodule::from_parts(
        Arc::new(left),
        Arc::new(right),
        cm.names(m.names()),
        degree,
        lact,
        ract,
    )?)
}

/// First disagreement between `F[Ḡ] ≀ Sₙ` and `F[Ḡ ≀ Sₙ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleDiff {
    Degree { basis: usize, left: usize, right: usize },
    Unit,
    Product { i: usize, j: usize, left: String, right: String },
}

/// Builds both sides of `F[Ḡ] ≀ Sₙ ≅ F[Ḡ ≀ Sₙ]` and compares structure
/// constants under the identity on indices. Returns the dimension and the
/// first difference, if any.
pub fn oracle_group_algebra<F: Scalar>(
    g: &Arc<FiniteGroup>,
    n: usize,
) -> Result<(usize, Option<OracleDiff>), ConstructionError> {
    let left = wreath_algebra(&group_algebra::<F>(g), n)?;
    let wg = WreathGroup::new(g.clone(), n)?;
    let right = group_algebra::<F>(wg.group());
    let d = left.dim();
    if let Some(b) = (0..d).find(|&b| left.degree(b) != right.degree(b)) {
        let diff = OracleDiff::Degree {
            basis: b,
            left: left.degree(b),
            right: right.degree(b),
        };
        return Ok((d, Some(diff)));
    }
    if left.one() != right.one() {
        return Ok((d, Some(OracleDiff::Unit)));
    }
    let diff = crate::check::first_failure(d, |i| {
        (0..d).find_map(|j| {
            let (l, r) = (left.mult().cell(i, j), right.mult().cell(i, j));
            (l != r).then(|| OracleDiff::Product {
                i,
                j,
                left: render(l),
                right: render(r),
            })
        })
    });
    Ok((d, diff))
}

fn render<F: Scalar>(v: &SparseVec<F>) -> String {
    let terms: Vec<String> = v.entries().iter().map(|(k, c)| format!("{c}·b{k}")).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
