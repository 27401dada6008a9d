//! The isomorphisms
//! `f: (A≀Sₙ) ⊗_{B^{⊗n}} M^{⊗n} → M̃≀Sₙ`, `(a⊗σ)⊗m ↦ (a·^σm)⊗σ` and
//! `g: M^{⊗n} ⊗_{B′^{⊗n}} (A′≀Sₙ) → M̃≀Sₙ`, `m⊗(a′⊗σ) ↦ (m·a′)⊗σ`,
//! where `M = M̃₁` is the identity component.
//!
//! The induced modules are built as quotients of pure tensors by the
//! balancing relations. Their second action comes from the crossed-product
//! units:
//! `((a⊗σ)⊗m)·(a′_h⊗τ) = ((a⊗σ)(u_h⊗τ)) ⊗ ^{τ⁻¹}(u_h⁻¹·m·a′_h)` and
//! `(a_h⊗τ)·(m⊗(a′⊗σ)) = (a_h·^τm·u′_h⁻¹) ⊗ ((u′_h⊗τ)(a′⊗σ))`.
//! Both are evaluated on pure tensors and then checked to preserve the
//! relations, so neither the unit choice nor well-definedness is assumed.

use std::sync::Arc;

use rayon::prelude::*;

use super::tensor::tensor_algebras;
use super::wreath::WreathCoords;
use super::{join_names, kron_all, ConstructionError};
use crate::algebra::{identity_component_subalgebra, CrossedUnits, GradedAlgebra};
use crate::bimodule::{BimoduleMap, GradedBimodule, TensorQuotient};
use crate::check::sweep;
use crate::index::MixedRadix;
use crate::linalg::{invert, Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::table::StructureTable;

/// Which induced form a comparison map starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(A≀Sₙ) ⊗_{B^{⊗n}} M^{⊗n}`.
    Left,
    /// `M^{⊗n} ⊗_{B′^{⊗n}} (A′≀Sₙ)`.
    Right,
}

/// A certified isomorphism from an induced module onto `M̃≀Sₙ`.
#[derive(Clone, Debug)]
pub struct InducedIso<F: Scalar> {
    pub side: Side,
    pub map: BimoduleMap<F>,
    pub inverse: Matrix<F>,
    /// Rank of the balancing relations.
    pub relations: usize,
    /// Basis vectors of `M̃≀Sₙ` reproduced by the explicit preimage formula.
    pub preimages: usize,
}

impl<F: Scalar> InducedIso<F> {
    pub fn source(&self) -> &Arc<GradedBimodule<F>> {
        self.map.source()
    }

    pub fn target(&self) -> &Arc<GradedBimodule<F>> {
        self.map.target()
    }
}

type Pure<'a, F> = Box<dyn Fn(usize, usize) -> Result<SparseVec<F>, ConstructionError> + Sync + Send + 'a>;
type Acting<'a, F> = Box<dyn Fn(usize, usize, usize) -> Result<SparseVec<F>, ConstructionError> + Sync + Send + 'a>;

/// The identity component `M = M̃₁` with coordinates.
struct Component {
    idx: Vec<usize>,
    pos: Vec<usize>,
}

impl Component {
    fn new<F: Scalar>(m: &GradedBimodule<F>) -> Self {
        let idx = m.identity_component();
        let mut pos = vec![usize::MAX; m.dim()];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        Component { idx, pos }
    }

    fn dim(&self) -> usize {
        self.idx.len()
    }

    fn restrict<F: Scalar>(&self, v: &SparseVec<F>, what: &str) -> Result<SparseVec<F>, ConstructionError> {
        if v.support().any(|k| self.pos[k] == usize::MAX) {
            return Err(ConstructionError::OutsideIdentityComponent { what: what.to_string() });
        }
        Ok(v.reindex(self.dim(), |k| self.pos[k]))
    }
}

/// Everything needed to assemble one induced module and its comparison map,
/// phrased on pure tensors `x ⊗ y`.
struct Recipe<'a, F: Scalar> {
    side: Side,
    dx: usize,
    dy: usize,
    relations: Vec<SparseVec<F>>,
    left: Acting<'a, F>,
    right: Acting<'a, F>,
    map: Pure<'a, F>,
    preimage: Box<dyn Fn(usize) -> Result<SparseVec<F>, ConstructionError> + Sync + Send + 'a>,
    degree: Box<dyn Fn(usize, usize) -> usize + Sync + Send + 'a>,
    name: Box<dyn Fn(usize, usize) -> String + Sync + Send + 'a>,
}

/// Applies a map given on pure tensors to an arbitrary element of `X ⊗ Y`.
fn extend<F: Scalar>(
    dim: usize,
    dy: usize,
    v: &SparseVec<F>,
    f: impl Fn(usize, usize) -> Result<SparseVec<F>, ConstructionError>,
) -> Result<SparseVec<F>, ConstructionError> {
    let mut out = SparseVec::zero(dim);
    for (p, c) in v.entries() {
        out.add_scaled(c, &f(p / dy, p % dy)?);
    }
    Ok(out)
}

fn table_from<F: Scalar>(
    rows: usize,
    cols: usize,
    out: usize,
    f: impl Fn(usize, usize) -> Result<SparseVec<F>, ConstructionError> + Sync + Send,
) -> Result<StructureTable<F>, ConstructionError> {
    let cells = (0..rows * cols)
        .into_par_iter()
        .map(|x| f(x / cols, x % cols))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StructureTable::from_fn(rows, cols, out, |i, j| cells[i * cols + j].clone()))
}

fn assemble<F: Scalar>(wreath: &Arc<GradedBimodule<F>>, r: Recipe<'_, F>) -> Result<InducedIso<F>, ConstructionError> {
    let (dx, dy) = (r.dx, r.dy);
    let ambient = dx * dy;
    let q = TensorQuotient::new(dx, dy, r.relations);
    let d = q.dim();
    if d != wreath.dim() {
        return Err(ConstructionError::DimensionMismatch {
            induced: d,
            wreath: wreath.dim(),
        });
    }
    let rows = q.relations().rows();
    let (la, ra) = (wreath.left_algebra(), wreath.right_algebra());

    // the map vanishes on relations, and both actions preserve them
    let dt = wreath.dim();
    sweep(rows.len(), |i| match extend(dt, dy, &rows[i], &r.map) {
        Ok(v) if v.is_zero() => None,
        Ok(_) => Some(ConstructionError::RelationNotKilled { relation: i }),
        Err(e) => Some(e),
    })?;
    let preserved = |i: usize, generator: usize, act: &dyn Fn(usize, usize) -> Result<SparseVec<F>, ConstructionError>| {
        match extend(ambient, dy, &rows[i], act) {
            Ok(v) if q.project(&v).is_zero() => None,
            Ok(_) => Some(ConstructionError::NotWellDefined { relation: i, generator }),
            Err(e) => Some(e),
        }
    };
    sweep(rows.len(), |i| {
        la.generators()
            .iter()
            .find_map(|&s| preserved(i, s, &|x, y| (r.left)(s, x, y)))
            .or_else(|| {
                ra.generators()
                    .iter()
                    .find_map(|&t| preserved(i, t, &|x, y| (r.right)(x, y, t)))
            })
    })?;

    let reps: Vec<(usize, usize)> = (0..d).map(|t| q.representative(t)).collect();
    let lact = table_from(la.dim(), d, d, |s, t| {
        let (x, y) = reps[t];
        Ok(q.project(&(r.left)(s, x, y)?))
    })?;
    let ract = table_from(d, ra.dim(), d, |t, s| {
        let (x, y) = reps[t];
        Ok(q.project(&(r.right)(x, y, s)?))
    })?;
    let degree = reps.iter().map(|&(x, y)| (r.degree)(x, y)).collect();
    let names = reps.iter().map(|&(x, y)| (r.name)(x, y)).collect();
    let source = Arc::new(GradedBimodule::from_parts(
        wreath.left().clone(),
        wreath.right().clone(),
        names,
        degree,
        lact,
        ract,
    )?);

    let cols = reps
        .par_iter()
        .map(|&(x, y)| (r.map)(x, y))
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = Matrix::from_columns(dt, &cols);
    let inverse = invert(&matrix).expect("square").ok_or(ConstructionError::Singular)?;
    let map = BimoduleMap::new(source, wreath.clone(), matrix)?;
    if !map.matrix().mul(&inverse).expect("square").is_identity()
        || !inverse.mul(map.matrix()).expect("square").is_identity()
    {
        return Err(ConstructionError::Singular);
    }
    sweep(dt, |mu| match (r.preimage)(mu) {
        Ok(v) if map.apply(&q.project(&v)) == SparseVec::unit(dt, mu) => None,
        Ok(_) => Some(ConstructionError::Preimage { basis: mu }),
        Err(e) => Some(e),
    })?;
    Ok(InducedIso {
        side: r.side,
        map,
        inverse,
        relations: rows.len(),
        preimages: dt,
    })
}

/// Basis vectors of the identity component `B^{⊗n}` that generate it, as
/// index tuples into `A`.
fn identity_generators<F: Scalar>(a: &GradedAlgebra<F>, n: usize) -> Result<Vec<Vec<usize>>, ConstructionError> {
    let (b, idx) = identity_component_subalgebra(a)?;
    let bn = tensor_algebras(&vec![&b; n])?;
    let radix = MixedRadix::uniform(b.dim(), n);
    Ok(bn
        .generators()
        .iter()
        .map(|&x| radix.decode(x).iter().map(|&i| idx[i]).collect())
        .collect())
}

/// `f` with the units of `m.left()`.
pub fn iso_f<F: Scalar>(
    m: &GradedBimodule<F>,
    wreath: &Arc<GradedBimodule<F>>,
    n: usize,
) -> Result<InducedIso<F>, ConstructionError> {
    iso_f_with_units(m, wreath, n, m.left().units())
}

/// `f: (A≀Sₙ) ⊗_{B^{⊗n}} M^{⊗n} → M̃≀Sₙ` with the right action of the
/// induced module defined through `units` of `A`. `wreath` must be
/// `wreath_bimodule(m, n)`.
pub fn iso_f_with_units<F: Scalar>(
    m: &GradedBimodule<F>,
    wreath: &Arc<GradedBimodule<F>>,
    n: usize,
    units: &CrossedUnits<F>,
) -> Result<InducedIso<F>, ConstructionError> {
    let (a, ap) = (m.left_algebra(), m.right_algebra());
    let wa = wreath.left_algebra();
    let group = m.group();
    let ca = WreathCoords::new(a.dim(), n)?;
    let cb = WreathCoords::new(ap.dim(), n)?;
    let cm = WreathCoords::new(m.dim(), n)?;
    let comp = Component::new(m);
    let ym = MixedRadix::uniform(comp.dim(), n);
    let (dx, dy) = (wa.dim(), ym.total());

    let gens = identity_generators(a, n)?;
    let nrel = gens.len() * dx * dy;
    let relations = (0..nrel)
        .into_par_iter()
        .map(|i| {
            let beta = &gens[i / (dx * dy)];
            let (x, y) = ((i / dy) % dx, i % dy);
            let beta_hat = ca.tuples.encode(beta) * ca.nf();
            let xb = wa.mult().cell(x, beta_hat).reindex(dx * dy, |k| k * dy + y);
            let slots = ym
                .decode(y)
                .iter()
                .zip(beta)
                .map(|(&j, &b)| comp.restrict(m.lact().cell(b, comp.idx[j]), "B·M"))
                .collect::<Result<Vec<_>, _>>()?;
            let by = SparseVec::unit(dx, x).kron(&kron_all(&slots));
            Ok(xb.sub(&by))
        })
        .collect::<Result<Vec<SparseVec<F>>, ConstructionError>>()?
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();

    let left: Acting<F> = Box::new(|s, x, y| Ok(wa.mult().cell(s, x).kron(&SparseVec::unit(dy, y))));
    let right: Acting<F> = Box::new(|x, y, t| {
        let (s, tau) = cb.split(t);
        let h: Vec<usize> = s.iter().map(|&i| ap.degree(i)).collect();
        let u = ca.lift(&kron_all(h.iter().map(|&g| units.unit(g))), tau);
        let first = wa.mult().left_basis(x, &u);
        let slots = ym
            .decode(y)
            .iter()
            .zip(s.iter().zip(&h))
            .map(|(&j, (&ai, &g))| {
                let v = m.act_right(&m.basis(comp.idx[j]), &ap.basis(ai));
                comp.restrict(&m.act_left(units.inverse(g), &v), "u⁻¹·M·A′")
            })
            .collect::<Result<Vec<_>, _>>()?;
        let moved = cb.permute(cb.inv(tau), &slots);
        Ok(first.kron(&kron_all(&moved)))
    });
    let map: Pure<F> = Box::new(|x, y| {
        let (s, sigma) = ca.split(x);
        let mt: Vec<usize> = ym.decode(y).iter().map(|&j| comp.idx[j]).collect();
        let moved = ca.permute(sigma, &mt);
        let v = kron_all(s.iter().zip(&moved).map(|(&i, &j)| m.lact().cell(i, j)));
        Ok(cm.lift(&v, sigma))
    });
    let preimage = Box::new(|mu: usize| {
        let (t, sigma) = cm.split(mu);
        let g: Vec<usize> = t.iter().map(|&i| m.degree(i)).collect();
        let a_part = ca.lift(&kron_all(g.iter().map(|&h| units.inverse(group.inv(h)))), sigma);
        let back = cm.permute(cm.inv(sigma), &t);
        let slots = back
            .iter()
            .map(|&i| comp.restrict(&m.act_left(units.unit(group.inv(m.degree(i))), &m.basis(i)), "u·M̃"))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(a_part.kron(&kron_all(&slots)))
    });
    let m_names = |y: usize| join_names(ym.decode(y).iter().map(|&j| m.names()[comp.idx[j]].clone()));
    let recipe = Recipe {
        side: Side::Left,
        dx,
        dy,
        relations,
        left,
        right,
        map,
        preimage,
        degree: Box::new(|x, _| wa.degree(x)),
        name: Box::new(|x, y| format!("{}⊗{}", wa.names()[x], m_names(y))),
    };
    assemble(wreath, recipe)
}

/// `g` with the units of `m.right()`.
pub fn iso_g<F: Scalar>(
    m: &GradedBimodule<F>,
    wreath: &Arc<GradedBimodule<F>>,
    n: usize,
) -> Result<InducedIso<F>, ConstructionError> {
    iso_g_with_units(m, wreath, n, m.right().units())
}

/// `g: M^{⊗n} ⊗_{B′^{⊗n}} (A′≀Sₙ) → M̃≀Sₙ` with the left action of the
/// induced module defined through `units` of `A′`.
pub fn iso_g_with_units<F: Scalar>(
    m: &GradedBimodule<F>,
    wreath: &Arc<GradedBimodule<F>>,
    n: usize,
    units: &CrossedUnits<F>,
) -> Result<InducedIso<F>, ConstructionError> {
    let (a, ap) = (m.left_algebra(), m.right_algebra());
    let wap = wreath.right_algebra();
    let group = m.group();
    let ca = WreathCoords::new(a.dim(), n)?;
    let cb = WreathCoords::new(ap.dim(), n)?;
    let cm = WreathCoords::new(m.dim(), n)?;
    let comp = Component::new(m);
    let xm = MixedRadix::uniform(comp.dim(), n);
    let (dx, dy) = (xm.total(), wap.dim());

    let gens = identity_generators(ap, n)?;
    let nrel = gens.len() * dx * dy;
    let relations = (0..nrel)
        .into_par_iter()
        .map(|i| {
            let beta = &gens[i / (dx * dy)];
            let (x, y) = ((i / dy) % dx, i % dy);
            let slots = xm
                .decode(x)
                .iter()
                .zip(beta)
                .map(|(&j, &b)| comp.restrict(m.ract().cell(comp.idx[j], b), "M·B′"))
                .collect::<Result<Vec<_>, _>>()?;
            let xb = kron_all(&slots).kron(&SparseVec::unit(dy, y));
            let beta_hat = cb.tuples.encode(beta) * cb.nf();
            let by = wap.mult().cell(beta_hat, y).reindex(dx * dy, |k| x * dy + k);
            Ok(xb.sub(&by))
        })
        .collect::<Result<Vec<SparseVec<F>>, ConstructionError>>()?
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();

    let right: Acting<F> = Box::new(|x, y, t| Ok(SparseVec::unit(dx, x).kron(wap.mult().cell(y, t))));
    let left: Acting<F> = Box::new(|s, x, y| {
        let (sa, tau) = ca.split(s);
        let h: Vec<usize> = sa.iter().map(|&i| a.degree(i)).collect();
        let moved = ca.permute(tau, &xm.decode(x));
        let slots = moved
            .iter()
            .zip(sa.iter().zip(&h))
            .map(|(&j, (&ai, &g))| {
                let v = m.act_left(&a.basis(ai), &m.basis(comp.idx[j]));
                comp.restrict(&m.act_right(&v, units.inverse(g)), "A·M·u′⁻¹")
            })
            .collect::<Result<Vec<_>, _>>()?;
        let u = cb.lift(&kron_all(h.iter().map(|&g| units.unit(g))), tau);
        Ok(kron_all(&slots).kron(&wap.mult().right_basis(&u, y)))
    });
    let map: Pure<F> = Box::new(|x, y| {
        let (s, sigma) = cb.split(y);
        let mt = xm.decode(x);
        let v = kron_all(mt.iter().zip(&s).map(|(&j, &i)| m.ract().cell(comp.idx[j], i)));
        Ok(cm.lift(&v, sigma))
    });
    let preimage = Box::new(|mu: usize| {
        let (t, sigma) = cm.split(mu);
        let g: Vec<usize> = t.iter().map(|&i| m.degree(i)).collect();
        let slots = t
            .iter()
            .zip(&g)
            .map(|(&i, &h)| comp.restrict(&m.act_right(&m.basis(i), units.unit(group.inv(h))), "M̃·u′"))
            .collect::<Result<Vec<_>, _>>()?;
        let a_part = cb.lift(&kron_all(g.iter().map(|&h| units.inverse(group.inv(h)))), sigma);
        Ok(kron_all(&slots).kron(&a_part))
    });
    let m_names = |x: usize| join_names(xm.decode(x).iter().map(|&j| m.names()[comp.idx[j]].clone()));
    let recipe = Recipe {
        side: Side::Right,
        dx,
        dy,
        relations,
        left,
        right,
        map,
        preimage,
        degree: Box::new(|_, y| wap.degree(y)),
        name: Box::new(|x, y| format!("{}⊗{}", m_names(x), wap.names()[y])),
    };
    assemble(wreath, recipe)
}

/// `g⁻¹ ∘ f` between the two induced forms, certified as a graded bimodule
/// isomorphism with its inverse `f⁻¹ ∘ g`.
pub fn compare_induced<F: Scalar>(
    f: &InducedIso<F>,
    g: &InducedIso<F>,
) -> Result<(BimoduleMap<F>, Matrix<F>), ConstructionError> {
    let h = g.inverse.mul(f.map.matrix()).expect("square");
    let back = f.inverse.mul(g.map.matrix()).expect("square");
    if !h.mul(&back).expect("square").is_identity() {
        return Err(ConstructionError::Singular);
    }
    let map = BimoduleMap::new(f.source().clone(), g.source().clone(), h)?;
    BimoduleMap::new(g.source().clone(), f.source().clone(), back.clone())?;
    Ok((map, back))
}
