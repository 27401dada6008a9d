use rayon::prelude::*;

use super::{BimoduleError, GradedBimodule};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::Scalar;
use crate::table::StructureTable;

/// `M* = Hom_A(M, A)` as a graded `(A′, A)`-bimodule over `C`, with
/// `(a′·f·a)(x) = f(x·a′)·a` and `(M*)_g = {f : f(M_h) ⊆ A_{hg}}`.
///
/// A map `f` is stored by its values `f(m_j) = Σ_k x_{jk} a_k`, unknown
/// `x_{jk}` at position `j · dim A + k`. The linearity constraints are imposed
/// for the algebra generators of `A` only, which suffices. They never mix
/// unknowns of different degrees `deg(m_j)⁻¹·deg(a_k)`, so the echelon
/// null-space basis consists of homogeneous maps.
pub fn dual<F: Scalar>(m: &GradedBimodule<F>) -> Result<GradedBimodule<F>, BimoduleError> {
    let a = m.left_algebra();
    let b = m.right_algebra();
    let (da, dm, db) = (a.dim(), m.dim(), b.dim());
    let n = dm * da;
    let gens = a.generators().to_vec();
    let blocks: Vec<Vec<SparseVec<F>>> = (0..gens.len() * dm)
        .into_par_iter()
        .map(|x| {
            let s = gens[x / dm];
            let j = x % dm;
            let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); da];
            for (jp, c) in m.lact().cell(s, j).entries() {
                for (l, row) in rows.iter_mut().enumerate() {
                    row.push((jp * da + l, c.clone()));
                }
            }
            for k in 0..da {
                for (l, c) in a.mult().cell(s, k).entries() {
                    rows[*l].push((j * da + k, -c.clone()));
                }
            }
            rows.into_iter()
                .map(|r| SparseVec::from_entries(n, r))
                .filter(|r| !r.is_zero())
                .collect()
        })
        .collect();
    let ns = Echelon::from_rows(n, blocks.into_iter().flatten()).nullspace();
    let basis = ns.basis();
    let d = basis.len();
    let group = m.group();
    let degree: Vec<usize> = ns
        .free_columns()
        .iter()
        .map(|&c| group.mul(group.inv(m.degree(c / da)), a.degree(c % da)))
        .collect();

    // (m_j · b) has coefficient c on m_jp: stored as pre[b][jp] ∋ (j, c)
    let pre: Vec<Vec<Vec<(usize, F)>>> = (0..db)
        .into_par_iter()
        .map(|bi| {
            let mut p: Vec<Vec<(usize, F)>> = vec![Vec::new(); dm];
            for j in 0..dm {
                for (jp, c) in m.ract().cell(j, bi).entries() {
                    p[*jp].push((j, c.clone()));
                }
            }
            p
        })
        .collect();
    let coords = |v: SparseVec<F>| -> SparseVec<F> {
        let c = ns
            .coordinates(&v)
            .expect("the dual is closed under both actions");
        SparseVec::from_dense(&c)
    };
    let lact = StructureTable::from_fn(db, d, d, |bi, t| {
        let mut entries = Vec::new();
        for (idx, v) in basis[t].entries() {
            let (jp, k) = (idx / da, idx % da);
            for (j, c) in &pre[bi][jp] {
                entries.push((j * da + k, c.mul_ref(v)));
            }
        }
        coords(SparseVec::from_entries(n, entries))
    });
    let ract = StructureTable::from_fn(d, da, d, |t, ai| {
        let mut entries = Vec::new();
        for (idx, v) in basis[t].entries() {
            let (j, k) = (idx / da, idx % da);
            for (l, c) in a.mult().cell(k, ai).entries() {
                entries.push((j * da + l, c.mul_ref(v)));
            }
        }
        coords(SparseVec::from_entries(n, entries))
    });
    let names = (0..d).map(|t| format!("f{t}")).collect();
    GradedBimodule::from_parts(m.right().clone(), m.left().clone(), names, degree, lact, ract)
}
