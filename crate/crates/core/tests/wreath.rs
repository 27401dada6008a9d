//! Wreath products of graded algebras, acted algebras and structure maps,
//! checked exhaustively against the defining formulas.

mod common;

use std::sync::Arc;

use morita_core::constructions::wreath_units;
use morita_core::group::WreathGroup;
use morita_core::{
    fixtures, wreath_acted, wreath_algebra, wreath_structure_map, ActedAlgebra, GradedAlgebra, Rational, SparseVec,
    StructureMap,
};

type Q = Rational;

fn c2() -> StructureMap<Q> {
    fixtures::regular_structure_map(fixtures::group_algebra_c2())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn kron(vs: &[SparseVec<Q>]) -> SparseVec<Q> {
    vs.iter().skip(1).fold(vs[0].clone(), |acc, v| acc.kron(v))
}

/// Product grading, units with the stated inverse formula, computed
/// directly from the wreath group elements.
fn algebra_suite(z: &StructureMap<Q>, n: usize) {
    let a = z.target();
    let w = wreath_algebra(a, n).unwrap();
    let nf = factorial(n);
    assert_eq!(w.dim(), a.dim().pow(n as u32) * nf);
    assert_eq!(common::grading_violation(&w), None);

    let wg = WreathGroup::new(a.group().clone(), n).unwrap();
    assert_eq!(**w.group(), **wg.group());
    let units = wreath_units(&w, a, z.units(), n).unwrap();
    let at = |v: SparseVec<Q>, rank: usize| v.reindex(w.dim(), |k| k * nf + rank);
    for code in 0..wg.group().order() {
        let e = wg.decode(code);
        let u = at(kron(&e.base.iter().map(|&g| z.units().unit(g).clone()).collect::<Vec<_>>()), e.perm.rank());
        // inverse (u⁻¹_{g_{σ(1)}} ⊗ … ⊗ u⁻¹_{g_{σ(n)}}) ⊗ σ⁻¹
        let inv_parts: Vec<SparseVec<Q>> = (0..n).map(|i| z.units().inverse(e.base[e.perm.apply(i)]).clone()).collect();
        let v = at(kron(&inv_parts), e.perm.inverse().rank());
        assert_eq!(units.unit(code), &u);
        assert_eq!(w.mul(&v, &u), *w.one(), "element {code}");
        assert_eq!(w.mul(&u, &v), *w.one(), "element {code}");
    }
}

/// Identity, composition, automorphism and grading laws of the wreath action.
fn acted_suite(c: &ActedAlgebra<Q>, n: usize) {
    let wc = wreath_acted(c, n).unwrap();
    let k = wc.acting_group();
    let alg = wc.algebra();
    assert!(wc.action(k.identity()).is_identity());
    for g in 0..k.order() {
        for h in 0..k.order() {
            assert_eq!(
                wc.action(g).mul(wc.action(h)).unwrap(),
                *wc.action(k.mul(g, h)),
                "composition ({g}, {h})"
            );
        }
        for i in 0..alg.dim() {
            let xi = alg.basis(i);
            let gi = wc.act(g, &xi);
            let target = k.conjugate(g, wc.embedding()[alg.degree(i)]);
            let deg = wc.embedding().iter().position(|&e| e == target).expect("conjugate of an embedded degree");
            assert!(gi.support().all(|x| alg.degree(x) == deg), "grading at ({g}, c{i})");
            for j in 0..alg.dim() {
                let xj = alg.basis(j);
                assert_eq!(wc.act(g, &alg.mul(&xi, &xj)), alg.mul(&gi, &wc.act(g, &xj)));
            }
        }
    }
}

#[test]
fn group_algebra_c2_squared_and_cubed() {
    let z = c2();
    algebra_suite(&z, 2);
    algebra_suite(&z, 3);
    acted_suite(z.source(), 2);
    acted_suite(z.source(), 3);
    wreath_structure_map(&z, 2).unwrap();
    wreath_structure_map(&z, 3).unwrap();
}

#[test]
fn matrix_algebra_squared() {
    let z = fixtures::matrix_structure_map::<Q>();
    algebra_suite(&z, 2);
    acted_suite(z.source(), 2);
    wreath_structure_map(&z, 2).unwrap();
}

#[test]
fn hand_product_in_c2_wreath_s2() {
    let a = fixtures::group_algebra_c2::<Q>();
    let w = wreath_algebra(&a, 2).unwrap();
    assert_eq!(w.dim(), 8);
    // basis index = tuple·2 + rank, tuple (a,e) = 2, rank of (1 2) = 1
    let x = w.basis(2 * 2 + 1);
    let y = w.basis(2);
    // ((a⊗e)⊗(1 2))·((e⊗a)⊗e) = (e⊗e)⊗(1 2)
    assert_eq!(w.mul(&x, &y), w.basis(1));
}

#[test]
fn arity_one_is_canonically_the_input() {
    let m = fixtures::matrix_algebra_c2::<Q>();
    let w = wreath_algebra(&m, 1).unwrap();
    assert_eq!(w.mult(), m.mult());
    assert_eq!(w.one(), m.one());
    assert_eq!(w.degrees(), m.degrees());
}

#[test]
fn pure_permutation_swaps_factors() {
    let c = fixtures::diagonal_acted::<Q>();
    let wc = wreath_acted(&c, 2).unwrap();
    let d = c.algebra().dim();
    // ((e,e),(1 2)) has code 1
    for i in 0..d {
        for j in 0..d {
            let (ci, cj) = (SparseVec::unit(d, i), SparseVec::unit(d, j));
            assert_eq!(wc.act(1, &ci.kron(&cj)), cj.kron(&ci));
        }
    }
}

#[test]
fn wreath_structure_map_is_equivariant_at_a_mixed_element() {
    let z = fixtures::matrix_structure_map::<Q>();
    let zw = wreath_structure_map(&z, 2).unwrap();
    let c = z.source();
    let d = c.algebra().dim();
    let wa = zw.target();
    assert_eq!(zw.apply(zw.source().algebra().one()), *wa.one());
    // ((a,e),(1 2)) has code (1·2 + 0)·2 + 1 = 5
    let g = 5;
    let lift = |v: SparseVec<Q>| v.reindex(wa.dim(), |k| k * 2);
    for i in 0..d {
        for j in 0..d {
            let (ci, cj) = (SparseVec::unit(d, i), SparseVec::unit(d, j));
            let expected = lift(z.apply(&c.act(1, &cj)).kron(&z.apply(&ci)));
            let lhs = zw.apply(&zw.source().act(g, &ci.kron(&cj)));
            let rhs = zw.units().conjugate(wa, g, &zw.apply(&ci.kron(&cj)));
            assert_eq!(lhs, expected);
            assert_eq!(rhs, expected);
        }
    }
}

#[test]
fn identity_structure_map_embeds_into_the_wreath_algebra() {
    let zw = wreath_structure_map(&c2(), 2).unwrap();
    assert_eq!(zw.source().algebra().dim(), 4);
    assert_eq!(zw.target().dim(), 8);
    let one: &GradedAlgebra<Q> = zw.target();
    assert_eq!(zw.apply(zw.source().algebra().one()), *one.one());
    let _ = Arc::clone(zw.source());
}
