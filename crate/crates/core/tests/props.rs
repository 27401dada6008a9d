//! Randomized invariants over GF(5).

use std::sync::{Arc, LazyLock};

use morita_core::scalar::GF5;
use morita_core::{
    fixtures, tensor_algebras, wreath_acted, wreath_algebra, wreath_bimodule, ActedAlgebra, GradedAlgebra,
    GradedBimodule, Scalar, SparseVec,
};
use proptest::prelude::*;

static WREATH: LazyLock<GradedAlgebra<GF5>> =
    LazyLock::new(|| wreath_algebra(&fixtures::matrix_algebra_c2(), 2).unwrap());
static ACTED: LazyLock<ActedAlgebra<GF5>> = LazyLock::new(|| wreath_acted(&fixtures::diagonal_acted(), 2).unwrap());
static ROW_WREATH: LazyLock<GradedBimodule<GF5>> =
    LazyLock::new(|| wreath_bimodule(&fixtures::row_module(), 2).unwrap());

fn vector(dim: usize) -> impl Strategy<Value = SparseVec<GF5>> {
    prop::collection::vec(0u64..5, dim).prop_map(|v| SparseVec::from_dense(&v.into_iter().map(GF5::new).collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wreath_algebra_is_associative(x in vector(32), y in vector(32), z in vector(32)) {
        let w = &*WREATH;
        prop_assert_eq!(w.mul(&w.mul(&x, &y), &z), w.mul(&x, &w.mul(&y, &z)));
    }

    #[test]
    fn tensor_product_is_componentwise(x1 in vector(4), y1 in vector(4), x2 in vector(2), y2 in vector(2)) {
        let m = fixtures::matrix_algebra_c2::<GF5>();
        let a = fixtures::group_algebra_c2::<GF5>();
        let t = tensor_algebras(&[&m, &a]).unwrap();
        prop_assert_eq!(t.mul(&x1.kron(&x2), &y1.kron(&y2)), m.mul(&x1, &y1).kron(&a.mul(&x2, &y2)));
    }

    #[test]
    fn wreath_action_composes(g in 0usize..8, h in 0usize..8, c in vector(4)) {
        let k = ACTED.acting_group();
        prop_assert_eq!(ACTED.act(g, &ACTED.act(h, &c)), ACTED.act(k.mul(g, h), &c));
    }

    #[test]
    fn wreath_bimodule_triple_products_are_graded(a in 0usize..8, m in 0usize..32, b in 0usize..128) {
        let w = &*ROW_WREATH;
        let g = w.group();
        let am = w.act_left(&w.left_algebra().basis(a), &w.basis(m));
        let amb = w.act_right(&am, &w.right_algebra().basis(b));
        let want = g.mul(g.mul(w.left_algebra().degree(a), w.degree(m)), w.right_algebra().degree(b));
        prop_assert!(amb.support().all(|k| w.degree(k) == want));
    }

    #[test]
    fn wreath_bimodule_is_balanced(a in vector(8), m in vector(32), b in vector(128)) {
        let w = &*ROW_WREATH;
        prop_assert_eq!(w.act_right(&w.act_left(&a, &m), &b), w.act_left(&a, &w.act_right(&m, &b)));
    }

    #[test]
    fn kron_is_bilinear(x in vector(3), y in vector(3), z in vector(2), c in 0u64..5) {
        let c = GF5::new(c);
        prop_assert_eq!(x.add(&y.scale(&c)).kron(&z), x.kron(&z).add(&y.kron(&z).scale(&c)));
    }
}

#[test]
fn lazies_are_shared() {
    let w: &GradedAlgebra<GF5> = &WREATH;
    assert_eq!(w.dim(), 32);
    let _ = Arc::clone(ACTED.algebra());
    assert_eq!(GF5::from_i64(7), GF5::new(2));
}
