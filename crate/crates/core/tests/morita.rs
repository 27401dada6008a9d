//! End-to-end Morita certificates for the row module, its tensor square
//! and its wreath square, and the refutation of `A ⊕ A`.

use morita_core::{fixtures, tensor_bimodules, verify_morita, wreath_bimodule, IsoVerdict, Rational};

type Q = Rational;

#[test]
fn row_module_is_certified() {
    let row = fixtures::row_module::<Q>();
    let r = verify_morita(&row, 0, 64).unwrap();
    assert!(r.certified());
    assert_eq!((r.dim, r.dual_dim), (4, 4));
}

#[test]
fn tensor_square_is_certified() {
    let row = fixtures::row_module::<Q>();
    let t = tensor_bimodules(&[&row, &row]).unwrap();
    assert_eq!(t.dim(), 16);
    assert!(verify_morita(&t, 0, 64).unwrap().certified());
}

#[test]
fn wreath_square_is_certified() {
    let row = fixtures::row_module::<Q>();
    let w = wreath_bimodule(&row, 2).unwrap();
    assert_eq!(w.dim(), 32);
    let r = verify_morita(&w, 0, 64).unwrap();
    assert!(r.certified());
    assert_eq!(r.left.tensor_dim, w.left_algebra().dim());
    assert_eq!(r.right.tensor_dim, w.right_algebra().dim());
}

#[test]
fn column_module_over_the_trivial_group() {
    let col = fixtures::column_module::<Q>();
    assert!(verify_morita(&col, 0, 16).unwrap().certified());
}

#[test]
fn direct_sum_is_refuted_by_dimension() {
    let a = fixtures::regular_c2_bimodule::<Q>();
    let sum = a.direct_sum(&a).unwrap();
    let r = verify_morita(&sum, 0, 16).unwrap();
    assert!(!r.certified());
    assert!(matches!(r.left.verdict, IsoVerdict::DimensionMismatch { source: 8, target: 2 }));
}
