//! `F[G] ≀ Sₙ` against `F[G ≀ Sₙ]`: identical structure constants.

mod common;

use std::sync::Arc;

use common::cyclic;
use morita_core::scalar::GF5;
use morita_core::{oracle_group_algebra, symmetric_group, FiniteGroup, Rational, Scalar};

fn agrees<F: Scalar>(g: Arc<FiniteGroup>, n: usize) -> usize {
    let (dim, diff) = oracle_group_algebra::<F>(&g, n).unwrap();
    assert_eq!(diff, None, "oracle mismatch for |G| = {}, n = {n}", g.order());
    dim
}

#[test]
fn c2_wreath_s2() {
    assert_eq!(agrees::<Rational>(cyclic(2), 2), 8);
    assert_eq!(agrees::<GF5>(cyclic(2), 2), 8);
}

#[test]
fn c2_wreath_s3() {
    assert_eq!(agrees::<Rational>(cyclic(2), 3), 48);
    assert_eq!(agrees::<GF5>(cyclic(2), 3), 48);
}

#[test]
fn c3_wreath_s2() {
    assert_eq!(agrees::<Rational>(cyclic(3), 2), 18);
    assert_eq!(agrees::<GF5>(cyclic(3), 2), 18);
}

#[test]
fn s3_wreath_s2() {
    let s3 = Arc::new(symmetric_group(3).unwrap());
    assert_eq!(agrees::<Rational>(s3.clone(), 2), 72);
    assert_eq!(agrees::<GF5>(s3, 2), 72);
}

#[test]
fn arity_one_is_the_group_algebra() {
    assert_eq!(agrees::<Rational>(cyclic(4), 1), 4);
}
