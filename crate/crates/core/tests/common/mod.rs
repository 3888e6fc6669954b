#![allow(dead_code)]

use cylchroma_core::poset::{all_posets, Poset};
use cylchroma_core::shapes::{
    enumerate_cylindric_shapes, enumerate_skew_shapes, CylindricShape, SkewShape,
};
use cylchroma_core::tableaux::PFilling;
use cylchroma_core::upoly::UPolynomial;
use num_bigint::BigInt;

/// Every (3+1)-free poset on at most `max_n` elements, one per isomorphism class.
pub fn free_posets(max_n: usize) -> Vec<Poset> {
    (0..=max_n)
        .flat_map(|n| all_posets(n).unwrap())
        .filter(Poset::is_31_free)
        .collect()
}

/// Cylindric shapes of size `n` inside an `n × n` box; the empty shape for 0.
pub fn cylindric_shapes(n: usize) -> Vec<CylindricShape> {
    if n == 0 {
        vec![CylindricShape::empty()]
    } else {
        enumerate_cylindric_shapes(n, n).unwrap()
    }
}

/// Skew shapes of size `n` inside an `n × n` box; the empty shape for 0.
pub fn skew_shapes(n: usize) -> Vec<SkewShape> {
    if n == 0 {
        vec![SkewShape::straight(Default::default())]
    } else {
        enumerate_skew_shapes(n, n).unwrap()
    }
}

pub fn weight_sum(fillings: impl IntoIterator<Item = PFilling>, n: usize) -> UPolynomial {
    let mut sum = UPolynomial::zero(n);
    for f in fillings {
        sum.add_term(f.u_weight(n), BigInt::from(1));
    }
    sum
}
