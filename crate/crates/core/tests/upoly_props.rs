mod common;

use common::{cylindric_shapes, free_posets, skew_shapes};
use cylchroma_core::poset::{all_posets, Poset};
use cylchroma_core::shapes::partitions;
use cylchroma_core::symx::{Basis, SymFunc};
use cylchroma_core::upoly::{
    apply_psi, det_upoly, e_k_p, krange, s_p_cylindric, s_p_skew, UMonomial, UPolynomial,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

fn subset_oracle(p: &Poset, k: i64) -> UPolynomial {
    let n = p.len();
    let mut f = UPolynomial::zero(n);
    if k < 0 {
        return f;
    }
    for mask in 0u32..1 << n {
        if mask.count_ones() as i64 != k {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        if set
            .iter()
            .all(|&a| set.iter().all(|&b| a == b || p.comparable(a, b)))
        {
            let exps: Vec<u8> = (0..n).map(|x| (mask >> x & 1) as u8).collect();
            f.add_term(UMonomial::from_exps(&exps), BigInt::from(1));
        }
    }
    f
}

#[test]
fn elementary_functions_sum_over_chains() {
    for n in 0..=5 {
        for p in all_posets(n).unwrap() {
            for k in -1..=n as i64 + 1 {
                assert_eq!(e_k_p(&p, k), subset_oracle(&p, k), "{p} k={k}");
            }
        }
    }
}

#[test]
fn determinants_are_u_positive_on_free_posets() {
    for p in free_posets(4) {
        for size in 0..=4 {
            for s in skew_shapes(size) {
                assert!(s_p_skew(&s, &p)
                    .unwrap()
                    .terms()
                    .all(|(_, c)| !c.is_negative()));
            }
            for cs in cylindric_shapes(size) {
                assert!(
                    s_p_cylindric(&cs, &p)
                        .unwrap()
                        .terms()
                        .all(|(_, c)| !c.is_negative()),
                    "{cs}"
                );
            }
        }
    }
}

#[test]
fn empty_shape_gives_one() {
    for p in free_posets(3) {
        let cs = cylindric_shapes(0).pop().unwrap();
        assert_eq!(s_p_cylindric(&cs, &p).unwrap(), UPolynomial::one(p.len()));
    }
}

#[test]
fn krange_bounds_nonzero_terms() {
    let p = Poset::chain(2).disjoint_union(&Poset::chain(2));
    for cs in cylindric_shapes(4) {
        let ranges = krange(&cs, &p);
        assert_eq!(ranges.len(), cs.width());
        for (k, det) in cylchroma_core::upoly::cylindric_terms(&cs, &p).unwrap() {
            assert!(!det.is_zero());
            assert_eq!(k.iter().sum::<i64>(), 0);
            assert!(
                k.iter().zip(&ranges).all(|(x, r)| r.contains(x)),
                "{cs} {k:?}"
            );
        }
    }
}

#[test]
fn triangular_determinant_is_diagonal_product() {
    let x = |i| UPolynomial::var(3, i);
    let zero = UPolynomial::zero(3);
    let m = vec![
        vec![x(0), x(1), x(2)],
        vec![zero.clone(), x(1), x(0)],
        vec![zero.clone(), zero.clone(), x(2)],
    ];
    assert_eq!(det_upoly(3, &m).unwrap(), x(0).mul(&x(1)).mul(&x(2)));
    assert_eq!(det_upoly::<BigInt>(3, &[]).unwrap(), UPolynomial::one(3));
}

fn e_function() -> impl Strategy<Value = SymFunc> {
    (1usize..=3).prop_flat_map(|deg| {
        let parts = partitions(deg);
        prop::collection::vec(-3i64..=3, parts.len()).prop_map(move |cs| {
            SymFunc::from_terms(
                Basis::E,
                deg,
                parts
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(|c| BigRational::from_integer(c.into()))),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_is_multiplicative(f in e_function(), g in e_function(), idx in any::<prop::sample::Index>()) {
        let posets = free_posets(4);
        let p = &posets[idx.index(posets.len())];
        let lhs = apply_psi(&f.mul_e(&g).unwrap(), p).unwrap();
        let rhs = apply_psi(&f, p).unwrap().mul(&apply_psi(&g, p).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_is_additive(f in e_function(), g in e_function(), idx in any::<prop::sample::Index>()) {
        prop_assume!(f.degree() == g.degree());
        let posets = free_posets(4);
        let p = &posets[idx.index(posets.len())];
        let mut sum = f.clone();
        for (lam, c) in g.terms() {
            sum.add_term(lam.clone(), c.clone()).unwrap();
        }
        let mut rhs = apply_psi(&f, p).unwrap();
        rhs.add_assign(&apply_psi(&g, p).unwrap());
        prop_assert_eq!(apply_psi(&sum, p).unwrap(), rhs);
    }
}
