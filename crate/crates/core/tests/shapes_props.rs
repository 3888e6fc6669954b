mod common;

use std::collections::BTreeSet;

use common::{cylindric_shapes, free_posets, skew_shapes};
use cylchroma_core::shapes::{
    glue_d, partitions, remove_bottom_ribbon, to_postnikov_mcnamara, CylindricShape, Partition,
    SkewShape,
};
use cylchroma_core::tableaux::{enum_cylindric_p_tableaux, enum_p_tableaux};
use proptest::prelude::*;

fn cells(lam: &Partition) -> BTreeSet<(usize, usize)> {
    (1..=lam.len())
        .flat_map(|i| (1..=lam.part(i)).map(move |j| (i, j)))
        .collect()
}

/// Connected, and no two cells on one diagonal step `(i, j), (i+1, j+1)`.
fn is_border_strip(strip: &BTreeSet<(usize, usize)>) -> bool {
    if strip.iter().any(|&(i, j)| strip.contains(&(i + 1, j + 1))) {
        return false;
    }
    let Some(&start) = strip.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        for nb in [
            (i + 1, j),
            (i.wrapping_sub(1), j),
            (i, j + 1),
            (i, j.wrapping_sub(1)),
        ] {
            if strip.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == strip.len()
}

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=12 {
        for lam in partitions(n) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().size(), n);
        }
    }
}

#[test]
fn gluing_adds_the_first_column() {
    for n in 1..=6 {
        for cs in cylindric_shapes(n) {
            let cd = glue_d(cs.skew(), cs.shift());
            let extra = cs.outer().conj_part(1) - cs.inner().conj_part(1);
            assert_eq!(cd.cell_count(), cs.size() + extra, "{cs}");
            assert_eq!(cd.num_columns(), cs.width() + 1);
        }
    }
}

#[test]
fn ribbons_have_period_many_cells() {
    for n in 1..=8 {
        for cs in cylindric_shapes(n).into_iter().filter(|cs| cs.shift() > 0) {
            let period = cs.outer().first() + cs.shift();
            let mut lam = cs.outer().clone();
            let mut steps = 0;
            while lam.len() > cs.shift() {
                let next =
                    remove_bottom_ribbon(&lam, period).unwrap_or_else(|| panic!("{cs} at {lam}"));
                let strip: BTreeSet<_> = cells(&lam).difference(&cells(&next)).copied().collect();
                assert_eq!(strip.len(), period, "{cs}");
                assert!(is_border_strip(&strip), "{cs}");
                assert!(strip.contains(&(lam.len(), 1)), "{cs}");
                lam = next;
                steps += 1;
            }
            let pm = to_postnikov_mcnamara(&cs).unwrap();
            assert_eq!((pm.nu, pm.m, pm.n, pm.k), (lam, steps, period, cs.shift()));
        }
    }
}

#[test]
fn largest_shift_is_the_skew_case() {
    for p in free_posets(3) {
        for n in 1..=5 {
            for s in skew_shapes(n) {
                let d = s.outer().conj_part(1);
                let cs = CylindricShape::new(s.outer().clone(), s.inner().clone(), d).unwrap();
                let ct: BTreeSet<_> = enum_cylindric_p_tableaux(&cs, &p)
                    .unwrap()
                    .map(|t| t.columns().to_vec())
                    .collect();
                let ssyt: BTreeSet<_> = enum_p_tableaux(&s, &p)
                    .unwrap()
                    .map(|t| t.columns().to_vec())
                    .collect();
                assert_eq!(ct, ssyt, "{cs}");
            }
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..6, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn only_weakly_decreasing_parts_are_accepted(v in prop::collection::vec(0usize..6, 0..6)) {
        let sorted = v.windows(2).all(|w| w[0] >= w[1]);
        let parsed = Partition::new(v.clone());
        prop_assert_eq!(parsed.is_ok(), sorted);
        if let Ok(lam) = parsed {
            prop_assert!(lam.parts().iter().all(|&x| x > 0));
            prop_assert_eq!(lam.size(), v.iter().sum::<usize>());
        }
    }

    #[test]
    fn conjugate_counts_columns(lam in partition()) {
        let c = lam.conjugate();
        for j in 1..=lam.first() {
            prop_assert_eq!(c.part(j), (1..=lam.len()).filter(|&i| lam.part(i) >= j).count());
        }
        prop_assert_eq!(lam.dominates(&lam), true);
    }

    #[test]
    fn shape_strings_round_trip(lam in partition(), mu in partition()) {
        prop_assume!(lam.contains(&mu));
        let skew = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let (lo, hi) = CylindricShape::window(&skew);
        for d in lo..=hi {
            let cs = CylindricShape::new(lam.clone(), mu.clone(), d).unwrap();
            let back: CylindricShape = cs.to_string().parse().unwrap();
            prop_assert_eq!(back, cs);
        }
        if hi < lam.len() + 1 && lam.first() > 0 {
            prop_assert!(CylindricShape::new(lam.clone(), mu.clone(), hi + 1).is_err());
        }
    }
}
