mod common;

use common::{cylindric_shapes, free_posets};
use cylchroma_core::involution::{
    enumerate_b, phi, phi_step, shifted_diagram, trace_line, BTriple,
};
use cylchroma_core::poset::Poset;
use cylchroma_core::shapes::CylindricShape;
use cylchroma_core::tableaux::{enum_cylindric_p_tableaux, is_p_tableau};
use cylchroma_core::upoly::UPolynomial;
use cylchroma_core::Error;
use num_bigint::BigInt;

fn corpus() -> Vec<(Poset, CylindricShape)> {
    let shapes: Vec<CylindricShape> = (1..=4).flat_map(cylindric_shapes).collect();
    free_posets(4)
        .into_iter()
        .filter(|p| !p.is_empty())
        .flat_map(|p| shapes.iter().map(move |cs| (p.clone(), cs.clone())))
        .collect()
}

fn weight(t: &BTriple, n: usize) -> cylchroma_core::upoly::UMonomial {
    t.array().u_weight(n)
}

#[test]
fn phi_is_a_sign_reversing_involution_with_kbound_two() {
    for (p, cs) in corpus() {
        let en = enumerate_b(&cs, &p, 2).unwrap();
        for t in &en.b {
            let step = phi_step(t, &p).unwrap();
            let image = step.image;
            assert!(!step.tie);
            assert!(image.in_b(&p), "{cs}");
            assert_eq!(image.sign(), -t.sign());
            assert_eq!(weight(&image, p.len()), weight(t, p.len()));
            assert_eq!(
                shifted_diagram(image.columns(), image.mu()).as_ref(),
                Some(image.array().diagram()),
                "{cs}"
            );
            assert!(phi(&image, &p).unwrap() == *t, "{cs}");
        }
    }
}

#[test]
fn fixed_points_are_the_cylindric_tableaux() {
    for (p, cs) in corpus() {
        let en = enumerate_b(&cs, &p, 2).unwrap();
        let mut listed: Vec<_> = en
            .rest
            .iter()
            .map(|t| t.array().columns().to_vec())
            .collect();
        for t in &en.rest {
            assert!(t.columns().is_identity(), "{cs}");
            assert!(is_p_tableau(&t.glued(), &p));
            assert!(matches!(phi(t, &p), Err(Error::NotInB)));
        }
        let mut ct: Vec<_> = enum_cylindric_p_tableaux(&cs, &p)
            .unwrap()
            .map(|t| t.columns().to_vec())
            .collect();
        listed.sort();
        ct.sort();
        assert_eq!(listed, ct, "{cs}");
    }
}

#[test]
fn signed_sum_cancels_once_the_window_is_complete() {
    for (p, cs) in corpus() {
        let en = enumerate_b(&cs, &p, 8).unwrap();
        assert!(!en.truncated, "{cs}");
        let mut sum = UPolynomial::zero(p.len());
        for t in &en.b {
            sum.add_term(weight(t, p.len()), BigInt::from(t.sign()));
        }
        assert!(sum.is_zero(), "{cs}");
    }
}

#[test]
fn trace_lines_name_the_partner() {
    let p = Poset::chain(3);
    let cs: CylindricShape = "2,1//1".parse().unwrap();
    let en = enumerate_b(&cs, &p, 2).unwrap();
    assert_eq!(en.b.len(), 4);
    for t in &en.b {
        let line = trace_line(t, &p).unwrap();
        let partner = phi(t, &p).unwrap();
        assert!(line.starts_with(&t.key()));
        assert!(line.ends_with(&format!("partner={}", partner.digest())));
        assert_eq!(trace_line(t, &p).unwrap(), line);
    }
}

#[test]
fn size_guards() {
    let cs: CylindricShape = "5//1".parse().unwrap();
    assert!(matches!(
        enumerate_b(&cs, &Poset::chain(5), 2),
        Err(Error::Size { .. })
    ));
    let cs: CylindricShape = "2//1".parse().unwrap();
    assert!(matches!(
        enumerate_b(&cs, &Poset::chain(6), 2),
        Err(Error::Size { .. })
    ));
}
