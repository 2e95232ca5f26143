mod common;

use borel_core::chevalley::*;
use borel_core::poset::{enumerate_antichains, up_closure, FilterSpec};
use borel_core::Root;
use common::*;

#[test]
fn jacobi_identity_up_to_rank_four() {
    for label in RANK_LE_4 {
        let s = rs(label);
        let sc = build_structure_constants(&s, SignConvention::Positive);
        assert!(check_constants(&s, &sc).is_empty(), "{label}");
        let all: Vec<Root> = s.positive_roots().iter().flat_map(|r| [r.clone(), r.neg()]).collect();
        assert!(jacobi_failures(&s, &sc, &all).is_empty(), "{label}");
    }
}

#[test]
fn constants_are_absent_off_the_root_sums() {
    let s = rs("B3");
    let sc = build_structure_constants(&s, SignConvention::Positive);
    let all: Vec<Root> = s.positive_roots().iter().flat_map(|r| [r.clone(), r.neg()]).collect();
    for a in &all {
        for b in &all {
            assert_eq!(sc.get(a, b).is_some(), s.contains(&a.add(b)));
        }
    }
}

fn socle_cone_suite(label: &str, sign: SignConvention) -> usize {
    let s = rs(label);
    let sc = build_structure_constants(&s, sign);
    let mut checked = 0;
    for ac in enumerate_antichains(&s, FilterSpec::NonEmpty) {
        let ideal = up_closure(&s, ac.roots());
        for c in check_invariants_on_socle_cone(&s, &sc, &ideal, 4).unwrap() {
            assert!(c.passed, "{label} {c:?}");
            checked += 1;
        }
    }
    checked
}

#[test]
fn invariants_on_the_socle_cone_are_socle_monomials() {
    for label in ["A2", "A3", "B2"] {
        assert!(socle_cone_suite(label, SignConvention::Positive) > 0);
    }
}

#[test]
fn socle_cone_outcome_is_sign_independent() {
    assert_eq!(
        socle_cone_suite("A3", SignConvention::Flipped),
        socle_cone_suite("A3", SignConvention::Positive)
    );
}

#[test]
fn socle_monomials_are_killed_by_the_nilradical() {
    for label in RANK_LE_4 {
        let s = rs(label);
        for ac in enumerate_antichains(&s, FilterSpec::NonEmpty) {
            let ideal = up_closure(&s, ac.roots());
            assert!(check_socle_monomial_invariance(&s, &ideal).passed());
        }
    }
}

#[test]
fn kernel_vectors_are_exact() {
    let s = rs("B2");
    let sc = build_structure_constants(&s, SignConvention::Positive);
    let ideal = borel_core::poset::RootIdeal::full(&s);
    for w in [[-1, -1], [-1, -2], [-2, -2], [-2, -3]] {
        let inv = invariant_subspace(&s, &sc, &ideal, &w, Acting::Nilradical).unwrap();
        for beta in s.positive_roots() {
            for v in &inv.vectors {
                let mut total = std::collections::BTreeMap::new();
                for (m, c) in inv.space.basis.iter().zip(v) {
                    for (img, d) in apply_derivation(&sc, &ideal, beta, m) {
                        *total.entry(img).or_insert(borel_core::Rational::from_integer(0)) += d * c;
                    }
                }
                assert!(total.values().all(|x| *x == borel_core::Rational::from_integer(0)));
            }
        }
    }
}
