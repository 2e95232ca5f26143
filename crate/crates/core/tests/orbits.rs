mod common;

use borel_core::certificates::construct_certificate;
use borel_core::orbits::*;
use borel_core::poset::{enumerate_antichains, up_closure, FilterSpec, RootIdeal};
use borel_core::{Rational, RootSystem};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zero_one_elements(s: &RootSystem) -> impl Iterator<Item = NilpotentElement> + '_ {
    let roots = s.positive_roots();
    (0u32..1 << roots.len()).map(move |mask| {
        let support: Vec<_> = (0..roots.len()).filter(|i| mask >> i & 1 == 1).map(|i| roots[i].clone()).collect();
        NilpotentElement::from_support(s, &support).unwrap()
    })
}

fn all_ideals(s: &RootSystem) -> Vec<RootIdeal> {
    enumerate_antichains(s, FilterSpec::All).map(|ac| up_closure(s, ac.roots())).collect()
}

#[test]
fn bullet_characterisations_agree() {
    for label in ["A2", "A3"] {
        let s = rs(label);
        let ideals = all_ideals(&s);
        for x in zero_one_elements(&s) {
            for m in &ideals {
                assert_eq!(in_bullet_by_socle(&s, &x, m), in_bullet_by_minimal_ideal(&s, &x, m));
            }
        }
    }
}

#[test]
fn strata_partition_the_nilradical() {
    for label in ["A2", "A3"] {
        let s = rs(label);
        let ideals = all_ideals(&s);
        for x in zero_one_elements(&s) {
            let hits: Vec<&RootIdeal> = ideals.iter().filter(|m| in_m_bullet(&s, &x, m).unwrap()).collect();
            assert_eq!(hits.len(), 1, "{x:?}");
            assert_eq!(*hits[0], support_and_socle(&s, &x).unwrap().ideal);
        }
    }
}

fn random_element<R: Rng>(s: &RootSystem, rng: &mut R) -> (RootIdeal, NilpotentElement) {
    let ideal = random_ideal(s, rng);
    let soc = borel_core::poset::socle(s, &ideal);
    let mut terms: Vec<_> = soc.roots().iter().map(|r| (r.clone(), random_coeff(rng))).collect();
    for r in ideal.roots() {
        if !soc.contains(r) && rng.gen_bool(0.5) {
            terms.push((r.clone(), random_coeff(rng)));
        }
    }
    (ideal, NilpotentElement::new(s, terms).unwrap())
}

fn random_coeff<R: Rng>(rng: &mut R) -> Rational {
    let mut n = rng.gen_range(-9..=9);
    if n == 0 {
        n = 1;
    }
    Rational::new(n, rng.gen_range(1..=5))
}

#[test]
fn degeneration_lands_on_the_socle_orbit() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let types = rank_le_8();
    for k in 0..500 {
        let s = rs(&types[k % types.len()]);
        let (ideal, y) = random_element(&s, &mut rng);
        assert!(in_m_bullet(&s, &y, &ideal).unwrap());
        let soc = borel_core::poset::socle(&s, &ideal);
        let cert = construct_certificate(&s, &soc).unwrap().certificate;
        let x = torus_degenerate(&s, &y, &cert).unwrap();
        assert_eq!(x.support(&s), soc.roots());
        assert!(in_m_bullet(&s, &x, &ideal).unwrap());
        for r in soc.roots() {
            assert_eq!(x.coeff(r), y.coeff(r));
        }
        let reference = NilpotentElement::from_support(&s, soc.roots()).unwrap();
        assert!(same_torus_orbit_linindep(&s, &reference, &x).unwrap());
    }
}

#[test]
fn torus_scaling_preserves_socle_and_minimal_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for label in ["A4", "B3", "C4", "D5", "G2", "F4", "E6"] {
        let s = rs(label);
        for _ in 0..20 {
            let (_, y) = random_element(&s, &mut rng);
            let h: Vec<i64> = (0..s.rank()).map(|_| rng.gen_range(-3..=3)).collect();
            let t = Rational::new(rng.gen_range(1..=4), rng.gen_range(1..=4));
            let z = torus_action(&y, &h, t).unwrap();
            let (a, b) = (support_and_socle(&s, &y).unwrap(), support_and_socle(&s, &z).unwrap());
            assert_eq!(a, b);
        }
    }
}

#[test]
fn fixtures_are_genuine_elements() {
    let (f4, x) = load_fixture("F4").unwrap();
    assert_eq!(
        x.support(&f4),
        vec![root(&[0, 0, 0, 1]), root(&[0, 0, 1, 0]), root(&[1, 0, 0, 0]), root(&[1, 1, 0, 0]), root(&[1, 3, 4, 2])]
    );
    let (c4, x) = load_fixture("C4").unwrap();
    assert_eq!(x.terms().len(), 5);
    assert!(x.terms().contains_key(&root(&[0, 2, 2, 1])));
    assert!(c4.is_positive_root(&root(&[0, 2, 2, 1])));
    for name in FIXTURES {
        let (s, x) = load_fixture(name).unwrap();
        for r in x.terms().keys() {
            assert!(s.is_positive_root(r), "{name} {r}");
        }
        assert!(x.terms().values().all(|c| *c == Rational::from_integer(1)));
    }
}
