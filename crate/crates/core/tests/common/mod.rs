#![allow(dead_code)]

use borel_core::poset::{up_closure, Antichain, RootIdeal};
use borel_core::{Root, RootOrder, RootSystem};
use rand::seq::SliceRandom;
use rand::Rng;

pub const RANK_LE_4: [&str; 14] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4", "A1xA1",
];

pub const IRREDUCIBLE_RANK_LE_4: [&str; 13] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4",
];

pub fn rank_le_8() -> Vec<String> {
    let mut v = Vec::new();
    for n in 1..=8 {
        v.push(format!("A{n}"));
    }
    for n in 2..=8 {
        v.push(format!("B{n}"));
    }
    for n in 3..=8 {
        v.push(format!("C{n}"));
    }
    for n in 4..=8 {
        v.push(format!("D{n}"));
    }
    for t in ["E6", "E7", "E8", "F4", "G2", "A1xA1", "A2xG2", "B3xA2", "D4xA1", "A3xA3xA2", "F4xB2xC2"] {
        v.push(t.to_string());
    }
    v
}

pub fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

pub fn root(v: &[i64]) -> Root {
    Root::new(v.to_vec())
}

pub fn comparable(rs: &RootSystem, a: &Root, b: &Root) -> bool {
    matches!(rs.compare(a, b).unwrap(), RootOrder::Less | RootOrder::Greater | RootOrder::Equal)
}

/// A random nonempty antichain: roots in random order, each kept when it is
/// incomparable with everything kept so far, up to a random size.
pub fn random_antichain<R: Rng>(rs: &RootSystem, rng: &mut R) -> Antichain {
    let mut pool = rs.positive_roots().to_vec();
    pool.shuffle(rng);
    let target = rng.gen_range(1..=rs.rank());
    let mut chosen: Vec<Root> = Vec::new();
    for r in pool {
        if chosen.len() == target {
            break;
        }
        if chosen.iter().all(|c| !comparable(rs, c, &r)) {
            chosen.push(r);
        }
    }
    Antichain::new(rs, chosen).unwrap()
}

pub fn random_ideal<R: Rng>(rs: &RootSystem, rng: &mut R) -> RootIdeal {
    up_closure(rs, random_antichain(rs, rng).roots())
}

/// Number of antichains including the empty one, `∏ (h + d_i) / d_i` over
/// the degrees of the Weyl group.
pub fn catalan_number(label: &str) -> u128 {
    let family = &label[..1];
    let n: u128 = label[1..].parse().unwrap();
    let degrees: Vec<u128> = match family {
        "A" => (2..=n + 1).collect(),
        "B" | "C" => (1..=n).map(|k| 2 * k).collect(),
        "D" => (1..n).map(|k| 2 * k).chain([n]).collect(),
        "E" => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            _ => unreachable!(),
        },
        "F" => vec![2, 6, 8, 12],
        "G" => vec![2, 6],
        _ => unreachable!(),
    };
    let h = *degrees.iter().max().unwrap();
    let num: u128 = degrees.iter().map(|d| h + d).product();
    let den: u128 = degrees.iter().product();
    num / den
}

/// `|Δ⁺|` from the classification.
pub fn positive_root_count(label: &str) -> usize {
    let n: usize = label[1..].parse().unwrap();
    match &label[..1] {
        "A" => n * (n + 1) / 2,
        "B" | "C" => n * n,
        "D" => n * (n - 1),
        "E" => [36, 63, 120][n - 6],
        "F" => 24,
        "G" => 6,
        _ => unreachable!(),
    }
}

/// Subsets of `Δ⁺` that are pairwise incomparable, by brute force.
pub fn naive_antichain_count(rs: &RootSystem) -> usize {
    let roots = rs.positive_roots();
    let m = roots.len();
    assert!(m <= 20);
    (0u32..1 << m)
        .filter(|mask| {
            let set: Vec<&Root> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| &roots[i]).collect();
            set.iter()
                .enumerate()
                .all(|(i, a)| set[i + 1..].iter().all(|b| !comparable(rs, a, b)))
        })
        .count()
}
