//! Weyl group action on roots, and conjugation of antichains into the
//! simple roots.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::poset::Antichain;
use crate::{Error, Result, Root, RootSystem};

/// A word in the simple reflections.
///
/// Letters are 0-based simple indices and act left to right: the word
/// `[i, j]` sends `β` to `s_j(s_i(β))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: rs.rank(),
            });
        }
        Ok(WeylWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn apply(&self, rs: &RootSystem, root: &Root) -> Root {
        self.letters
            .iter()
            .fold(root.clone(), |r, &i| reflect(rs, i, &r))
    }
}

fn reflect(rs: &RootSystem, i: usize, root: &Root) -> Root {
    let p = rs.pairing(root, i);
    let mut v = root.coeffs().to_vec();
    v[i] -= p;
    Root::new(v)
}

/// `s_i(β) = β - <β, α_i^∨> α_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize, root: &Root) -> Result<Root> {
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    rs.check_root(root)?;
    Ok(reflect(rs, i, root))
}

/// Limit on the number of expanded states in [`conjugate_antichain_to_simple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_expanded: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_expanded: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugation {
    pub word: WeylWord,
    /// `w(Γ)`, a set of simple roots, in the order of `Γ`.
    pub image: Vec<Root>,
    pub expanded: usize,
}

// A negative root costs more than any positive one of the same height so
// that sign flips are only taken when nothing better is available.
const NEGATIVE_PENALTY: i64 = 4;

fn score(image: &[Root]) -> i64 {
    image
        .iter()
        .map(|r| {
            let h = r.height();
            if h > 0 {
                h - 1
            } else {
                -h - 1 + NEGATIVE_PENALTY
            }
        })
        .sum()
}

/// Finds `w` in the Weyl group with `w(Γ) ⊆ Π`.
///
/// Best-first search over the images of `Γ` under words in the simple
/// reflections, ordered by total height of the image. Visited image sets
/// are remembered, so the search space is at most the orbit of `Γ` and
/// the search is complete up to the budget.
pub fn conjugate_antichain_to_simple(
    rs: &RootSystem,
    gamma: &Antichain,
    budget: SearchBudget,
) -> Result<Conjugation> {
    if gamma.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    let start: Vec<Root> = canonical(gamma.roots().to_vec());
    // arena of (image set, parent, letter)
    let mut nodes: Vec<(Vec<Root>, Option<usize>, usize)> = Vec::new();
    let mut seen: BTreeMap<Vec<Root>, ()> = BTreeMap::new();
    let mut heap = BinaryHeap::new();
    seen.insert(start.clone(), ());
    heap.push(Reverse((score(&start), start.clone(), 0usize)));
    nodes.push((start, None, 0));
    let mut expanded = 0;
    while let Some(Reverse((_, state, id))) = heap.pop() {
        if state.iter().all(|r| r.is_positive() && r.height() == 1) {
            let mut letters = Vec::new();
            let mut cur = id;
            while let (_, Some(parent), letter) = &nodes[cur] {
                letters.push(*letter);
                cur = *parent;
            }
            letters.reverse();
            let word = WeylWord { letters };
            let image: Vec<Root> = gamma.roots().iter().map(|g| word.apply(rs, g)).collect();
            if !image.iter().all(|r| r.is_positive() && r.height() == 1) {
                return Err(Error::InvariantViolation {
                    detail: alloc::format!("word {:?} does not map Γ into Π", word.letters),
                    trace: Vec::new(),
                });
            }
            return Ok(Conjugation {
                word,
                image,
                expanded,
            });
        }
        expanded += 1;
        if expanded > budget.max_expanded {
            return Err(Error::SearchExhausted {
                expanded: budget.max_expanded,
            });
        }
        for i in 0..rs.rank() {
            let next = canonical(state.iter().map(|r| reflect(rs, i, r)).collect());
            if seen.contains_key(&next) {
                continue;
            }
            seen.insert(next.clone(), ());
            let nid = nodes.len();
            nodes.push((next.clone(), Some(id), i));
            heap.push(Reverse((score(&next), next, nid)));
        }
    }
    // the orbit is finite; running out means the conjugate does not exist
    Err(Error::InvariantViolation {
        detail: alloc::string::String::from("orbit exhausted without reaching Π"),
        trace: Vec::new(),
    })
}

fn canonical(mut v: Vec<Root>) -> Vec<Root> {
    v.sort();
    v
}
