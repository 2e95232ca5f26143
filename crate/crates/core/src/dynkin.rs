//! Identification of Cartan submatrices with standard types.

use alloc::vec;
use alloc::vec::Vec;

use crate::roots::{Component, Family, RootSystemType};

/// A connected piece of a diagram matched to a standard component.
///
/// `map[k]` is the index, in the matrix that was identified, of the `k`-th
/// simple root of the standard numbering of `component`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub component: Component,
    pub map: Vec<usize>,
}

/// Connected components of the Dynkin diagram restricted to `indices`,
/// each sorted, listed by smallest member.
pub fn connected_components(cartan: &[Vec<i64>], indices: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cartan.len()];
    let mut out = Vec::new();
    for &start in indices {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in indices {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Splits the diagram on `indices` into components and matches each with a
/// standard type. Returns `None` if some component is not of finite type.
pub fn identify(cartan: &[Vec<i64>], indices: &[usize]) -> Option<Vec<Embedding>> {
    connected_components(cartan, indices)
        .into_iter()
        .map(|comp| identify_connected(cartan, &comp))
        .collect()
}

/// Identifies a whole Cartan matrix.
pub fn identify_matrix(cartan: &[Vec<i64>]) -> Option<Vec<Embedding>> {
    let all: Vec<usize> = (0..cartan.len()).collect();
    identify(cartan, &all)
}

/// The type described by a list of embeddings.
pub fn type_of(embeddings: &[Embedding]) -> RootSystemType {
    let mut comps: Vec<Component> = embeddings.iter().map(|e| e.component).collect();
    comps.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
    RootSystemType::new(comps).expect("identified components are valid")
}

fn identify_connected(cartan: &[Vec<i64>], comp: &[usize]) -> Option<Embedding> {
    let k = comp.len();
    // order-preserving matches first, so that e.g. the tail of C_ℓ reads as C2
    for monotone in [true, false] {
        for family in Family::ALL {
            if !family.admits_rank(k) {
                continue;
            }
            let component = Component::new(family, k).ok()?;
            let std_cartan = component.cartan();
            let mut map = Vec::with_capacity(k);
            let mut used = vec![false; k];
            if extend(&std_cartan, cartan, comp, monotone, &mut map, &mut used) {
                return Some(Embedding { component, map });
            }
        }
    }
    None
}

fn extend(
    std: &[Vec<i64>],
    amb: &[Vec<i64>],
    comp: &[usize],
    monotone: bool,
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = map.len();
    if k == comp.len() {
        return true;
    }
    for (slot, &cand) in comp.iter().enumerate() {
        if used[slot] || amb[cand][cand] != std[k][k] {
            continue;
        }
        if monotone && map.last().is_some_and(|&last| cand < last) {
            continue;
        }
        let consistent = map
            .iter()
            .enumerate()
            .all(|(i, &m)| std[i][k] == amb[m][cand] && std[k][i] == amb[cand][m]);
        if !consistent {
            continue;
        }
        used[slot] = true;
        map.push(cand);
        if extend(std, amb, comp, monotone, map, used) {
            return true;
        }
        map.pop();
        used[slot] = false;
    }
    false
}
