//! The root poset: antichains, upward-closed ideals and socles.
//!
//! An upward-closed set of positive roots is the root set of a nilpotent
//! ideal of the Borel subalgebra, and its minimal elements (its socle) form
//! an antichain. `up_closure` and `socle` are mutually inverse bijections
//! between the two kinds of sets.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin;
use crate::linalg;
use crate::roots::{RootOrder, RootSystemType};
use crate::{Error, Result, Root, RootSystem};

/// Sorts roots by the system's fixed order (height, then lexicographic).
fn sort_roots(rs: &RootSystem, roots: &mut [Root]) {
    roots.sort_by_key(|r| rs.index_of(r));
}

/// A set of pairwise incomparable positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain {
    roots: Vec<Root>,
}

impl Antichain {
    pub fn new(rs: &RootSystem, mut roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            rs.check_positive(r)?;
        }
        sort_roots(rs, &mut roots);
        roots.dedup();
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if rs.compare(a, b)? != RootOrder::Incomparable {
                    return Err(Error::NotAnAntichain(a.coeffs().to_vec(), b.coeffs().to_vec()));
                }
            }
        }
        Ok(Antichain { roots })
    }

    pub(crate) fn from_sorted(roots: Vec<Root>) -> Self {
        Antichain { roots }
    }

    pub fn empty() -> Self {
        Antichain { roots: Vec::new() }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.contains(root)
    }

    /// Union of the supports of the members.
    pub fn support(&self) -> BTreeSet<usize> {
        self.roots.iter().flat_map(|r| r.support()).collect()
    }
}

/// An upward-closed set of positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootIdeal {
    roots: Vec<Root>,
}

impl RootIdeal {
    /// Checks upward closure; the error names a member and a root above it
    /// that is missing.
    pub fn new(rs: &RootSystem, mut roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            rs.check_positive(r)?;
        }
        sort_roots(rs, &mut roots);
        roots.dedup();
        let members: BTreeSet<&Root> = roots.iter().collect();
        for a in &roots {
            for b in rs.positive_roots() {
                if a.is_below(b) && !members.contains(b) {
                    return Err(Error::NotUpClosed {
                        member: a.coeffs().to_vec(),
                        above: b.coeffs().to_vec(),
                    });
                }
            }
        }
        Ok(RootIdeal { roots })
    }

    /// The whole nilradical.
    pub fn full(rs: &RootSystem) -> Self {
        RootIdeal {
            roots: rs.positive_roots().to_vec(),
        }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.binary_search_by(|r| r.height().cmp(&root.height()).then(r.cmp(root))).is_ok()
    }
}

/// Smallest upward-closed set containing `roots`.
pub fn up_closure(rs: &RootSystem, roots: &[Root]) -> RootIdeal {
    let closed = rs
        .positive_roots()
        .iter()
        .filter(|b| roots.iter().any(|g| g.is_below(b)))
        .cloned()
        .collect();
    RootIdeal { roots: closed }
}

/// Minimal elements of an arbitrary set of roots, in system order.
pub fn minimal_elements(rs: &RootSystem, roots: &[Root]) -> Vec<Root> {
    let mut out: Vec<Root> = roots
        .iter()
        .filter(|a| !roots.iter().any(|b| b != *a && b.is_below(a)))
        .cloned()
        .collect();
    sort_roots(rs, &mut out);
    out.dedup();
    out
}

pub fn socle(rs: &RootSystem, ideal: &RootIdeal) -> Antichain {
    Antichain::from_sorted(minimal_elements(rs, ideal.roots()))
}

/// Socle of a root set that is supposed to be an ideal.
pub fn socle_of(rs: &RootSystem, roots: Vec<Root>) -> Result<Antichain> {
    Ok(socle(rs, &RootIdeal::new(rs, roots)?))
}

/// How "maximal by inclusion" is read for the residual filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Maximality {
    /// Maximal among antichains containing no simple root.
    AmongNonSimple,
    /// Maximal among antichains that themselves pass the residual filter.
    AmongFiltered,
}

/// Selection of antichains for [`enumerate_antichains`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FilterSpec {
    All,
    NonEmpty,
    /// Antichains left over by the reductions of the certificate construction
    /// in exceptional types: at least three roots, full support, no simple
    /// root, and maximal by inclusion.
    Case4(Maximality),
}

/// Fixed-width bit set over positive-root ordinals.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Smallest set bit at or after `from`.
    fn next_from(&self, from: usize) -> Option<usize> {
        let mut w = from / 64;
        if w >= self.0.len() {
            return None;
        }
        let mut word = self.0[w] & (!0u64).checked_shl((from % 64) as u32).unwrap_or(0);
        loop {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
            w += 1;
            if w >= self.0.len() {
                return None;
            }
            word = self.0[w];
        }
    }

    /// Clears every bit at or below `i`.
    fn above(&self, i: usize) -> Bits {
        let mut b = self.clone();
        for (w, word) in b.0.iter_mut().enumerate() {
            let lo = w * 64;
            if i + 1 >= lo + 64 {
                *word = 0;
            } else if i + 1 > lo {
                *word &= !0u64 << (i + 1 - lo);
            }
        }
        b
    }
}

/// Precomputed incomparability relation on the positive roots.
pub(crate) struct Incomparability {
    rows: Vec<Bits>,
    n: usize,
}

impl Incomparability {
    pub(crate) fn new(rs: &RootSystem) -> Self {
        let roots = rs.positive_roots();
        let n = roots.len();
        let rows = (0..n)
            .map(|i| {
                let mut b = Bits::new(n);
                for j in 0..n {
                    if !roots[i].is_below(&roots[j]) && !roots[j].is_below(&roots[i]) {
                        b.set(j);
                    }
                }
                b
            })
            .collect();
        Incomparability { rows, n }
    }
}

struct Frame {
    candidates: Bits,
    cursor: usize,
}

/// Lazy depth-first enumeration of antichains.
///
/// Roots are added in increasing system order and candidates are pruned by
/// incomparability with the roots already chosen, so only antichains are
/// ever visited.
pub struct Antichains<'a> {
    rs: &'a RootSystem,
    inc: Incomparability,
    filter: FilterSpec,
    universe: Bits,
    non_simple: Bits,
    stack: Vec<Frame>,
    chosen: Vec<usize>,
    started: bool,
}

impl<'a> Antichains<'a> {
    fn new(rs: &'a RootSystem, filter: FilterSpec) -> Self {
        let inc = Incomparability::new(rs);
        let mut non_simple = Bits::new(inc.n);
        for (i, r) in rs.positive_roots().iter().enumerate() {
            if r.height() > 1 {
                non_simple.set(i);
            }
        }
        let universe = match filter {
            FilterSpec::Case4(_) => non_simple.clone(),
            _ => {
                let mut all = Bits::new(inc.n);
                (0..inc.n).for_each(|i| all.set(i));
                all
            }
        };
        Antichains {
            rs,
            inc,
            filter,
            universe,
            non_simple,
            stack: Vec::new(),
            chosen: Vec::new(),
            started: false,
        }
    }

    fn next_raw(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            self.stack.push(Frame {
                candidates: self.universe.clone(),
                cursor: 0,
            });
            return Some(&self.chosen);
        }
        loop {
            let top = self.stack.last_mut()?;
            match top.candidates.next_from(top.cursor) {
                None => {
                    self.stack.pop();
                    self.chosen.pop();
                }
                Some(i) => {
                    top.cursor = i + 1;
                    let candidates = top.candidates.and(&self.inc.rows[i]).above(i);
                    self.chosen.push(i);
                    self.stack.push(Frame {
                        candidates,
                        cursor: i + 1,
                    });
                    return Some(&self.chosen);
                }
            }
        }
    }

    fn residual_base(&self, chosen: &[usize]) -> bool {
        let roots = self.rs.positive_roots();
        if chosen.len() < 3 || chosen.iter().any(|&i| roots[i].height() == 1) {
            return false;
        }
        let mut support = vec![false; self.rs.rank()];
        for &i in chosen {
            for s in roots[i].support() {
                support[s] = true;
            }
        }
        support.iter().all(|&b| b)
    }

    /// Roots that could extend `chosen` to a larger antichain with no simple root.
    fn extensions(&self, chosen: &[usize]) -> Bits {
        chosen
            .iter()
            .fold(self.non_simple.clone(), |acc, &i| acc.and(&self.inc.rows[i]))
    }

    fn accepts(&self, chosen: &[usize]) -> bool {
        match self.filter {
            FilterSpec::All => true,
            FilterSpec::NonEmpty => !chosen.is_empty(),
            FilterSpec::Case4(m) => {
                if !self.residual_base(chosen) {
                    return false;
                }
                let ext = self.extensions(chosen);
                match m {
                    Maximality::AmongNonSimple => ext.is_empty(),
                    Maximality::AmongFiltered => {
                        let n = self.inc.n;
                        !(0..n).filter(|&j| ext.get(j)).any(|j| {
                            let mut bigger = chosen.to_vec();
                            bigger.push(j);
                            bigger.sort_unstable();
                            self.residual_base(&bigger)
                        })
                    }
                }
            }
        }
    }
}

impl Iterator for Antichains<'_> {
    type Item = Antichain;

    fn next(&mut self) -> Option<Antichain> {
        loop {
            let chosen = self.next_raw()?.to_vec();
            if self.accepts(&chosen) {
                let roots = self.rs.positive_roots();
                return Some(Antichain::from_sorted(
                    chosen.iter().map(|&i| roots[i].clone()).collect(),
                ));
            }
        }
    }
}

/// All antichains passing `filter`, in a fixed deterministic order.
pub fn enumerate_antichains(rs: &RootSystem, filter: FilterSpec) -> Antichains<'_> {
    Antichains::new(rs, filter)
}

/// Statistics of `Δ₁⁺`, the positive roots involving `α_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Delta1Stats {
    pub size: usize,
    /// Largest antichain contained in `Δ₁⁺`.
    pub max_antichain: usize,
    /// Nonempty antichains contained in `Δ₁⁺`.
    pub nonempty_antichains: usize,
    /// Distinct sets `Γ ∩ Δ₁⁺` over the residual (case 4) antichains `Γ`.
    pub case4_intersections: usize,
}

pub fn delta1_stats(rs: &RootSystem) -> Result<Delta1Stats> {
    if !rs.root_type().is_irreducible() {
        return Err(Error::Reducible(alloc::format!("{}", rs.root_type())));
    }
    let in_delta1 = |r: &Root| r.coeffs()[0] != 0;
    let size = rs.positive_roots().iter().filter(|r| in_delta1(r)).count();
    let mut max_antichain = 0;
    let mut nonempty_antichains = 0;
    for ac in enumerate_antichains(rs, FilterSpec::NonEmpty) {
        if ac.roots().iter().all(in_delta1) {
            nonempty_antichains += 1;
            max_antichain = max_antichain.max(ac.len());
        }
    }
    let intersections: BTreeSet<Vec<Root>> =
        enumerate_antichains(rs, FilterSpec::Case4(Maximality::AmongNonSimple))
            .map(|ac| ac.roots().iter().filter(|r| in_delta1(r)).cloned().collect())
            .collect();
    Ok(Delta1Stats {
        size,
        max_antichain,
        nonempty_antichains,
        case4_intersections: intersections.len(),
    })
}

/// A root of the subsystem generated by an antichain, with its integer
/// coordinates over the antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemRoot {
    pub root: Root,
    pub coords: Vec<i64>,
}

/// The root system `Δ_Γ = ℚΓ ∩ Δ` generated by an antichain `Γ`.
#[derive(Clone, Debug)]
pub struct Subsystem {
    /// All of `Δ_Γ`, both signs.
    pub roots: Vec<SubsystemRoot>,
    /// `ℕΓ ∩ Δ`.
    pub positive: Vec<SubsystemRoot>,
    /// Type of `Δ_Γ` with `Γ` as its simple roots (in the order of `Γ`).
    pub root_type: RootSystemType,
    /// Whether every root in `ℚΓ` had integer coordinates.
    pub integral: bool,
}

/// Computes `Δ_Γ` by solving for the rational coordinates of every root of
/// `Δ` in the basis `Γ`.
pub fn antichain_subsystem(rs: &RootSystem, gamma: &Antichain) -> Result<Subsystem> {
    if gamma.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    let basis: Vec<Vec<i64>> = gamma.roots().iter().map(|r| r.coeffs().to_vec()).collect();
    if !linalg::is_independent(&basis) {
        return Err(Error::Dependent);
    }
    let mut roots = Vec::new();
    let mut positive = Vec::new();
    let mut integral = true;
    let all = rs
        .positive_roots()
        .iter()
        .flat_map(|r| [r.clone(), r.neg()]);
    for delta in all {
        let Some(x) = linalg::coordinates(&basis, delta.coeffs()) else {
            continue;
        };
        if x.iter().any(|c| !c.is_integer()) {
            integral = false;
            continue;
        }
        let coords: Vec<i64> = x.iter().map(|c| c.to_integer()).collect();
        let entry = SubsystemRoot { root: delta, coords };
        if entry.coords.iter().all(|&c| c >= 0) {
            positive.push(entry.clone());
        }
        roots.push(entry);
    }
    positive.sort_by(|a, b| {
        let ha: i64 = a.coords.iter().sum();
        let hb: i64 = b.coords.iter().sum();
        ha.cmp(&hb).then_with(|| a.coords.cmp(&b.coords))
    });
    // Cartan integers of Δ_Γ from root strings: γ_j - γ_i is never a root,
    // so <γ_j, γ_i^∨> = -max{k : γ_j + kγ_i ∈ Δ}.
    let g = gamma.roots();
    let k = g.len();
    let mut cartan = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                cartan[i][j] = 2;
                continue;
            }
            let mut q = 0;
            let mut probe = g[j].add(&g[i]);
            while rs.contains(&probe) {
                q += 1;
                probe = probe.add(&g[i]);
            }
            cartan[i][j] = -q;
        }
    }
    let root_type = dynkin::identify_matrix(&cartan)
        .map(|emb| dynkin::type_of(&emb))
        .ok_or_else(|| Error::InvariantViolation {
            detail: alloc::format!("subsystem Cartan matrix {cartan:?} is not of finite type"),
            trace: Vec::new(),
        })?;
    Ok(Subsystem {
        roots,
        positive,
        root_type,
        integral,
    })
}
