//! Finite reduced root systems given by Cartan data.
//!
//! Cartan convention: `cartan[i][j] = <α_j, α_i^∨>`, so that the simple
//! reflection is `s_i(α_j) = α_j - cartan[i][j] α_i`. Simple roots follow the
//! Bourbaki numbering (in particular `B_ℓ` has `α_ℓ` short, `C_ℓ` has `α_ℓ`
//! long, `D_ℓ` branches at `α_{ℓ-2}`, `E_ℓ` attaches `α_2` to `α_4`, and `F_4`
//! has `α_1, α_2` long).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.letter() == c.to_ascii_uppercase())
    }

    /// Whether `rank` is an allowed rank for this family.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// One irreducible factor of a root system type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let c = Component { family, rank };
        if !family.admits_rank(rank) {
            return Err(Error::InvalidType {
                component: c.to_string(),
                reason: "rank not allowed for this family",
            });
        }
        Ok(c)
    }

    pub(crate) fn cartan(self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..l - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 2, l - 1, -1, -2);
            }
            Family::C => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 2, l - 1, -2, -1);
            }
            Family::D => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 3, l - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..l - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root system type: a product of irreducible components, e.g. `D4xA1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystemType {
    components: Vec<Component>,
}

impl RootSystemType {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidType {
                component: String::new(),
                reason: "no components",
            });
        }
        for c in &components {
            Component::new(c.family, c.rank)?;
        }
        Ok(RootSystemType { components })
    }

    pub fn irreducible(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![Component::new(family, rank)?])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseType(s.to_string());
        let mut components = Vec::new();
        for part in s.trim().split(['x', 'X', '×']) {
            let mut chars = part.chars();
            let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            components.push(Component::new(family, rank)?);
        }
        RootSystemType::new(components)
    }
}

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    /// The `i`-th simple root of a rank `rank` system.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `self ≤ other` in the root order: `other - self` has no negative entry.
    pub fn is_below(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl From<Vec<i64>> for Root {
    fn from(v: Vec<i64>) -> Self {
        Root(v)
    }
}

/// Outcome of comparing two roots in the root order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// `α(H) = Σ c_i b_i` where `b_i = α_i(H)`.
pub fn evaluate_on_coweight(root: &Root, coweight: &[i64]) -> Result<i64> {
    if root.len() != coweight.len() {
        return Err(Error::LengthMismatch {
            expected: root.len(),
            found: coweight.len(),
        });
    }
    Ok(root.coeffs().iter().zip(coweight).map(|(c, b)| c * b).sum())
}

/// A root system with its full list of positive roots.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    blocks: Vec<Range<usize>>,
    positive: Vec<Root>,
    index: BTreeMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: &RootSystemType) -> Self {
        let rank = ty.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut blocks = Vec::new();
        let mut offset = 0;
        for c in ty.components() {
            let block = c.cartan();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            blocks.push(offset..offset + c.rank);
            offset += c.rank;
        }
        let symmetrizer = symmetrizer(&cartan);
        let mut positive = generate_positive_roots(&cartan);
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        RootSystem {
            ty: ty.clone(),
            cartan,
            symmetrizer,
            blocks,
            positive,
            index,
        }
    }

    /// Builds the root system for a label such as `"F4"` or `"D4xA1"`.
    pub fn from_label(label: &str) -> Result<Self> {
        Ok(RootSystem::new(&label.parse()?))
    }

    pub fn root_type(&self) -> &RootSystemType {
        &self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Simple-index range of each irreducible component.
    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Ordinal of a positive root in [`Self::positive_roots`].
    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    /// Whether `root` lies in Δ (either sign).
    pub fn contains(&self, root: &Root) -> bool {
        root.len() == self.rank()
            && (self.index.contains_key(root) || self.index.contains_key(&root.neg()))
    }

    pub fn is_positive_root(&self, root: &Root) -> bool {
        root.len() == self.rank() && self.index.contains_key(root)
    }

    pub fn check_root(&self, root: &Root) -> Result<()> {
        if root.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: root.len(),
            });
        }
        if !self.contains(root) {
            return Err(Error::NotARoot(root.coeffs().to_vec()));
        }
        Ok(())
    }

    pub fn check_positive(&self, root: &Root) -> Result<()> {
        self.check_root(root)?;
        if !self.index.contains_key(root) {
            return Err(Error::NotPositive(root.coeffs().to_vec()));
        }
        Ok(())
    }

    pub fn compare(&self, a: &Root, b: &Root) -> Result<RootOrder> {
        self.check_root(a)?;
        self.check_root(b)?;
        Ok(compare_vectors(a, b))
    }

    /// Simple indices with nonzero coefficient in a positive root.
    pub fn support(&self, root: &Root) -> Result<Vec<usize>> {
        self.check_positive(root)?;
        Ok(root.support())
    }

    /// `<root, α_i^∨>`.
    pub fn pairing(&self, root: &Root, i: usize) -> i64 {
        root.coeffs()
            .iter()
            .zip(&self.cartan[i])
            .map(|(c, a)| c * a)
            .sum()
    }

    /// The invariant form normalised so that the shortest simple root of each
    /// component has square length 2.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.coeffs().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs().iter().enumerate() {
                s += ai * bj * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// Index of the component containing simple index `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&i))
            .expect("simple index within rank")
    }
}

fn compare_vectors(a: &Root, b: &Root) -> RootOrder {
    if a == b {
        RootOrder::Equal
    } else if a.is_below(b) {
        RootOrder::Less
    } else if b.is_below(a) {
        RootOrder::Greater
    } else {
        RootOrder::Incomparable
    }
}

/// Positive roots by root-string closure starting from the simple roots.
///
/// For a root `β` and simple `α_i`, the `α_i`-string through `β` is
/// `β - pα_i, ..., β + qα_i` with `p - q = <β, α_i^∨>`; `p` is read off the
/// roots already found since they have smaller height.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let rank = cartan.len();
    let mut found: BTreeMap<Root, ()> = BTreeMap::new();
    let mut layer: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
    for r in &layer {
        found.insert(r.clone(), ());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe.0[i] -= 1;
                    if found.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.0.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    if !found.contains_key(&up) {
                        found.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    found.into_keys().collect()
}

/// `d_i` with `d_i a_ij = d_j a_ji`, the smallest per component equal to 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // (numerator, denominator) per node, filled by graph traversal
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut out = vec![0i64; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        let mut comp = vec![start];
        while let Some(i) = stack.pop() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    let (np, nq) = (p * cartan[i][j], q * cartan[j][i]);
                    let g = num_integer::gcd(np, nq);
                    let (mut np, mut nq) = (np / g, nq / g);
                    if nq < 0 {
                        np = -np;
                        nq = -nq;
                    }
                    d[j] = Some((np, nq));
                    stack.push(j);
                    comp.push(j);
                }
            }
        }
        let lcm = comp
            .iter()
            .fold(1i64, |acc, &i| num_integer::lcm(acc, d[i].unwrap().1));
        let vals: Vec<i64> = comp
            .iter()
            .map(|&i| {
                let (p, q) = d[i].unwrap();
                p * (lcm / q)
            })
            .collect();
        let g = vals.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
        for (&i, v) in comp.iter().zip(vals) {
            out[i] = v / g;
        }
    }
    out
}

/// Renders a root as a sum of simple roots, e.g. `a1+2a3`.
pub fn format_root_sum(root: &Root, symbol: &str) -> String {
    let mut s = String::new();
    for (i, &c) in root.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() || c < 0 {
            s.push(if c < 0 { '-' } else { '+' });
        }
        if c.abs() != 1 {
            s.push_str(&format!("{}", c.abs()));
        }
        s.push_str(&format!("{symbol}{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
