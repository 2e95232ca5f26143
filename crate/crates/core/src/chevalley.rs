//! Chevalley structure constants and weight components of `ℂ[m]`.
//!
//! The polynomial ring `ℂ[m] = ℂ[ξ_α, α ∈ Δ_m⁺]` is never built as a whole:
//! everything works one weight component at a time. Derivations are
//! normalised by the Chevalley basis, `X_β(ξ_α) = -N_{β,α-β} ξ_{α-β}`; the
//! dimensions and supports of invariant spaces do not depend on that choice.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::poset::{antichain_subsystem, socle, RootIdeal};
use crate::{linalg, Error, Rational, Result, Root, RootSystem};

/// Sign of `N_{α,β}` on extraspecial pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    #[default]
    Positive,
    Flipped,
}

/// `N_{α,β}` for all roots `α, β` (either sign) with `α + β ∈ Δ`, defined by
/// `[X_α, X_β] = N_{α,β} X_{α+β}` in a Chevalley basis with
/// `[X_α, X_{-α}] = H_α` and `N_{-α,-β} = -N_{α,β}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    table: BTreeMap<(Root, Root), i64>,
}

impl StructureConstants {
    pub fn get(&self, a: &Root, b: &Root) -> Option<i64> {
        self.table.get(&(a.clone(), b.clone())).copied()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Root, &Root, i64)> {
        self.table.iter().map(|((a, b), &n)| (a, b, n))
    }
}

/// `p + 1` where `p = max{k : β - kα ∈ Δ}`.
pub fn string_bound(rs: &RootSystem, a: &Root, b: &Root) -> i64 {
    let mut p = 0;
    let mut probe = b.sub(a);
    while rs.contains(&probe) {
        p += 1;
        probe = probe.sub(a);
    }
    p + 1
}

/// Builds the structure constants by the extraspecial-pair algorithm.
///
/// For each positive `ξ`, the special pairs are `(α, β)` with `α + β = ξ`
/// and `0 < α < β` in the order of [`RootSystem::positive_roots`]; the pair
/// with the smallest `α` is extraspecial and gets `N = ±(p+1)`. All other
/// constants follow from the quadratic identities, processed by height.
pub fn build_structure_constants(rs: &RootSystem, sign: SignConvention) -> StructureConstants {
    let eps = match sign {
        SignConvention::Positive => 1,
        SignConvention::Flipped => -1,
    };
    let mut b = Table {
        rs,
        pos: BTreeMap::new(),
    };
    for xi in rs.positive_roots() {
        let idx = rs.index_of(xi).expect("positive root");
        let mut special: Vec<(Root, Root)> = Vec::new();
        for a in &rs.positive_roots()[..idx] {
            let rest = xi.sub(a);
            if let Some(j) = rs.index_of(&rest) {
                if rs.index_of(a).expect("positive") < j {
                    special.push((a.clone(), rest));
                }
            }
        }
        let Some((alpha, beta)) = special.first().cloned() else {
            continue;
        };
        let n_ab = eps * string_bound(rs, &alpha, &beta);
        b.insert(&alpha, &beta, n_ab);
        let xx = Rational::from_integer(rs.inner(xi, xi));
        for (gamma, delta) in special.iter().skip(1) {
            // identity on γ + δ + (-α) + (-β) = 0, no two of them opposite
            let mut bracket = Rational::zero();
            let d_a = delta.sub(&alpha);
            if rs.contains(&d_a) {
                let na = b.n(delta, &alpha.neg());
                let nb = b.n(gamma, &beta.neg());
                bracket += na * nb / Rational::from_integer(rs.inner(&d_a, &d_a));
            }
            let g_a = gamma.sub(&alpha);
            if rs.contains(&g_a) {
                let na = b.n(&alpha.neg(), gamma);
                let nb = b.n(delta, &beta.neg());
                bracket += na * nb / Rational::from_integer(rs.inner(&g_a, &g_a));
            }
            let value = xx / Rational::from_integer(n_ab) * bracket;
            debug_assert!(value.is_integer());
            b.insert(gamma, delta, value.to_integer());
        }
    }
    let mut table = BTreeMap::new();
    let all: Vec<Root> = rs
        .positive_roots()
        .iter()
        .flat_map(|r| [r.clone(), r.neg()])
        .collect();
    for x in &all {
        for y in &all {
            if rs.contains(&x.add(y)) {
                table.insert((x.clone(), y.clone()), b.n(x, y).to_integer());
            }
        }
    }
    StructureConstants { table }
}

struct Table<'a> {
    rs: &'a RootSystem,
    /// Constants on pairs of positive roots.
    pos: BTreeMap<(Root, Root), i64>,
}

impl Table<'_> {
    fn insert(&mut self, a: &Root, b: &Root, n: i64) {
        self.pos.insert((a.clone(), b.clone()), n);
        self.pos.insert((b.clone(), a.clone()), -n);
    }

    fn len2(&self, r: &Root) -> Rational {
        Rational::from_integer(self.rs.inner(r, r))
    }

    /// `N_{r,s}` for any roots with `r + s ∈ Δ`, reduced to positive pairs.
    fn n(&self, r: &Root, s: &Root) -> Rational {
        match (r.is_positive(), s.is_positive()) {
            (true, true) => Rational::from_integer(self.pos[&(r.clone(), s.clone())]),
            (false, false) => -self.n(&r.neg(), &s.neg()),
            _ => {
                // r + s + t = 0: N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
                let t = r.add(s).neg();
                if s.is_positive() == t.is_positive() {
                    self.len2(&t) / self.len2(r) * self.n(s, &t)
                } else {
                    self.len2(&t) / self.len2(s) * self.n(&t, r)
                }
            }
        }
    }
}

/// Element of `g` in the Chevalley basis: Cartan part over the simple
/// coroots and root part over `X_α`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    pub cartan: Vec<i64>,
    pub roots: BTreeMap<Root, i64>,
}

impl LieElement {
    pub fn root_vector(rank: usize, r: Root) -> Self {
        let mut roots = BTreeMap::new();
        roots.insert(r, 1);
        LieElement {
            cartan: vec![0; rank],
            roots,
        }
    }

    pub fn coroot(rank: usize, i: usize) -> Self {
        let mut cartan = vec![0; rank];
        cartan[i] = 1;
        LieElement {
            cartan,
            roots: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.iter().all(|&c| c == 0) && self.roots.values().all(|&c| c == 0)
    }

    fn add_scaled(&mut self, other: &LieElement, k: i64) {
        for (a, b) in self.cartan.iter_mut().zip(&other.cartan) {
            *a += k * b;
        }
        for (r, c) in &other.roots {
            *self.roots.entry(r.clone()).or_insert(0) += k * c;
        }
        self.roots.retain(|_, c| *c != 0);
    }
}

/// `H_α` in terms of the simple coroots: `α^∨ = Σ k_i (α_i,α_i)/(α,α) α_i^∨`.
pub fn coroot_coords(rs: &RootSystem, r: &Root) -> Vec<i64> {
    let rr = rs.inner(r, r);
    r.coeffs()
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let ai = rs.simple_root(i);
            k * rs.inner(&ai, &ai) / rr
        })
        .collect()
}

/// The Lie bracket determined by the structure constants.
pub fn bracket(rs: &RootSystem, sc: &StructureConstants, x: &LieElement, y: &LieElement) -> LieElement {
    let l = rs.rank();
    let mut out = LieElement {
        cartan: vec![0; l],
        roots: BTreeMap::new(),
    };
    // [h, X_s] = <s, h> X_s, with <s, α_i^∨> from the Cartan matrix
    let act = |h: &[i64], s: &Root| -> i64 { (0..l).map(|i| h[i] * rs.pairing(s, i)).sum() };
    for (s, &c) in &y.roots {
        let v = act(&x.cartan, s) * c;
        if v != 0 {
            out.add_scaled(&LieElement::root_vector(l, s.clone()), v);
        }
    }
    for (r, &c) in &x.roots {
        let v = -act(&y.cartan, r) * c;
        if v != 0 {
            out.add_scaled(&LieElement::root_vector(l, r.clone()), v);
        }
    }
    for (r, &a) in &x.roots {
        for (s, &b) in &y.roots {
            let sum = r.add(s);
            if sum.coeffs().iter().all(|&c| c == 0) {
                let h = LieElement {
                    cartan: coroot_coords(rs, r),
                    roots: BTreeMap::new(),
                };
                out.add_scaled(&h, a * b);
            } else if let Some(n) = sc.get(r, s) {
                out.add_scaled(&LieElement::root_vector(l, sum), a * b * n);
            }
        }
    }
    out
}

/// Violations of `|N| = p+1`, antisymmetry and `N_{-α,-β} = -N_{α,β}`.
pub fn check_constants(rs: &RootSystem, sc: &StructureConstants) -> Vec<(Root, Root)> {
    let mut bad = Vec::new();
    for (a, b, n) in sc.iter() {
        let ok = n.abs() == string_bound(rs, a, b)
            && sc.get(b, a) == Some(-n)
            && sc.get(&a.neg(), &b.neg()) == Some(-n);
        if !ok {
            bad.push((a.clone(), b.clone()));
        }
    }
    bad
}

/// Triples of root vectors whose Jacobi sum is nonzero.
pub fn jacobi_failures(
    rs: &RootSystem,
    sc: &StructureConstants,
    roots: &[Root],
) -> Vec<(Root, Root, Root)> {
    let l = rs.rank();
    let mut bad = Vec::new();
    for (i, a) in roots.iter().enumerate() {
        for (j, b) in roots.iter().enumerate().skip(i + 1) {
            for c in roots.iter().skip(j + 1) {
                let (x, y, z) = (
                    LieElement::root_vector(l, a.clone()),
                    LieElement::root_vector(l, b.clone()),
                    LieElement::root_vector(l, c.clone()),
                );
                let mut sum = bracket(rs, sc, &x, &bracket(rs, sc, &y, &z));
                sum.add_scaled(&bracket(rs, sc, &y, &bracket(rs, sc, &z, &x)), 1);
                sum.add_scaled(&bracket(rs, sc, &z, &bracket(rs, sc, &x, &y)), 1);
                if !sum.is_zero() {
                    bad.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    bad
}

/// A monomial `ξ_{α_1} ... ξ_{α_r}`, stored as its sorted factor list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Root>);

impl Monomial {
    pub fn new(mut factors: Vec<Root>) -> Self {
        factors.sort();
        Monomial(factors)
    }

    pub fn factors(&self) -> &[Root] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Exponent of each distinct factor.
    pub fn exponents(&self) -> BTreeMap<Root, u32> {
        let mut e = BTreeMap::new();
        for r in &self.0 {
            *e.entry(r.clone()).or_insert(0) += 1;
        }
        e
    }
}

/// A basis of `ℂ[m]_λ`: all multisets of roots of `m` summing to `-λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMonomialSpace {
    pub weight: Vec<i64>,
    pub basis: Vec<Monomial>,
}

impl WeightMonomialSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn check_weight(rs: &RootSystem, weight: &[i64]) -> Result<()> {
    if weight.len() != rs.rank() {
        return Err(Error::LengthMismatch {
            expected: rs.rank(),
            found: weight.len(),
        });
    }
    if weight.iter().any(|&c| c > 0) {
        return Err(Error::WeightOutsideCone(weight.to_vec()));
    }
    Ok(())
}

pub fn weight_space_basis(rs: &RootSystem, ideal: &RootIdeal, weight: &[i64]) -> Result<WeightMonomialSpace> {
    check_weight(rs, weight)?;
    let target: Vec<i64> = weight.iter().map(|c| -c).collect();
    let basis = monomials_of(ideal.roots(), &target);
    Ok(WeightMonomialSpace {
        weight: weight.to_vec(),
        basis,
    })
}

fn monomials_of(roots: &[Root], target: &[i64]) -> Vec<Monomial> {
    fn go(roots: &[Root], from: usize, rest: &mut Vec<i64>, cur: &mut Vec<Root>, out: &mut Vec<Monomial>) {
        if rest.iter().all(|&c| c == 0) {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for k in from..roots.len() {
            let r = &roots[k];
            if r.coeffs().iter().zip(rest.iter()).all(|(a, b)| a <= b) {
                for (x, a) in rest.iter_mut().zip(r.coeffs()) {
                    *x -= a;
                }
                cur.push(r.clone());
                go(roots, k, rest, cur, out);
                cur.pop();
                for (x, a) in rest.iter_mut().zip(r.coeffs()) {
                    *x += a;
                }
            }
        }
    }
    let mut out = Vec::new();
    if target.iter().any(|&c| c < 0) {
        return out;
    }
    go(roots, 0, &mut target.to_vec(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Which nilpotent subalgebra acts on `ℂ[m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Acting {
    /// `n`, spanned by all positive root vectors.
    Nilradical,
    /// `m₀`, spanned by the root vectors of `Δ⁺_{soc(m)} = ℕ soc(m) ∩ Δ`.
    SocleNilradical,
}

/// Roots `β` whose vectors span the acting subalgebra.
pub fn acting_roots(rs: &RootSystem, ideal: &RootIdeal, acting: Acting) -> Result<Vec<Root>> {
    match acting {
        Acting::Nilradical => Ok(rs.positive_roots().to_vec()),
        Acting::SocleNilradical => {
            let soc = socle(rs, ideal);
            if soc.is_empty() {
                return Ok(Vec::new());
            }
            let sub = antichain_subsystem(rs, &soc)?;
            Ok(sub.positive.into_iter().map(|r| r.root).collect())
        }
    }
}

/// `X_β` applied to a monomial, as a sparse combination of monomials.
pub fn apply_derivation(
    sc: &StructureConstants,
    ideal: &RootIdeal,
    beta: &Root,
    m: &Monomial,
) -> BTreeMap<Monomial, Rational> {
    let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
    let f = m.factors();
    for (k, alpha) in f.iter().enumerate() {
        if k > 0 && f[k - 1] == *alpha {
            continue;
        }
        let target = alpha.sub(beta);
        if !ideal.contains(&target) {
            continue;
        }
        let n = sc.get(beta, &target).expect("β + (α-β) is a root");
        let mult = f.iter().filter(|r| *r == alpha).count() as i64;
        let mut factors = f.to_vec();
        factors[k] = target;
        let entry = out.entry(Monomial::new(factors)).or_insert_with(Rational::zero);
        *entry -= Rational::from_integer(n * mult);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Invariant vectors in one weight component, as coefficient vectors over
/// `space.basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSubspace {
    pub space: WeightMonomialSpace,
    pub vectors: Vec<Vec<Rational>>,
}

impl InvariantSubspace {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Stacked rows of all acting derivations on `ℂ[m]_λ`.
fn derivation_rows(
    sc: &StructureConstants,
    ideal: &RootIdeal,
    acting: &[Root],
    space: &WeightMonomialSpace,
) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for beta in acting {
        let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
        let mut block: Vec<Vec<Rational>> = Vec::new();
        for (col, m) in space.basis.iter().enumerate() {
            for (img, c) in apply_derivation(sc, ideal, beta, m) {
                let row = *index.entry(img).or_insert_with(|| {
                    block.push(vec![Rational::zero(); space.basis.len()]);
                    block.len() - 1
                });
                block[row][col] += c;
            }
        }
        rows.extend(block);
    }
    rows
}

pub fn invariant_subspace(
    rs: &RootSystem,
    sc: &StructureConstants,
    ideal: &RootIdeal,
    weight: &[i64],
    acting: Acting,
) -> Result<InvariantSubspace> {
    let space = weight_space_basis(rs, ideal, weight)?;
    let acting_roots = acting_roots(rs, ideal, acting)?;
    let rows = derivation_rows(sc, ideal, &acting_roots, &space);
    let vectors = if space.basis.is_empty() {
        Vec::new()
    } else if rows.is_empty() {
        linalg::nullspace(&[vec![Rational::zero(); space.dim()]], space.dim())
    } else {
        linalg::nullspace(&rows, space.dim())
    };
    for v in &vectors {
        for row in &rows {
            let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
            if !dot.is_zero() {
                return Err(Error::InvariantViolation {
                    detail: format!("kernel vector {v:?} is not annihilated"),
                    trace: Vec::new(),
                });
            }
        }
    }
    Ok(InvariantSubspace { space, vectors })
}

/// Verifies that every `X_β`, `β ∈ Δ⁺`, kills `∏_{α ∈ soc(m)} ξ_α`: no
/// `α - β` with `α` in the socle is a root of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleInvariance {
    pub socle: Vec<Root>,
    /// Pairs `(β, α)` with `α - β ∈ Δ_m⁺`.
    pub violations: Vec<(Root, Root)>,
}

impl SocleInvariance {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_socle_monomial_invariance(rs: &RootSystem, ideal: &RootIdeal) -> SocleInvariance {
    let soc = socle(rs, ideal);
    let mut violations = Vec::new();
    for beta in rs.positive_roots() {
        for alpha in soc.roots() {
            if ideal.contains(&alpha.sub(beta)) {
                violations.push((beta.clone(), alpha.clone()));
            }
        }
    }
    SocleInvariance {
        socle: soc.roots().to_vec(),
        violations,
    }
}

/// Outcome of comparing both invariant spaces with the socle monomial at one
/// weight `λ ∈ -ℕ soc(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCheck {
    pub socle: Vec<Root>,
    pub weight: Vec<i64>,
    pub monomial: Monomial,
    pub dim_weight_space: usize,
    pub dim_nilradical: usize,
    pub dim_socle_nilradical: usize,
    pub passed: bool,
}

fn spans_only(inv: &InvariantSubspace, m: &Monomial) -> bool {
    let Some(pos) = inv.space.basis.iter().position(|b| b == m) else {
        return false;
    };
    inv.dim() == 1
        && inv.vectors[0]
            .iter()
            .enumerate()
            .all(|(i, c)| (i == pos) != c.is_zero())
}

/// Exponent vectors `c ≥ 0` over `k` generators with `1 ≤ Σ c·ht ≤ max_height`.
fn exponent_vectors(heights: &[i64], max_height: i64) -> Vec<Vec<u32>> {
    fn go(h: &[i64], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == h.len() {
            if cur.iter().any(|&c| c > 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut c = 0;
        while (c as i64) * h[i] <= left {
            cur.push(c);
            go(h, i + 1, left - (c as i64) * h[i], cur, out);
            cur.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    go(heights, 0, max_height, &mut Vec::new(), &mut out);
    out
}

/// Checks, for one ideal and every `λ ∈ -ℕ soc(m)` with `1 ≤ ht(-λ) ≤
/// max_height`, that the `n`- and `m₀`-invariants of `ℂ[m]_λ` are both
/// the line through the socle monomial of weight `λ`.
pub fn check_invariants_on_socle_cone(
    rs: &RootSystem,
    sc: &StructureConstants,
    ideal: &RootIdeal,
    max_height: i64,
) -> Result<Vec<WeightCheck>> {
    let soc = socle(rs, ideal);
    let heights: Vec<i64> = soc.roots().iter().map(Root::height).collect();
    let mut out = Vec::new();
    for exps in exponent_vectors(&heights, max_height) {
        let mut weight = vec![0i64; rs.rank()];
        let mut factors = Vec::new();
        for (r, &e) in soc.roots().iter().zip(&exps) {
            for _ in 0..e {
                factors.push(r.clone());
                for (w, c) in weight.iter_mut().zip(r.coeffs()) {
                    *w -= c;
                }
            }
        }
        let monomial = Monomial::new(factors);
        let inv_n = invariant_subspace(rs, sc, ideal, &weight, Acting::Nilradical)?;
        let inv_0 = invariant_subspace(rs, sc, ideal, &weight, Acting::SocleNilradical)?;
        let passed = spans_only(&inv_n, &monomial) && spans_only(&inv_0, &monomial);
        out.push(WeightCheck {
            socle: soc.roots().to_vec(),
            weight,
            monomial,
            dim_weight_space: inv_n.space.dim(),
            dim_nilradical: inv_n.dim(),
            dim_socle_nilradical: inv_0.dim(),
            passed,
        });
    }
    Ok(out)
}

/// Distinct roots appearing in a collection of monomials.
pub fn variables(monomials: &[Monomial]) -> BTreeSet<Root> {
    monomials.iter().flat_map(|m| m.factors().iter().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::up_closure;

    fn r(v: &[i64]) -> Root {
        Root::new(v.to_vec())
    }

    fn a2() -> (RootSystem, StructureConstants) {
        let rs = RootSystem::from_label("A2").unwrap();
        let sc = build_structure_constants(&rs, SignConvention::default());
        (rs, sc)
    }

    #[test]
    fn a2_constants() {
        let (_, sc) = a2();
        let n = sc.get(&r(&[1, 0]), &r(&[0, 1])).unwrap();
        assert_eq!(n.abs(), 1);
        assert_eq!(sc.get(&r(&[0, 1]), &r(&[1, 0])), Some(-n));
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[1, 1])), None);
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[1, 0])), None);
    }

    #[test]
    fn constants_satisfy_invariants() {
        for t in ["A2", "B2", "G2", "A3", "B3", "C3"] {
            let rs = RootSystem::from_label(t).unwrap();
            for sign in [SignConvention::Positive, SignConvention::Flipped] {
                let sc = build_structure_constants(&rs, sign);
                assert!(check_constants(&rs, &sc).is_empty(), "{t}");
                let all: Vec<Root> = rs
                    .positive_roots()
                    .iter()
                    .flat_map(|r| [r.clone(), r.neg()])
                    .collect();
                assert!(jacobi_failures(&rs, &sc, &all).is_empty(), "{t} {sign:?}");
            }
        }
    }

    #[test]
    fn a2_weight_spaces() {
        let (rs, _) = a2();
        let n = RootIdeal::full(&rs);
        let s = weight_space_basis(&rs, &n, &[-1, -1]).unwrap();
        assert_eq!(
            s.basis,
            vec![Monomial::new(vec![r(&[0, 1]), r(&[1, 0])]), Monomial::new(vec![r(&[1, 1])])]
        );
        assert_eq!(weight_space_basis(&rs, &n, &[-1, 0]).unwrap().dim(), 1);
        let s = weight_space_basis(&rs, &n, &[-1, -2]).unwrap();
        assert_eq!(
            s.basis,
            vec![
                Monomial::new(vec![r(&[0, 1]), r(&[0, 1]), r(&[1, 0])]),
                Monomial::new(vec![r(&[0, 1]), r(&[1, 1])]),
            ]
        );
        assert!(matches!(
            weight_space_basis(&rs, &n, &[1, 0]),
            Err(Error::WeightOutsideCone(_))
        ));
    }

    #[test]
    fn a2_invariants() {
        let (rs, sc) = a2();
        let n = RootIdeal::full(&rs);
        let inv = invariant_subspace(&rs, &sc, &n, &[-1, -1], Acting::Nilradical).unwrap();
        assert_eq!(inv.dim(), 1);
        assert!(spans_only(&inv, &Monomial::new(vec![r(&[1, 0]), r(&[0, 1])])));

        let top = up_closure(&rs, &[r(&[1, 1])]);
        let inv = invariant_subspace(&rs, &sc, &top, &[-1, -1], Acting::Nilradical).unwrap();
        assert!(spans_only(&inv, &Monomial::new(vec![r(&[1, 1])])));

        let inv = invariant_subspace(&rs, &sc, &n, &[-1, -2], Acting::Nilradical).unwrap();
        assert!(spans_only(
            &inv,
            &Monomial::new(vec![r(&[1, 0]), r(&[0, 1]), r(&[0, 1])])
        ));
    }

    #[test]
    fn socle_monomial_is_invariant() {
        let (rs, _) = a2();
        assert!(check_socle_monomial_invariance(&rs, &RootIdeal::full(&rs)).passed());
        let f4 = RootSystem::from_label("F4").unwrap();
        let row1 = up_closure(&f4, &[r(&[1, 1, 0, 0]), r(&[0, 1, 1, 0]), r(&[0, 0, 1, 1])]);
        assert!(check_socle_monomial_invariance(&f4, &row1).passed());
    }

    #[test]
    fn exponent_enumeration() {
        assert_eq!(exponent_vectors(&[1, 2], 2), vec![vec![0, 1], vec![1, 0], vec![2, 0]]);
    }
}
