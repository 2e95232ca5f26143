//! Hyperplane certificates for antichains.
//!
//! A certificate for an antichain `Γ` is a coweight `H`, recorded by its
//! values `b_i = α_i(H)` on the simple roots, together with a level `n` such
//! that every `b_i ≥ 1` and `γ(H) = n` for all `γ ∈ Γ`. Such a pair always
//! exists. [`construct_certificate`] builds one by induction on the rank,
//! following a case analysis over the root system type, and [`minimize_n`]
//! finds the smallest possible level by exact search.

pub mod feasibility;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dynkin::{self, Embedding};
use crate::poset::{Antichain, RootIdeal};
use crate::roots::{evaluate_on_coweight, Component, Family, RootSystemType};
use crate::{Error, Result, Root, RootSystem};
use feasibility::LevelSystem;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub antichain: Antichain,
    /// `b_i = α_i(H)` for each simple index `i`.
    pub coweight: Vec<i64>,
    pub level: i64,
}

/// One evaluated constraint of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// `α_i(H) ≥ 1`.
    Positive { index: usize, value: i64, ok: bool },
    /// `γ(H) = n`.
    Level { root: Root, value: i64, ok: bool },
}

impl Check {
    pub fn ok(&self) -> bool {
        match self {
            Check::Positive { ok, .. } | Check::Level { ok, .. } => *ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<Check>,
    pub valid: bool,
}

impl Verification {
    /// First failing constraint, rendered for error messages.
    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.ok()).map(|c| match c {
            Check::Positive { index, value, .. } => format!("b{} = {value} < 1", index + 1),
            Check::Level { root, value, .. } => format!("{root} evaluates to {value}"),
        })
    }
}

pub fn verify_certificate(rs: &RootSystem, cert: &Certificate) -> Verification {
    let mut checks = Vec::new();
    if cert.coweight.len() != rs.rank() {
        return Verification {
            checks,
            valid: false,
        };
    }
    for (index, &value) in cert.coweight.iter().enumerate() {
        checks.push(Check::Positive {
            index,
            value,
            ok: value >= 1,
        });
    }
    for root in cert.antichain.roots() {
        let value = evaluate_on_coweight(root, &cert.coweight).unwrap_or(i64::MIN);
        checks.push(Check::Level {
            root: root.clone(),
            value,
            ok: value == cert.level,
        });
    }
    let valid = cert.level >= 1 && checks.iter().all(Check::ok);
    Verification { checks, valid }
}

/// The case of the inductive construction that produced a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProofStep {
    /// Rank one: `(H_1, 1)`.
    Base,
    /// `Γ = {γ}`: all `b_i = 1`, level `ht(γ)`.
    Singleton,
    /// Two incomparable roots, split by the sign of their difference.
    Pair,
    /// `Γ` does not involve every simple root: recurse on its support and
    /// pad the missing `b_i` with 1.
    Restrict,
    /// Reducible support: certify each component, scale by the product of
    /// the other levels.
    Product,
    /// Types A, B, C: `Γ` meets the roots involving `α_1` in a single root.
    Case1,
    /// Type D with a single root involving `α_1`, reduced as in types A-C.
    Case2Direct,
    /// Type D with a single root involving `α_1` that uses exactly one of
    /// the two fork nodes while its partner uses only the other one.
    Case2Deep,
    /// Type D with both fork roots involving `α_1`.
    Case2Pair,
    /// Exceptional type with a simple root in `Γ`: drop it and recurse.
    PeelSimple,
    /// Exceptional type, remaining case: exact minimal-level search.
    ExceptionalSearch,
}

impl ProofStep {
    pub fn name(self) -> &'static str {
        match self {
            ProofStep::Base => "base",
            ProofStep::Singleton => "singleton",
            ProofStep::Pair => "pair",
            ProofStep::Restrict => "restrict",
            ProofStep::Product => "product",
            ProofStep::Case1 => "case1-abc",
            ProofStep::Case2Direct => "case2-d-direct",
            ProofStep::Case2Deep => "case2-d-deep",
            ProofStep::Case2Pair => "case2-d-pair",
            ProofStep::PeelSimple => "peel-simple",
            ProofStep::ExceptionalSearch => "exceptional-search",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        use ProofStep::*;
        [
            Base,
            Singleton,
            Pair,
            Restrict,
            Product,
            Case1,
            Case2Direct,
            Case2Deep,
            Case2Pair,
            PeelSimple,
            ExceptionalSearch,
        ]
        .into_iter()
        .find(|s| s.name() == name)
    }
}

impl fmt::Display for ProofStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A constructed certificate and the cases that fired, in pre-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub certificate: Certificate,
    pub trace: Vec<ProofStep>,
}

fn check_antichain(rs: &RootSystem, gamma: &Antichain) -> Result<()> {
    if gamma.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    Antichain::new(rs, gamma.roots().to_vec()).map(|_| ())
}

/// Builds a certificate for a nonempty antichain by the inductive case
/// analysis. The result is verified before it is returned.
pub fn construct_certificate(rs: &RootSystem, gamma: &Antichain) -> Result<Construction> {
    check_antichain(rs, gamma)?;
    let mut builder = Builder::default();
    let all: Vec<usize> = (0..rs.rank()).collect();
    let (coweight, level) = builder.certify_on(rs, &all, gamma.roots())?;
    let certificate = Certificate {
        antichain: gamma.clone(),
        coweight,
        level,
    };
    let report = verify_certificate(rs, &certificate);
    if !report.valid {
        return Err(builder.violation(format!(
            "constructed certificate fails: {}",
            report.first_failure().unwrap_or_default()
        )));
    }
    Ok(Construction {
        certificate,
        trace: builder.trace,
    })
}

type Level = (Vec<i64>, i64);

#[derive(Default)]
struct Builder {
    standard: BTreeMap<Component, RootSystem>,
    trace: Vec<ProofStep>,
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("certificate construction"))
}

fn dot_from(root: &Root, h: &[i64], from: usize) -> i64 {
    root.coeffs()[from..]
        .iter()
        .zip(&h[from..])
        .map(|(c, b)| c * b)
        .sum()
}

fn support_of(roots: &[Root]) -> Vec<usize> {
    let mut s: Vec<usize> = roots.iter().flat_map(|r| r.support()).collect();
    s.sort_unstable();
    s.dedup();
    s
}

impl Builder {
    fn violation(&self, detail: String) -> Error {
        Error::InvariantViolation {
            detail,
            trace: self.trace.iter().map(|s| String::from(s.name())).collect(),
        }
    }

    fn standard(&mut self, c: Component) -> RootSystem {
        self.standard
            .entry(c)
            .or_insert_with(|| RootSystem::new(&RootSystemType::new(vec![c]).expect("valid")))
            .clone()
    }

    /// Certificate for `gamma` inside the subsystem on `support`; the
    /// returned coweight has length `rs.rank()` and is zero off `support`.
    fn certify_on(&mut self, rs: &RootSystem, support: &[usize], gamma: &[Root]) -> Result<Level> {
        let embeddings = dynkin::identify(rs.cartan(), support)
            .ok_or_else(|| self.violation(format!("support {support:?} is not of finite type")))?;
        if embeddings.len() == 1 {
            return self.certify_embedded(rs, &embeddings[0], gamma);
        }
        self.trace.push(ProofStep::Product);
        let mut parts = Vec::new();
        let mut padding = Vec::new();
        for emb in &embeddings {
            let sub: Vec<Root> = gamma
                .iter()
                .filter(|g| g.support().iter().all(|i| emb.map.contains(i)))
                .cloned()
                .collect();
            if sub.is_empty() {
                padding.extend(emb.map.iter().copied());
            } else {
                parts.push(self.certify_embedded(rs, emb, &sub)?);
            }
        }
        let mut total = 1i64;
        for (_, n) in &parts {
            total = mul(total, *n)?;
        }
        let mut h = vec![0i64; rs.rank()];
        for (k, n) in parts {
            let scale = total / n;
            for (i, b) in k.into_iter().enumerate() {
                h[i] += mul(scale, b)?;
            }
        }
        for i in padding {
            h[i] = 1;
        }
        Ok((h, total))
    }

    fn certify_embedded(&mut self, rs: &RootSystem, emb: &Embedding, gamma: &[Root]) -> Result<Level> {
        let local_rs = self.standard(emb.component);
        let local: Vec<Root> = gamma
            .iter()
            .map(|g| Root::new(emb.map.iter().map(|&i| g.coeffs()[i]).collect()))
            .collect();
        let (hl, n) = self.certify_irreducible(&local_rs, local)?;
        let mut h = vec![0i64; rs.rank()];
        for (k, &i) in emb.map.iter().enumerate() {
            h[i] = hl[k];
        }
        Ok((h, n))
    }

    /// `rs` is a standard irreducible system and `gamma` an antichain in it.
    fn certify_irreducible(&mut self, rs: &RootSystem, mut gamma: Vec<Root>) -> Result<Level> {
        gamma.sort_by_key(|g| rs.index_of(g));
        let l = rs.rank();
        let result = if l == 1 {
            self.trace.push(ProofStep::Base);
            (vec![1], 1)
        } else if gamma.len() == 1 {
            self.trace.push(ProofStep::Singleton);
            (vec![1; l], gamma[0].height())
        } else if gamma.len() == 2 {
            self.trace.push(ProofStep::Pair);
            pair_certificate(&gamma[0], &gamma[1])?
        } else {
            let support = support_of(&gamma);
            if support.len() < l {
                self.trace.push(ProofStep::Restrict);
                let (mut h, n) = self.certify_on(rs, &support, &gamma)?;
                for (i, b) in h.iter_mut().enumerate() {
                    if !support.contains(&i) {
                        *b = 1;
                    }
                }
                (h, n)
            } else {
                let family = rs.root_type().components()[0].family;
                match family {
                    Family::A | Family::B | Family::C => self.case1(rs, &gamma)?,
                    Family::D => self.case2(rs, &gamma)?,
                    Family::G => {
                        return Err(self.violation(format!(
                            "G2 has no antichain of size {}",
                            gamma.len()
                        )))
                    }
                    Family::E | Family::F => self.exceptional(rs, &gamma)?,
                }
            }
        };
        let cert_ok = result.0.iter().all(|&b| b >= 1)
            && gamma
                .iter()
                .all(|g| evaluate_on_coweight(g, &result.0).ok() == Some(result.1));
        if !cert_ok {
            return Err(self.violation(format!(
                "{} level does not verify for {gamma:?}: H = {:?}, n = {}",
                rs.root_type(),
                result.0,
                result.1
            )));
        }
        Ok(result)
    }

    /// Combines a certificate `(h', n')` for the roots supported on
    /// `m..ℓ` with the head roots involving `α_1`: the head roots must all
    /// have the same part below `m` in height and the same value `δ(H')` of
    /// their part from `m` on, and that value must stay below `n'`.
    fn glue(&self, heads: &[&Root], m: usize, inner: Level) -> Result<Level> {
        let (h_inner, n_inner) = inner;
        let beta_ht: i64 = heads[0].coeffs()[..m].iter().sum();
        let delta = dot_from(heads[0], &h_inner, m);
        for g in heads {
            let b: i64 = g.coeffs()[..m].iter().sum();
            if b != beta_ht || dot_from(g, &h_inner, m) != delta {
                return Err(self.violation(format!("head roots {heads:?} disagree below index {m}")));
            }
        }
        if beta_ht < 1 || delta < 0 || delta >= n_inner {
            return Err(self.violation(format!(
                "cannot lift: δ(H') = {delta}, n' = {n_inner}, ht(β) = {beta_ht}"
            )));
        }
        let mut h = vec![0i64; h_inner.len()];
        for (i, b) in h.iter_mut().enumerate() {
            *b = if i < m {
                n_inner - delta
            } else {
                mul(beta_ht, h_inner[i])?
            };
        }
        Ok((h, mul(beta_ht, n_inner)?))
    }

    fn split_first(&self, gamma: &[Root]) -> Result<(Vec<Root>, Vec<Root>, usize)> {
        let (head, rest): (Vec<Root>, Vec<Root>) =
            gamma.iter().cloned().partition(|g| g.coeffs()[0] != 0);
        if head.is_empty() || rest.is_empty() {
            return Err(self.violation(format!(
                "expected roots both with and without α1 in {gamma:?}"
            )));
        }
        let m = support_of(&rest)[0];
        Ok((head, rest, m))
    }

    fn case1(&mut self, rs: &RootSystem, gamma: &[Root]) -> Result<Level> {
        self.trace.push(ProofStep::Case1);
        let (head, rest, m) = self.split_first(gamma)?;
        if head.len() != 1 {
            return Err(self.violation(format!("Δ₁⁺ is a chain but Γ meets it in {head:?}")));
        }
        let tail: Vec<usize> = (m..rs.rank()).collect();
        let inner = self.certify_on(rs, &tail, &rest)?;
        self.glue(&[&head[0]], m, inner)
    }

    fn case2(&mut self, rs: &RootSystem, gamma: &[Root]) -> Result<Level> {
        let l = rs.rank();
        let (fork_a, fork_b) = (l - 2, l - 1);
        let (head, rest, m) = self.split_first(gamma)?;
        let tail: Vec<usize> = (m..l).collect();
        match head.len() {
            1 => {
                let g = &head[0];
                let uses = |r: &Root, i: usize| r.coeffs()[i] != 0;
                let forks = usize::from(uses(g, fork_a)) + usize::from(uses(g, fork_b));
                let partner = rest
                    .iter()
                    .find(|r| uses(r, m))
                    .ok_or_else(|| self.violation(format!("no root of {rest:?} uses index {m}")))?;
                let (p, q) = if uses(g, fork_a) { (fork_a, fork_b) } else { (fork_b, fork_a) };
                if forks != 1 || uses(partner, p) {
                    self.trace.push(ProofStep::Case2Direct);
                    let inner = self.certify_on(rs, &tail, &rest)?;
                    return self.glue(&[g], m, inner);
                }
                self.trace.push(ProofStep::Case2Deep);
                let partner = partner.clone();
                let others: Vec<Root> = rest.iter().filter(|r| **r != partner).cloned().collect();
                if others.is_empty() {
                    return Err(self.violation(String::from("deep branch needs a third root")));
                }
                let m2 = support_of(&others)[0];
                if m2 <= m || m2 > l - 3 {
                    return Err(self.violation(format!("expected {m} < m' <= {}, got {m2}", l - 3)));
                }
                if others.iter().any(|r| r.coeffs()[q] != 1) {
                    return Err(self.violation(format!("roots {others:?} must all use index {q}")));
                }
                let tail2: Vec<usize> = (m2..l).collect();
                let (mut h2, mut n2) = self.certify_on(rs, &tail2, &others)?;
                // raising b_q by k raises every level in `others` by k
                let k = (h2[p] - h2[q] + 1).max(0);
                h2[q] += k;
                n2 += k;
                let delta2: i64 = (m2..l - 2).map(|i| h2[i]).sum::<i64>() + h2[q];
                if delta2 >= n2 {
                    return Err(self.violation(format!("δ'(H'') = {delta2} >= n'' = {n2}")));
                }
                let width = (m2 - m) as i64;
                let mut h1 = vec![0i64; l];
                for (i, b) in h1.iter_mut().enumerate().skip(m) {
                    *b = if i < m2 { n2 - delta2 } else { mul(width, h2[i])? };
                }
                let n1 = mul(width, n2)?;
                self.glue(&[g], m, (h1, n1))
            }
            2 => {
                self.trace.push(ProofStep::Case2Pair);
                let (h1, n1) = self.certify_on(rs, &tail, &rest)?;
                let fork_sum = h1[fork_a] + h1[fork_b];
                let mut h2 = vec![0i64; l];
                for i in m..l - 2 {
                    h2[i] = mul(2, h1[i])?;
                }
                h2[fork_a] = fork_sum;
                h2[fork_b] = fork_sum;
                let n2 = mul(2, n1)?;
                if rest.iter().any(|r| evaluate_on_coweight(r, &h2).ok() != Some(n2)) {
                    return Err(self.violation(String::from("doubling the tail certificate failed")));
                }
                self.glue(&[&head[0], &head[1]], m, (h2, n2))
            }
            k => Err(self.violation(format!("type D admits at most 2 roots with α1, got {k}"))),
        }
    }

    fn exceptional(&mut self, rs: &RootSystem, gamma: &[Root]) -> Result<Level> {
        if let Some(simple) = gamma.iter().find(|g| g.height() == 1) {
            self.trace.push(ProofStep::PeelSimple);
            let i = simple.support()[0];
            let rest: Vec<Root> = gamma.iter().filter(|g| *g != simple).cloned().collect();
            let others: Vec<usize> = (0..rs.rank()).filter(|&j| j != i).collect();
            let (mut h, n) = self.certify_on(rs, &others, &rest)?;
            h[i] = n;
            return Ok((h, n));
        }
        self.trace.push(ProofStep::ExceptionalSearch);
        let ac = Antichain::new(rs, gamma.to_vec())?;
        let cert = minimize_n(rs, &ac)?;
        Ok((cert.coweight, cert.level))
    }
}

fn pair_certificate(g: &Root, h: &Root) -> Result<Level> {
    let (c, d) = (g.coeffs(), h.coeffs());
    let mut plus = (0i64, 0i64);
    let mut minus = (0i64, 0i64);
    let mut same = 0i64;
    for (&a, &b) in c.iter().zip(d) {
        match a.cmp(&b) {
            core::cmp::Ordering::Greater => {
                plus.0 += a;
                plus.1 += b;
            }
            core::cmp::Ordering::Less => {
                minus.0 += a;
                minus.1 += b;
            }
            core::cmp::Ordering::Equal => same += a,
        }
    }
    let up = minus.1 - minus.0;
    let down = plus.0 - plus.1;
    let coweight = c
        .iter()
        .zip(d)
        .map(|(&a, &b)| match a.cmp(&b) {
            core::cmp::Ordering::Greater => up,
            core::cmp::Ordering::Less => down,
            core::cmp::Ordering::Equal => 1,
        })
        .collect();
    let level = mul(minus.1, plus.0)? - mul(minus.0, plus.1)? + same;
    Ok((coweight, level))
}

/// Generous cap on the level searched by [`minimize_n`].
pub fn level_bound(gamma: &Antichain) -> i64 {
    10 * gamma.roots().iter().map(Root::height).max().unwrap_or(1)
}

/// The certificate with the smallest level, and among those the
/// lexicographically smallest coweight.
///
/// Levels are tried upward from `max ht(γ)`, which `b_i ≥ 1` forces, and each
/// level is decided by exact integer search.
pub fn minimize_n(rs: &RootSystem, gamma: &Antichain) -> Result<Certificate> {
    check_antichain(rs, gamma)?;
    let rows: Vec<Vec<i64>> = gamma.roots().iter().map(|r| r.coeffs().to_vec()).collect();
    let system = LevelSystem::new(rows, rs.rank());
    let bound = level_bound(gamma);
    let (level, coweight) = system
        .minimize(bound)
        .ok_or(Error::NoCertificateBelow { bound })?;
    Ok(Certificate {
        antichain: gamma.clone(),
        coweight,
        level,
    })
}

/// The roots of `ideal` on the hyperplane `α(H) = n`. For a valid
/// certificate of the socle this is exactly the socle: any other root of the
/// ideal lies above a socle root and so evaluates strictly higher.
pub fn hyperplane_face(rs: &RootSystem, ideal: &RootIdeal, cert: &Certificate) -> Result<Vec<Root>> {
    let report = verify_certificate(rs, cert);
    if !report.valid {
        return Err(Error::InvalidCertificate(
            report.first_failure().unwrap_or_else(|| String::from("malformed")),
        ));
    }
    let mut face = Vec::new();
    for root in ideal.roots() {
        if evaluate_on_coweight(root, &cert.coweight)? == cert.level {
            face.push(root.clone());
        }
    }
    Ok(face)
}
