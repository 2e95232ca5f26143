//! Nilpotent elements of `b` in root coordinates, their minimal ideals, and
//! the torus degeneration onto the socle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::{CheckedMul, One, Zero};

use crate::certificates::{hyperplane_face, verify_certificate, Certificate};
use crate::poset::{minimal_elements, socle, up_closure, Antichain, RootIdeal};
use crate::roots::evaluate_on_coweight;
use crate::{linalg, Error, Rational, Result, Root, RootSystem};

/// `X = Σ c_α X_α` with every key a positive root and every `c_α ≠ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NilpotentElement {
    terms: BTreeMap<Root, Rational>,
}

impl NilpotentElement {
    pub fn zero() -> Self {
        NilpotentElement::default()
    }

    /// Repeated roots are summed; zero coefficients are dropped.
    pub fn new(rs: &RootSystem, terms: impl IntoIterator<Item = (Root, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Root, Rational> = BTreeMap::new();
        for (root, c) in terms {
            rs.check_positive(&root)?;
            *map.entry(root).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(NilpotentElement { terms: map })
    }

    /// Sum of the root vectors for `roots`, all with coefficient 1.
    pub fn from_support(rs: &RootSystem, roots: &[Root]) -> Result<Self> {
        Self::new(rs, roots.iter().map(|r| (r.clone(), Rational::one())))
    }

    pub fn terms(&self) -> &BTreeMap<Root, Rational> {
        &self.terms
    }

    pub fn coeff(&self, root: &Root) -> Rational {
        self.terms.get(root).copied().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `supp(X)`, in the order of the root system.
    pub fn support(&self, rs: &RootSystem) -> Vec<Root> {
        let mut s: Vec<Root> = self.terms.keys().cloned().collect();
        s.sort_by_key(|r| rs.index_of(r));
        s
    }
}

/// `supp(X)`, `soc(X)` and the minimal ideal `m_X = up_closure(soc(X))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportData {
    pub support: Vec<Root>,
    pub socle: Antichain,
    pub ideal: RootIdeal,
}

pub fn support_and_socle(rs: &RootSystem, x: &NilpotentElement) -> Result<SupportData> {
    for r in x.terms.keys() {
        rs.check_positive(r)?;
    }
    let support = x.support(rs);
    let socle = Antichain::from_sorted(minimal_elements(rs, &support));
    let ideal = up_closure(rs, socle.roots());
    Ok(SupportData {
        support,
        socle,
        ideal,
    })
}

/// `soc(m) ⊆ supp(X) ⊆ m`.
pub fn in_bullet_by_socle(rs: &RootSystem, x: &NilpotentElement, ideal: &RootIdeal) -> bool {
    let within = x.terms.keys().all(|r| ideal.contains(r));
    within && socle(rs, ideal).roots().iter().all(|r| x.terms.contains_key(r))
}

/// `X ∈ m` and `m_X = m`.
pub fn in_bullet_by_minimal_ideal(rs: &RootSystem, x: &NilpotentElement, ideal: &RootIdeal) -> bool {
    if !x.terms.keys().all(|r| ideal.contains(r)) {
        return false;
    }
    let soc = minimal_elements(rs, &x.support(rs));
    up_closure(rs, &soc) == *ideal
}

/// Whether `X ∈ m• = m \ m°`, decided both ways.
pub fn in_m_bullet(rs: &RootSystem, x: &NilpotentElement, ideal: &RootIdeal) -> Result<bool> {
    let a = in_bullet_by_socle(rs, x, ideal);
    let b = in_bullet_by_minimal_ideal(rs, x, ideal);
    if a != b {
        return Err(Error::InvariantViolation {
            detail: format!("membership characterisations disagree for {:?}", x.terms),
            trace: Vec::new(),
        });
    }
    Ok(a)
}

/// `t^H · X`: scales `c_α` by `t^{α(H)}`.
pub fn torus_action(x: &NilpotentElement, coweight: &[i64], t: Rational) -> Result<NilpotentElement> {
    if t.is_zero() {
        return Err(Error::OutsideContract);
    }
    let mut terms = BTreeMap::new();
    for (r, c) in &x.terms {
        let e = evaluate_on_coweight(r, coweight)?;
        let e = i32::try_from(e).map_err(|_| Error::Overflow("torus exponent"))?;
        let scale = checked_pow(t, e).ok_or(Error::Overflow("torus scaling"))?;
        let v = c.checked_mul(&scale).ok_or(Error::Overflow("torus scaling"))?;
        terms.insert(r.clone(), v);
    }
    Ok(NilpotentElement { terms })
}

fn checked_pow(t: Rational, e: i32) -> Option<Rational> {
    let (base, e) = if e < 0 { (t.recip(), e.unsigned_abs()) } else { (t, e as u32) };
    let num = base.numer().checked_pow(e)?;
    let den = base.denom().checked_pow(e)?;
    Some(Rational::new(num, den))
}

/// `lim_{t→0} t^{-n} (t^H · Y)`: the terms of `Y` whose root lies on the
/// hyperplane `α(H) = n`. Every other root of `supp(Y)` has `α(H) > n`, so
/// the limit keeps exactly the socle terms with their coefficients.
pub fn torus_degenerate(rs: &RootSystem, y: &NilpotentElement, cert: &Certificate) -> Result<NilpotentElement> {
    let data = support_and_socle(rs, y)?;
    if data.socle.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    if !in_m_bullet(rs, y, &data.ideal)? {
        return Err(Error::NotInBullet);
    }
    if cert.antichain != data.socle {
        return Err(Error::InvalidCertificate(String::from(
            "certificate is not for the socle of the element",
        )));
    }
    let report = verify_certificate(rs, cert);
    if !report.valid {
        return Err(Error::InvalidCertificate(
            report.first_failure().unwrap_or_default(),
        ));
    }
    let face = hyperplane_face(rs, &data.ideal, cert)?;
    let mut terms = BTreeMap::new();
    for (r, c) in &y.terms {
        let v = evaluate_on_coweight(r, &cert.coweight)?;
        if v < cert.level {
            return Err(Error::InvariantViolation {
                detail: format!("{r} lies below the hyperplane"),
                trace: Vec::new(),
            });
        }
        if v == cert.level {
            terms.insert(r.clone(), *c);
        }
    }
    let out = NilpotentElement { terms };
    if out.support(rs) != data.socle.roots() || face != data.socle.roots() {
        return Err(Error::InvariantViolation {
            detail: String::from("hyperplane face differs from the socle"),
            trace: Vec::new(),
        });
    }
    Ok(out)
}

/// For `supp(X)` linearly independent, `Ω_T(X)` is the set of elements with
/// the same support, so the test is support equality.
pub fn same_torus_orbit_linindep(rs: &RootSystem, x: &NilpotentElement, other: &NilpotentElement) -> Result<bool> {
    let s = x.support(rs);
    let vecs: Vec<Vec<i64>> = s.iter().map(|r| r.coeffs().to_vec()).collect();
    if !linalg::is_independent(&vecs) {
        return Err(Error::OutsideContract);
    }
    Ok(s == other.support(rs))
}

/// Names of the shipped example elements.
pub const FIXTURES: [&str; 6] = ["A6", "B4", "C4", "D5", "E6", "F4"];

fn fixture_roots(name: &str) -> Option<&'static [&'static [i64]]> {
    Some(match name {
        "A6" => &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1],
            &[0, 1, 1, 1, 1, 0],
        ],
        "B4" => &[
            &[0, 1, 0, 0],
            &[0, 0, 0, 1],
            &[1, 1, 0, 0],
            &[0, 1, 1, 0],
            &[1, 1, 2, 2],
        ],
        "C4" => &[
            &[1, 0, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 0, 0],
            &[0, 2, 2, 1],
        ],
        "D5" => &[
            &[0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 1],
            &[1, 1, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[1, 1, 2, 1, 1],
        ],
        "E6" => &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 1, 0, 0],
            &[1, 1, 2, 3, 2, 1],
        ],
        "F4" => &[
            &[1, 0, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 0, 0],
            &[1, 3, 4, 2],
        ],
        _ => return None,
    })
}

/// Non-conical example elements with all coefficients 1, in the ambient
/// system named by the fixture.
pub fn load_fixture(name: &str) -> Result<(RootSystem, NilpotentElement)> {
    let roots = fixture_roots(name).ok_or_else(|| Error::UnknownFixture(String::from(name)))?;
    let rs = RootSystem::from_label(name)?;
    let support: Vec<Root> = roots.iter().map(|c| Root::new(c.to_vec())).collect();
    let x = NilpotentElement::from_support(&rs, &support)?;
    Ok((rs, x))
}
