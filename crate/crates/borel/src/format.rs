//! JSON shapes of the core objects.
//!
//! Roots are integer arrays over the simple roots; simple indices (Weyl
//! words) are 1-based; rational coefficients are strings such as `"5/2"`.

use std::collections::BTreeMap;

use borel_core::certificates::{Certificate, Construction};
use borel_core::orbits::NilpotentElement;
use borel_core::poset::{Antichain, RootIdeal};
use borel_core::weyl::{Conjugation, WeylWord};
use borel_core::{Error, Rational, Root, RootSystem};
use serde::{Deserialize, Serialize};

pub fn roots_to_json(roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.coeffs().to_vec()).collect()
}

pub fn roots_from_json(rows: &[Vec<i64>]) -> Vec<Root> {
    rows.iter().map(|r| Root::new(r.clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSetJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub roots: Vec<Vec<i64>>,
}

impl RootSetJson {
    pub fn new(rs: &RootSystem, roots: &[Root]) -> Self {
        RootSetJson {
            root_type: rs.root_type().to_string(),
            roots: roots_to_json(roots),
        }
    }

    pub fn antichain(&self, rs: &RootSystem) -> Result<Antichain, Error> {
        Antichain::new(rs, roots_from_json(&self.roots))
    }

    pub fn ideal(&self, rs: &RootSystem) -> Result<RootIdeal, Error> {
        RootIdeal::new(rs, roots_from_json(&self.roots))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylWordJson {
    /// 1-based simple indices, applied left to right.
    pub word: Vec<usize>,
}

impl WeylWordJson {
    pub fn new(w: &WeylWord) -> Self {
        WeylWordJson {
            word: w.letters().iter().map(|i| i + 1).collect(),
        }
    }

    pub fn to_word(&self, rs: &RootSystem) -> Result<WeylWord, Error> {
        let letters = self
            .word
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or(Error::IndexOutOfRange {
                    index: 0,
                    rank: rs.rank(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        WeylWord::new(rs, letters)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub antichain: Vec<Vec<i64>>,
    pub word: Vec<usize>,
    pub image: Vec<Vec<i64>>,
    pub expanded: usize,
}

impl ConjugationJson {
    pub fn new(rs: &RootSystem, gamma: &Antichain, c: &Conjugation) -> Self {
        ConjugationJson {
            root_type: rs.root_type().to_string(),
            antichain: roots_to_json(gamma.roots()),
            word: WeylWordJson::new(&c.word).word,
            image: roots_to_json(&c.image),
            expanded: c.expanded,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub antichain: Vec<Vec<i64>>,
    #[serde(rename = "H")]
    pub coweight: Vec<i64>,
    pub n: i64,
    pub minimal: bool,
    #[serde(default)]
    pub trace: Vec<String>,
}

impl CertificateJson {
    pub fn new(rs: &RootSystem, cert: &Certificate, minimal: bool, trace: Vec<String>) -> Self {
        CertificateJson {
            root_type: rs.root_type().to_string(),
            antichain: roots_to_json(cert.antichain.roots()),
            coweight: cert.coweight.clone(),
            n: cert.level,
            minimal,
            trace,
        }
    }

    pub fn from_construction(rs: &RootSystem, c: &Construction, minimal: bool) -> Self {
        let trace = c.trace.iter().map(|s| s.name().to_string()).collect();
        Self::new(rs, &c.certificate, minimal, trace)
    }

    pub fn certificate(&self, rs: &RootSystem) -> Result<Certificate, Error> {
        Ok(Certificate {
            antichain: Antichain::new(rs, roots_from_json(&self.antichain))?,
            coweight: self.coweight.clone(),
            level: self.n,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub root: Vec<i64>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub terms: Vec<TermJson>,
}

/// Parses `"5/2"`, `"-3"` or `"7"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let r: Rational = s.trim().parse().ok()?;
    Some(r)
}

impl ElementJson {
    pub fn new(rs: &RootSystem, x: &NilpotentElement) -> Self {
        ElementJson {
            root_type: rs.root_type().to_string(),
            terms: x
                .support(rs)
                .into_iter()
                .map(|r| TermJson {
                    coeff: x.coeff(&r).to_string(),
                    root: r.into_coeffs(),
                })
                .collect(),
        }
    }

    pub fn element(&self, rs: &RootSystem) -> Result<NilpotentElement, ElementError> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let c = parse_rational(&t.coeff).ok_or_else(|| ElementError::Coefficient(t.coeff.clone()))?;
            terms.push((Root::new(t.root.clone()), c));
        }
        NilpotentElement::new(rs, terms).map_err(ElementError::Domain)
    }
}

#[derive(Debug)]
pub enum ElementError {
    Coefficient(String),
    Domain(Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub support: Vec<Vec<i64>>,
    pub socle: Vec<Vec<i64>>,
    pub ideal: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub certificate: CertificateJson,
    pub socle: Vec<Vec<i64>>,
    pub limit: ElementJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    #[serde(rename = "type")]
    pub root_type: String,
    pub socle: Vec<Vec<i64>>,
    pub weight: Vec<i64>,
    pub acting: String,
    /// Monomials of the weight component, each as its list of factors.
    pub basis: Vec<Vec<Vec<i64>>>,
    /// Invariant vectors as coefficient strings over `basis`.
    pub invariants: Vec<Vec<String>>,
}

/// One line of a reproduction report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub target: String,
    pub passed: bool,
    pub rows: Vec<ReportRow>,
    /// Values that are computed and shown but not compared.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

impl Report {
    pub fn new(target: &str, rows: Vec<ReportRow>) -> Self {
        Report {
            target: target.to_string(),
            passed: rows.iter().all(|r| r.ok),
            rows,
            notes: BTreeMap::new(),
        }
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.ok)
    }
}

pub fn row(label: impl Into<String>, expected: impl ToString, computed: impl ToString) -> ReportRow {
    let (e, c) = (expected.to_string(), computed.to_string());
    ReportRow {
        label: label.into(),
        ok: e == c,
        expected: e,
        computed: c,
    }
}
