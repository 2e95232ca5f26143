//! On-disk cache of enumerated antichains.
//!
//! One newline-delimited JSON file per (type, filter), next to a manifest
//! carrying the SHA-256 of that file. A cache entry whose hash or contents do
//! not check out is rebuilt.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use borel_core::poset::{enumerate_antichains, Antichain, FilterSpec, Maximality};
use borel_core::RootSystem;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::format::RootSetJson;

pub fn filter_key(filter: FilterSpec) -> &'static str {
    match filter {
        FilterSpec::All => "all",
        FilterSpec::NonEmpty => "nonempty",
        FilterSpec::Case4(Maximality::AmongNonSimple) => "case4-nonsimple",
        FilterSpec::Case4(Maximality::AmongFiltered) => "case4-filtered",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(rename = "type")]
    pub root_type: String,
    pub filter: String,
    pub count: usize,
    pub sha256: String,
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// The NDJSON body for a list of antichains.
pub fn render(rs: &RootSystem, antichains: &[Antichain]) -> String {
    let mut s = String::new();
    for ac in antichains {
        s.push_str(&serde_json::to_string(&RootSetJson::new(rs, ac.roots())).expect("serialisable"));
        s.push('\n');
    }
    s
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn paths(&self, rs: &RootSystem, filter: FilterSpec) -> Option<(PathBuf, PathBuf)> {
        let dir = self.dir.as_ref()?;
        let stem = format!("{}.{}", rs.root_type(), filter_key(filter));
        Some((dir.join(format!("{stem}.ndjson")), dir.join(format!("{stem}.manifest.json"))))
    }

    /// Antichains passing `filter`, from the cache when it is valid.
    pub fn antichains(&self, rs: &RootSystem, filter: FilterSpec) -> io::Result<Vec<Antichain>> {
        let Some((data, manifest)) = self.paths(rs, filter) else {
            return Ok(enumerate_antichains(rs, filter).collect());
        };
        if let Some(hit) = load(rs, filter, &data, &manifest) {
            return Ok(hit);
        }
        let list: Vec<Antichain> = enumerate_antichains(rs, filter).collect();
        let body = render(rs, &list);
        let m = Manifest {
            root_type: rs.root_type().to_string(),
            filter: filter_key(filter).to_string(),
            count: list.len(),
            sha256: sha256_hex(body.as_bytes()),
        };
        fs::create_dir_all(data.parent().expect("cache file has a parent"))?;
        write_atomic(&data, body.as_bytes())?;
        let mut mj = serde_json::to_string_pretty(&m).expect("serialisable");
        mj.push('\n');
        write_atomic(&manifest, mj.as_bytes())?;
        Ok(list)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, bytes)?;
    fs::rename(tmp, path)
}

fn load(rs: &RootSystem, filter: FilterSpec, data: &Path, manifest: &Path) -> Option<Vec<Antichain>> {
    let m: Manifest = serde_json::from_slice(&fs::read(manifest).ok()?).ok()?;
    let body = fs::read(data).ok()?;
    if m.root_type != rs.root_type().to_string()
        || m.filter != filter_key(filter)
        || m.sha256 != sha256_hex(&body)
    {
        return None;
    }
    let text = String::from_utf8(body).ok()?;
    let mut out = Vec::new();
    for line in text.lines() {
        let j: RootSetJson = serde_json::from_str(line).ok()?;
        out.push(j.antichain(rs).ok()?);
    }
    (out.len() == m.count).then_some(out)
}
