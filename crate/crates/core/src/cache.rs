//! On-disk cache of subgroup lattices, keyed by the group's content hash.
//!
//! File layout: `<dir>/lattice-<group_hash>.json` holding [`LatticeFile`].
//! Bit `i` of each hex bitset is element `i` (see [`ElemSet::to_hex`]).

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::{enumerate_subgroups, SubgroupLattice};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

pub const FORMAT_VERSION: u32 = 1;

/// Lattices of groups at least this large are worth caching.
pub const CACHE_MIN_ORDER: usize = 48;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeFile {
    pub format_version: u32,
    pub group_hash: String,
    pub subgroups: Vec<String>,
    pub containment: Vec<(usize, usize)>,
    /// SHA-256 over the three fields above.
    pub checksum: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheStatus {
    /// Below [`CACHE_MIN_ORDER`]; computed directly.
    Skipped,
    Hit,
    /// No usable file; computed and written.
    Miss,
    /// A file existed but failed validation; recomputed and overwritten.
    Rejected,
}

fn checksum(version: u32, hash: &str, subgroups: &[String], containment: &[(usize, usize)]) -> String {
    let mut h = Sha256::new();
    h.update(version.to_le_bytes());
    h.update(hash.as_bytes());
    for s in subgroups {
        h.update(s.as_bytes());
        h.update(b",");
    }
    for (a, b) in containment {
        h.update((*a as u64).to_le_bytes());
        h.update((*b as u64).to_le_bytes());
    }
    hex::encode(h.finalize())
}

impl LatticeFile {
    pub fn from_lattice(lattice: &SubgroupLattice) -> Self {
        let n = lattice.group_order();
        let subgroups: Vec<String> = lattice.subgroups().iter().map(|s| s.to_hex(n)).collect();
        let containment = lattice.containment_pairs();
        let group_hash = lattice.group_hash().to_string();
        LatticeFile {
            checksum: checksum(FORMAT_VERSION, &group_hash, &subgroups, &containment),
            format_version: FORMAT_VERSION,
            group_hash,
            subgroups,
            containment,
        }
    }

    /// Rebuilds the lattice, rejecting anything inconsistent with `g`.
    pub fn into_lattice(self, g: &GroupTable) -> Result<SubgroupLattice> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Cache(format!("format version {} != {FORMAT_VERSION}", self.format_version)));
        }
        if self.group_hash != g.content_hash() {
            return Err(Error::Cache("group hash mismatch".into()));
        }
        let expected = checksum(self.format_version, &self.group_hash, &self.subgroups, &self.containment);
        if expected != self.checksum {
            return Err(Error::Cache("checksum mismatch".into()));
        }
        let mut sets = Vec::with_capacity(self.subgroups.len());
        for s in &self.subgroups {
            let set = ElemSet::from_hex(s).ok_or_else(|| Error::Cache(format!("bad bitset `{s}`")))?;
            let gens: Vec<_> = set.iter().collect();
            if gens.iter().any(|&x| x >= g.order()) || g.closure(&gens) != set {
                return Err(Error::Cache(format!("bitset `{s}` is not a subgroup")));
            }
            sets.push(set);
        }
        let lattice = SubgroupLattice::from_subgroups(g, sets);
        if lattice.len() != self.subgroups.len() || lattice.containment_pairs() != self.containment {
            return Err(Error::Cache("subgroup list or containment inconsistent".into()));
        }
        Ok(lattice)
    }
}

#[derive(Clone, Debug)]
pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LatticeCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, g: &GroupTable) -> PathBuf {
        self.dir.join(format!("lattice-{}.json", g.content_hash()))
    }

    pub fn load(&self, g: &GroupTable) -> Result<SubgroupLattice> {
        let path = self.path_for(g);
        let text = fs::read_to_string(&path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let file: LatticeFile = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
        file.into_lattice(g)
    }

    pub fn store(&self, lattice: &SubgroupLattice) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| Error::Cache(e.to_string()))?;
        let path = self.dir.join(format!("lattice-{}.json", lattice.group_hash()));
        let text =
            serde_json::to_string(&LatticeFile::from_lattice(lattice)).map_err(|e| Error::Cache(e.to_string()))?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text).map_err(|e| Error::Cache(e.to_string()))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(e.to_string()))
    }

    /// Loads a cached lattice or enumerates (and stores) a fresh one. A bad
    /// cache file never produces a wrong lattice: it is recomputed.
    pub fn lattice(&self, g: &GroupTable) -> Result<(SubgroupLattice, CacheStatus)> {
        if g.order() < CACHE_MIN_ORDER {
            return Ok((enumerate_subgroups(g), CacheStatus::Skipped));
        }
        let existed = self.path_for(g).exists();
        match self.load(g) {
            Ok(l) => Ok((l, CacheStatus::Hit)),
            Err(_) => {
                let l = enumerate_subgroups(g);
                self.store(&l)?;
                Ok((l, if existed { CacheStatus::Rejected } else { CacheStatus::Miss }))
            }
        }
    }
}

/// Enumerates directly, or through `cache` when one is given.
pub fn lattice_for(g: &GroupTable, cache: Option<&LatticeCache>) -> Result<SubgroupLattice> {
    match cache {
        Some(c) => c.lattice(g).map(|(l, _)| l),
        None => Ok(enumerate_subgroups(g)),
    }
}
