//! Content-addressed Betti table cache: one JSON file per key, written
//! atomically through a temporary file and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use regpow_core::edge_ideals::EdgeIdealKind;
use regpow_core::graph::{Edge, Graph};
use regpow_core::resolution::BettiTable;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Generator order of `I^t` used by the oracle; part of the key.
pub const GENERATOR_ORDER: &str = "lex-edges/degrevlex";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: usize,
    pub edges: Vec<Edge>,
    pub kind: EdgeIdealKind,
    pub t: u32,
    pub characteristic: u32,
    pub order: String,
}

impl CacheKey {
    /// Key over the canonical form, so isomorphic inputs share an entry.
    pub fn new(g: &Graph, kind: EdgeIdealKind, t: u32, characteristic: u32) -> CacheKey {
        let c = g.canonical_form();
        CacheKey { n: c.n(), edges: c.edges(), kind, t, characteristic, order: GENERATOR_ORDER.to_string() }
    }

    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("key serializes");
        hex::encode(Sha256::digest(bytes))
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: CacheKey,
    betti: BettiTable,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// A missing, unreadable or mismatched entry is a miss; corrupt entries are removed.
    pub fn get(&self, key: &CacheKey) -> Option<BettiTable> {
        let path = self.path(key);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<Entry>(&bytes) {
            Ok(e) if &e.key == key => Some(e.betti),
            _ => {
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    pub fn put(&self, key: &CacheKey, betti: &BettiTable) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry { key: key.clone(), betti: betti.clone() };
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}-{}",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed),
            key.digest()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&serde_json::to_vec_pretty(&entry).expect("entry serializes"))?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(key)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}
