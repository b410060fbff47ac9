//! On-disk cache of generated crystal graphs, one JSON file per key.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cartan::Weight;
use crate::crystal::{CrystalGraph, GenerationConfig, GraphDocument};
use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Pins the Fock reading order, the tensor convention and the charge order.
/// Bump whenever any of them changes so old graphs are never reused.
pub const CONVENTION_ID: &str = "fock-rows-ascending+kashiwara-tensor+charges-ascending/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub convention_id: String,
    pub key: String,
    pub created_at: u64,
    pub payload_digest: String,
    /// Canonical graph JSON, stored verbatim so the digest covers exact bytes.
    pub payload: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    Rebuilt,
}

#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
    warnings: Vec<String>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn cache_key(lambda: &Weight, budget: &[i64]) -> String {
    #[derive(Serialize)]
    struct Key<'a> {
        schema_version: u32,
        n: usize,
        lambda: &'a Weight,
        budget: &'a [i64],
        convention_id: &'a str,
    }
    let key = Key {
        schema_version: SCHEMA_VERSION,
        n: lambda.rank().get(),
        lambda,
        budget,
        convention_id: CONVENTION_ID,
    };
    sha256_hex(serde_json::to_string(&key).expect("key serializes").as_bytes())
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir, warnings: Vec::new() }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn take_warnings(&mut self) -> Vec<String> {
        std::mem::take(&mut self.warnings)
    }

    pub fn path_for(&self, lambda: &Weight, budget: &[i64]) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", cache_key(lambda, budget))))
    }

    pub fn get_or_build(
        &mut self,
        lambda: &Weight,
        budget: &[i64],
        config: &GenerationConfig,
    ) -> Result<(CrystalGraph, CacheStatus)> {
        let Some(path) = self.path_for(lambda, budget) else {
            return Ok((CrystalGraph::generate(lambda, budget, config)?, CacheStatus::Disabled));
        };
        let key = cache_key(lambda, budget);
        let mut status = CacheStatus::Miss;
        if path.exists() {
            match load(&path, &key, lambda, budget) {
                Ok(graph) => return Ok((graph, CacheStatus::Hit)),
                Err(why) => {
                    self.warnings.push(format!(
                        "cache entry {} is unusable ({why}); rebuilding",
                        path.display()
                    ));
                    status = CacheStatus::Rebuilt;
                }
            }
        }
        let graph = CrystalGraph::generate(lambda, budget, config)?;
        if let Err(why) = store(&path, &key, &graph) {
            self.warnings.push(format!("could not write cache entry {}: {why}", path.display()));
        }
        Ok((graph, status))
    }
}

fn load(path: &Path, key: &str, lambda: &Weight, budget: &[i64]) -> std::result::Result<CrystalGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| format!("malformed entry: {e}"))?;
    if entry.schema_version != SCHEMA_VERSION || entry.convention_id != CONVENTION_ID || entry.key != key {
        return Err("key, schema or convention mismatch".into());
    }
    if sha256_hex(entry.payload.as_bytes()) != entry.payload_digest {
        return Err("payload digest mismatch".into());
    }
    let doc: GraphDocument =
        serde_json::from_str(&entry.payload).map_err(|e| format!("malformed payload: {e}"))?;
    let graph = CrystalGraph::from_document(doc).map_err(|e| e.to_string())?;
    if graph.lambda() != lambda || graph.budget() != budget {
        return Err("payload describes a different graph".into());
    }
    if graph.canonical_json() != entry.payload {
        return Err("payload is not in canonical form".into());
    }
    Ok(graph)
}

fn store(path: &Path, key: &str, graph: &CrystalGraph) -> std::io::Result<()> {
    let payload = graph.canonical_json();
    let entry = CacheEntry {
        schema_version: SCHEMA_VERSION,
        convention_id: CONVENTION_ID.to_string(),
        key: key.to_string(),
        created_at: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        payload_digest: sha256_hex(payload.as_bytes()),
        payload,
    };
    let dir = path.parent().expect("cache paths live in a directory");
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&entry)?)?;
    fs::rename(&tmp, path)
}
