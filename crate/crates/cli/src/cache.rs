//! One JSON file per result, named by the SHA-256 of the request and the
//! conventions in force. Files are written to a temporary name and renamed.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Sign and orientation choices that results depend on. Changing any entry
/// changes every cache key.
pub fn convention_manifest() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([
        ("mosaic_cells", "internal vertices in planar preorder; A-infinity boundary with Koszul signs"),
        ("cobar_coinvariants", "children reversed with sign (-1)^(m-1); vertices ordered by (min leaf, -leaf count)"),
        ("bracket_symmetry", "nu2 skew, nu3 skew; odd Jacobi is the signed sum over S5"),
        ("graph_orientation", "edges ordered, odd degree; internal vertices unordered"),
        ("icg_differential", "internal-internal and out-degree-1 external contractions; edge i has sign (-1)^i"),
        ("gc_splitting", "both split parts nonempty; new edge first"),
    ])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub subcommand: String,
    pub parameters: BTreeMap<String, Value>,
    pub payload: Value,
    /// `Some(false)` when a check found a mismatch.
    pub passed: Option<bool>,
    pub version: String,
    pub manifest: BTreeMap<String, String>,
}

impl ResultRecord {
    pub fn new(subcommand: &str, parameters: BTreeMap<String, Value>, payload: Value, passed: Option<bool>) -> Self {
        ResultRecord {
            subcommand: subcommand.to_string(),
            parameters,
            payload,
            passed,
            version: VERSION.to_string(),
            manifest: convention_manifest().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }

    pub fn key(&self) -> String {
        cache_key(&self.subcommand, &self.parameters, &self.version, &self.manifest)
    }
}

pub fn cache_key(
    subcommand: &str,
    parameters: &BTreeMap<String, Value>,
    version: &str,
    manifest: &BTreeMap<String, String>,
) -> String {
    let request = serde_json::json!({
        "subcommand": subcommand,
        "parameters": parameters,
        "version": version,
        "manifest": manifest,
    });
    format!("{:x}", Sha256::digest(request.to_string().as_bytes()))
}

pub fn current_key(subcommand: &str, parameters: &BTreeMap<String, Value>) -> String {
    let manifest = convention_manifest().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    cache_key(subcommand, parameters, VERSION, &manifest)
}

pub fn default_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("MOSAIC_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("mosaic");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("mosaic");
    }
    PathBuf::from(".mosaic-cache")
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Cache { dir }
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored record for `key`; unreadable or mismatched files count as misses.
    pub fn load(&self, key: &str) -> Option<ResultRecord> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let record: ResultRecord = serde_json::from_str(&text).ok()?;
        (record.key() == key).then_some(record)
    }

    pub fn store(&self, record: &ResultRecord) -> std::io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path(&record.key());
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, record)?;
        tmp.flush()?;
        tmp.persist(&target).map_err(|e| e.error)?;
        Ok(target)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> BTreeMap<String, Value> {
        BTreeMap::from([("n".to_string(), Value::from(4))])
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().to_path_buf());
        let rec = ResultRecord::new("poincare", params(), serde_json::json!({"coeffs": [1, 4]}), None);
        cache.store(&rec).unwrap();
        assert_eq!(cache.load(&current_key("poincare", &params())), Some(rec));
    }

    #[test]
    fn key_depends_on_manifest_and_version() {
        let rec = ResultRecord::new("poincare", params(), Value::Null, None);
        let mut other = rec.manifest.clone();
        other.insert("graph_orientation".into(), "something else".into());
        assert_ne!(rec.key(), cache_key("poincare", &rec.parameters, VERSION, &other));
        assert_ne!(rec.key(), cache_key("poincare", &rec.parameters, "0.0.0", &rec.manifest));
        assert_eq!(rec.key(), current_key("poincare", &params()));
    }

    #[test]
    fn stale_record_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().to_path_buf());
        let mut rec = ResultRecord::new("poincare", params(), Value::Null, None);
        let key = rec.key();
        rec.manifest.insert("graph_orientation".into(), "changed".into());
        fs::write(dir.path().join(format!("{key}.json")), serde_json::to_string(&rec).unwrap()).unwrap();
        assert!(cache.load(&key).is_none());
    }
}
