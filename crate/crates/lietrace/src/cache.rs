//! On-disk result cache keyed by the SHA-256 of the canonical request.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::format::canonical;

pub const CACHE_ENV: &str = "LIETRACE_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// The flag wins over the environment; neither means no cache.
    pub fn locate(flag: Option<&Path>) -> Option<Cache> {
        let dir = match flag {
            Some(p) => p.to_path_buf(),
            None => PathBuf::from(std::env::var_os(CACHE_ENV)?),
        };
        Some(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(request: &Value) -> String {
        hex::encode(Sha256::digest(canonical(request).as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Unreadable or corrupt entries count as misses.
    pub fn get(&self, request: &Value) -> Option<Value> {
        let text = fs::read_to_string(self.path(&Self::key(request))).ok()?;
        let entry: Value = serde_json::from_str(&text).ok()?;
        (entry.get("request") == Some(request))
            .then(|| entry.get("result").cloned())
            .flatten()
    }

    /// Write through a temporary file in the same directory and rename it
    /// into place.
    pub fn put(&self, request: &Value, result: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = serde_json::json!({ "request": request, "result": result });
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(canonical(&entry).as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(&Self::key(request)))
            .map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_key_stability() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::locate(Some(dir.path())).unwrap();
        let req = json!({"command": "matrix", "type": "G2"});
        assert!(cache.get(&req).is_none());
        cache.put(&req, &json!({"x": 1})).unwrap();
        assert_eq!(cache.get(&req), Some(json!({"x": 1})));
        assert_eq!(Cache::key(&req), Cache::key(&json!({"type": "G2", "command": "matrix"})));
        assert_ne!(Cache::key(&req), Cache::key(&json!({"command": "matrix", "type": "F4"})));
    }
}
