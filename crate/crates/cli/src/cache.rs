use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};
use supercapelli_core::Result;

const TAG: &str = "supercapelli-cache/1";

/// On-disk memo of computed results, one file per key. Each file holds the
/// version tag, the SHA-256 of the payload, and the payload itself.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// `--cache-dir`, falling back to `SUPERCAPELLI_CACHE`.
    pub fn resolve(flag: Option<&Path>) -> Self {
        match flag {
            Some(p) => Self::new(p),
            None => std::env::var_os("SUPERCAPELLI_CACHE").map(Self::new).unwrap_or_else(Self::disabled),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, key: &Value) -> Option<PathBuf> {
        let name = digest(&format!("{TAG}\n{key}"));
        self.dir.as_ref().map(|d| d.join(format!("{name}.json")))
    }

    fn load(path: &Path) -> std::result::Result<Value, String> {
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let mut lines = text.splitn(3, '\n');
        let (tag, hash, payload) = match (lines.next(), lines.next(), lines.next()) {
            (Some(t), Some(h), Some(p)) => (t, h, p),
            _ => return Err("truncated entry".into()),
        };
        if tag != TAG {
            return Err(format!("unknown tag {tag:?}"));
        }
        if digest(payload) != hash {
            return Err("hash mismatch".into());
        }
        serde_json::from_str(payload).map_err(|e| e.to_string())
    }

    fn store(path: &Path, value: &Value) -> std::io::Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let payload = value.to_string();
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, format!("{TAG}\n{}\n{payload}", digest(&payload)))?;
        fs::rename(tmp, path)
    }

    /// Cached value for `key`, computing and storing it on a miss. Corrupt
    /// entries are reported on stderr and replaced.
    pub fn get_or_compute(&self, key: &Value, compute: impl FnOnce() -> Result<Value>) -> Result<Value> {
        let Some(path) = self.path_for(key) else {
            return compute();
        };
        if path.exists() {
            match Self::load(&path) {
                Ok(v) => return Ok(v),
                Err(e) => eprintln!("warning: cache entry {} unusable ({e}); recomputing", path.display()),
            }
        }
        let v = compute()?;
        if let Err(e) = Self::store(&path, &v) {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = json!({ "kind": "test", "m": 1 });
        let v = json!({ "a": [1, 2, 3] });
        assert_eq!(cache.get_or_compute(&key, || Ok(v.clone())).unwrap(), v);
        let hit = cache.get_or_compute(&key, || panic!("should hit")).unwrap();
        assert_eq!(hit, v);
        let path = cache.path_for(&key).unwrap();
        let text = fs::read_to_string(&path).unwrap().replace("[1,2,3]", "[1,2,4]");
        fs::write(&path, text).unwrap();
        assert_eq!(cache.get_or_compute(&key, || Ok(v.clone())).unwrap(), v);
        assert_eq!(Cache::load(&path).unwrap(), v);
    }
}
