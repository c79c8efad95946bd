//! Advisory witness cache, `dh_cache.json`. Every entry is re-verified on
//! load; entries that fail are dropped.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::code::LinearCode;
use crate::hull::hull_dimension;
use crate::matrix_file::{parse_matrix, write_matrix, Alphabet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: usize,
    pub k: usize,
    pub hull_dim: usize,
    pub method: String,
    pub d: usize,
    /// Generator in matrix-file text form.
    pub generator: String,
}

impl CacheEntry {
    pub fn new(code: &LinearCode, d: usize, method: &str) -> Self {
        CacheEntry {
            n: code.length(),
            k: code.dimension(),
            hull_dim: hull_dimension(code),
            method: method.to_string(),
            d,
            generator: write_matrix(code.generator()),
        }
    }

    /// The stored code, if it really has the recorded parameters.
    pub fn verified_code(&self) -> Option<LinearCode> {
        let m = parse_matrix(&self.generator, Alphabet::Letters).ok()?;
        let code = LinearCode::from_generator(&m).ok()?;
        let ok = code.length() == self.n
            && code.dimension() == self.k
            && hull_dimension(&code) == self.hull_dim
            && code.min_distance().ok()? == self.d;
        ok.then_some(code)
    }
}

type Key = (usize, usize, usize, String);

#[derive(Clone, Debug, Default)]
pub struct DhCache {
    entries: BTreeMap<Key, CacheEntry>,
    pub dropped: usize,
}

impl DhCache {
    /// Loads and re-verifies a cache file; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        if !path.exists() {
            return Ok(DhCache::default());
        }
        let text = std::fs::read_to_string(path)?;
        let raw: Vec<CacheEntry> = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let mut cache = DhCache::default();
        for e in raw {
            if e.verified_code().is_some() {
                cache.insert(e);
            } else {
                cache.dropped += 1;
            }
        }
        Ok(cache)
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let list: Vec<&CacheEntry> = self.entries.values().collect();
        let text =
            serde_json::to_string_pretty(&list).map_err(|e| CliError::Serialize(e.to_string()))?;
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, text + "\n")?;
        Ok(())
    }

    /// Keeps the entry with the larger distance for each key.
    pub fn insert(&mut self, e: CacheEntry) {
        let key = (e.n, e.k, e.hull_dim, e.method.clone());
        match self.entries.get(&key) {
            Some(old) if old.d >= e.d => {}
            _ => {
                self.entries.insert(key, e);
            }
        }
    }

    /// Best cached hull-1 distance at `(n, k)` over all methods.
    pub fn best(&self, n: usize, k: usize) -> Option<&CacheEntry> {
        self.entries
            .values()
            .filter(|e| e.n == n && e.k == k && e.hull_dim == 1)
            .max_by_key(|e| e.d)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixture;

    #[test]
    fn round_trip_and_reverification() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dh_cache.json");
        let code = fixture("G_[7,3,4]").unwrap().code();
        let mut cache = DhCache::default();
        cache.insert(CacheEntry::new(&code, 4, "witness"));
        let mut forged = CacheEntry::new(&code, 5, "search");
        forged.d = 5;
        cache.insert(forged);
        cache.save(&path).unwrap();

        let loaded = DhCache::load(&path).unwrap();
        assert_eq!(loaded.len(), 1);
        assert_eq!(loaded.dropped, 1);
        assert_eq!(loaded.best(7, 3).unwrap().d, 4);
    }
}
