//! On-disk cache of computed spectra and tables.
//!
//! Each entry is one JSON file named by the SHA-256 of its key:
//!
//! ```json
//! {"format":1,"key":"...","checksum":"<sha256 of payload>","payload":{...}}
//! ```
//!
//! Entries whose format, key or checksum do not match are deleted and
//! recomputed. Writes go to a temporary file in the same directory and are
//! renamed into place, so concurrent readers never see partial files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "CLASS_SPECTRUM_CACHE";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    format: u32,
    key: String,
    checksum: String,
    payload: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `$XDG_CACHE_HOME/class-spectrum`, else `$HOME/.cache/class-spectrum`.
pub fn default_dir() -> Option<PathBuf> {
    let xdg = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()).map(PathBuf::from);
    let base =
        xdg.or_else(|| std::env::var_os("HOME").filter(|v| !v.is_empty()).map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("class-spectrum"))
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Cache key including the crate version, so upgrades never reuse old entries.
    pub fn key(parts: &[&str]) -> String {
        format!("{}|v{}", parts.join("|"), env!("CARGO_PKG_VERSION"))
    }

    fn path_for(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", sha256_hex(key.as_bytes()))))
    }

    /// Reads a verified entry. Corrupt or mismatched entries are removed.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path_for(key)?;
        let bytes = fs::read(&path).ok()?;
        let valid = serde_json::from_slice::<Entry>(&bytes).ok().and_then(|e| {
            let payload = serde_json::to_string(&e.payload).ok()?;
            let ok = e.format == FORMAT_VERSION && e.key == key && e.checksum == sha256_hex(payload.as_bytes());
            ok.then_some(e.payload)
        });
        match valid.and_then(|p| serde_json::from_value(p).ok()) {
            Some(v) => Some(v),
            None => {
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    /// Stores `value`. Failures are ignored: the cache is an accelerator only.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        let Some(path) = self.path_for(key) else { return };
        let _ = self.try_put(&path, key, value);
    }

    fn try_put<T: Serialize>(&self, path: &Path, key: &str, value: &T) -> std::io::Result<()> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        let payload = serde_json::to_value(value)?;
        let checksum = sha256_hex(serde_json::to_string(&payload)?.as_bytes());
        let entry = Entry { format: FORMAT_VERSION, key: key.to_owned(), checksum, payload };
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".tmp-{}-{}", std::process::id(), COUNTER.fetch_add(1, Ordering::Relaxed)));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&serde_json::to_vec(&entry)?)?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }

    pub fn get_or_compute<T, E, F>(&self, key: &str, compute: F) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, E>,
    {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.put(key, &v);
        Ok(v)
    }
}
