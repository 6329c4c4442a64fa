//! Content-addressed artifact cache with a determinism contract: hits must
//! be byte-identical to recomputation. Entries carry the hash of their
//! payload; a mismatch is a corrupt entry, which callers silently recompute
//! and overwrite.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Key for (system, command, caps) tuples.
pub fn cache_key(parts: &[&str]) -> String {
    sha256_hex(parts.join("\x1f").as_bytes())
}

#[derive(Serialize, Deserialize)]
struct Entry {
    schema: String,
    payload_hash: String,
    payload: String,
}

pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    /// Entry existed but failed validation; caller recomputes.
    Corrupt,
}

impl Cache {
    pub fn new(dir: &Path) -> anyhow::Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Lookup {
        let path = self.path(key);
        let Ok(text) = std::fs::read_to_string(&path) else {
            return Lookup::Miss;
        };
        let Ok(entry) = serde_json::from_str::<Entry>(&text) else {
            return Lookup::Corrupt;
        };
        if entry.schema != "dual-artin/cache/1"
            || sha256_hex(entry.payload.as_bytes()) != entry.payload_hash
        {
            return Lookup::Corrupt;
        }
        Lookup::Hit(entry.payload)
    }

    /// Atomic write: temp file in the same directory, then rename.
    pub fn put(&self, key: &str, payload: &str) -> anyhow::Result<()> {
        let entry = Entry {
            schema: String::from("dual-artin/cache/1"),
            payload_hash: sha256_hex(payload.as_bytes()),
            payload: payload.to_string(),
        };
        let tmp = self.dir.join(format!(".{key}.tmp"));
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&entry)?.as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, self.path(key))?;
        Ok(())
    }
}
