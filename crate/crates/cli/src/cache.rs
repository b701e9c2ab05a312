use crate::report::InvariantsEntry;
use rug::Integer;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use szpiro_core::elliptic::{global_invariants, EllipticModel, GlobalInvariants};

/// Append-only store of global invariants keyed by the hash of `a1..a6`.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Stored {
    a: [String; 5],
    invariants: InvariantsEntry,
}

fn decimals(a: &[Integer; 5]) -> [String; 5] {
    a.clone().map(|x| x.to_string())
}

/// SHA-256 of `a1,a2,a3,a4,a6` in decimal.
pub fn model_key(a: &[Integer; 5]) -> String {
    let text = decimals(a).join(",");
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn path(&self, a: &[Integer; 5]) -> PathBuf {
        self.dir.join(format!("{}.json", model_key(a)))
    }

    /// `None` on a miss; a corrupt or mismatched entry is reported and
    /// treated as a miss.
    pub fn load(&self, a: &[Integer; 5]) -> Option<GlobalInvariants> {
        let path = self.path(a);
        let text = std::fs::read_to_string(&path).ok()?;
        let parsed = serde_json::from_str::<Stored>(&text)
            .map_err(|e| e.to_string())
            .and_then(|s| {
                if s.a != decimals(a) {
                    return Err("entry belongs to another model".into());
                }
                s.invariants.to_global()
            });
        match parsed {
            Ok(g) => Some(g),
            Err(e) => {
                eprintln!("warning: corrupt cache entry {}: {e}; recomputing", path.display());
                None
            }
        }
    }

    pub fn store(&self, a: &[Integer; 5], g: &GlobalInvariants) -> std::io::Result<()> {
        let s = Stored {
            a: decimals(a),
            invariants: g.into(),
        };
        let tmp = self.path(a).with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(&s).expect("cache entries serialise"))?;
        std::fs::rename(tmp, self.path(a))
    }

    /// Cached invariants, computing and storing them on a miss. The flag is
    /// true on a hit.
    pub fn get_or_compute(&self, a: &[Integer; 5], model: &EllipticModel) -> szpiro_core::Result<(GlobalInvariants, bool)> {
        if let Some(g) = self.load(a) {
            return Ok((g, true));
        }
        let g = global_invariants(model)?;
        if let Err(e) = self.store(a, &g) {
            eprintln!("warning: cannot write cache entry: {e}");
        }
        Ok((g, false))
    }
}
