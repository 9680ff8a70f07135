//! On-disk cache of reduced Gröbner bases, one file per provenance hash.
//!
//! File layout (UTF-8, `\n` line endings):
//!
//! ```text
//! commvar-gb v1
//! ring <name>,<name>,...
//! order <degrevlex|lex>
//! provenance <hex sha256>
//! count <k>
//! <generator 1 in canonical text>
//! ...
//! ```
//!
//! The content is a pure function of the basis, so a hit is byte-identical
//! to what a recomputation would write.

use super::{buchberger, GroebnerBasis, GroebnerError, Limits};
use crate::poly::{MPoly, RingRef};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const CACHE_HEADER: &str = "commvar-gb v1";
const EXTENSION: &str = "gb";

#[derive(Clone, Debug)]
pub struct GbCache {
    dir: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct GcStats {
    pub scanned: usize,
    pub removed: usize,
    pub kept: usize,
    pub unreadable: Vec<String>,
}

impl GbCache {
    /// A cache that never touches the filesystem.
    pub fn disabled() -> Self {
        GbCache { dir: None }
    }

    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GbCache { dir: Some(dir.into()) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, hash: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{hash}.{EXTENSION}")))
    }

    /// Looks the basis up by provenance, computing and storing it on a miss.
    /// Returns the basis and whether it came from disk.
    pub fn get_or_compute(&self, gens: &[MPoly], limits: &Limits) -> Result<(GroebnerBasis, bool), GroebnerError> {
        let ring = gens.first().ok_or(GroebnerError::EmptyInput)?.ring().clone();
        let hash = super::provenance_hash(&ring, gens);
        if let Some(path) = self.path_for(&hash) {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(gb) = decode(&ring, &text) {
                    if gb.provenance() == hash {
                        return Ok((gb, true));
                    }
                }
            }
        }
        let gb = buchberger(gens, limits)?;
        self.store(&gb)?;
        Ok((gb, false))
    }

    pub fn store(&self, gb: &GroebnerBasis) -> Result<(), GroebnerError> {
        let Some(path) = self.path_for(gb.provenance()) else {
            return Ok(());
        };
        let dir = self.dir.as_ref().unwrap();
        fs::create_dir_all(dir).map_err(|e| GroebnerError::Cache(e.to_string()))?;
        // Write to a private temp file, then rename: concurrent writers of the
        // same hash produce identical content, the last rename wins.
        let tmp = dir.join(format!(
            ".{}.{}.{:?}.tmp",
            gb.provenance(),
            std::process::id(),
            std::thread::current().id()
        ));
        let mut f = fs::File::create(&tmp).map_err(|e| GroebnerError::Cache(e.to_string()))?;
        f.write_all(encode(gb).as_bytes())
            .map_err(|e| GroebnerError::Cache(e.to_string()))?;
        drop(f);
        fs::rename(&tmp, &path).map_err(|e| GroebnerError::Cache(e.to_string()))
    }

    /// Removes entries whose version header is not current. Entries that
    /// cannot be read are reported and left alone.
    pub fn gc(&self) -> Result<GcStats, GroebnerError> {
        let mut stats = GcStats::default();
        let Some(dir) = &self.dir else {
            return Ok(stats);
        };
        if !dir.exists() {
            return Ok(stats);
        }
        let mut entries: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| GroebnerError::Cache(e.to_string()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == EXTENSION))
            .collect();
        entries.sort();
        for path in entries {
            stats.scanned += 1;
            match fs::read_to_string(&path) {
                Ok(text) if text.lines().next() == Some(CACHE_HEADER) => stats.kept += 1,
                Ok(_) => match fs::remove_file(&path) {
                    Ok(()) => stats.removed += 1,
                    Err(_) => stats.unreadable.push(path.display().to_string()),
                },
                Err(_) => stats.unreadable.push(path.display().to_string()),
            }
        }
        Ok(stats)
    }
}

pub fn encode(gb: &GroebnerBasis) -> String {
    let mut s = String::new();
    s.push_str(CACHE_HEADER);
    s.push('\n');
    s.push_str(&format!("ring {}\n", gb.ring().names().join(",")));
    s.push_str(&format!("order {}\n", gb.order().name()));
    s.push_str(&format!("provenance {}\n", gb.provenance()));
    s.push_str(&format!("count {}\n", gb.len()));
    for g in gb.generators() {
        s.push_str(&g.to_text());
        s.push('\n');
    }
    s
}

pub fn decode(ring: &RingRef, text: &str) -> Result<GroebnerBasis, GroebnerError> {
    let bad = |m: &str| GroebnerError::Cache(m.to_string());
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(bad("stale or missing version header"));
    }
    let field = |line: Option<&str>, key: &str| -> Result<String, GroebnerError> {
        line.and_then(|l| l.strip_prefix(key))
            .and_then(|l| l.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| GroebnerError::Cache(format!("missing '{key}' line")))
    };
    if field(lines.next(), "ring")? != ring.names().join(",") {
        return Err(bad("ring mismatch"));
    }
    if field(lines.next(), "order")? != ring.order().name() {
        return Err(bad("order mismatch"));
    }
    let provenance = field(lines.next(), "provenance")?;
    let count: usize = field(lines.next(), "count")?.parse().map_err(|_| bad("bad count"))?;
    let gens = lines
        .map(|l| MPoly::parse(ring, l).map_err(GroebnerError::from))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.len() != count {
        return Err(bad("truncated entry"));
    }
    Ok(GroebnerBasis::from_parts(ring, gens, provenance))
}
