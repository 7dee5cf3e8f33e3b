//! On-disk result cache: one JSON report per input hash.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::report::{from_json, to_json, Report, VERSION};

pub const CACHE_ENV: &str = "IVHS_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `explicit`, else `$IVHS_CACHE_DIR`, else the user cache directory.
    pub fn locate(explicit: Option<&Path>) -> Self {
        if let Some(p) = explicit {
            return Cache::new(p);
        }
        if let Some(p) = std::env::var_os(CACHE_ENV).filter(|p| !p.is_empty()) {
            return Cache::new(p);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
            .unwrap_or_else(std::env::temp_dir);
        Cache::new(base.join("ivhs"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, hash: &str) -> PathBuf {
        self.dir.join(format!("{hash}-v{VERSION}.json"))
    }

    /// A stored report with `cached` set, or `None` on a miss or an
    /// unreadable entry.
    pub fn load(&self, hash: &str) -> Option<Report> {
        let text = fs::read_to_string(self.path(hash)).ok()?;
        let mut report = from_json(&text).ok()?;
        if report.input_hash != hash {
            return None;
        }
        report.cached = true;
        Some(report)
    }

    /// Stores a successful report atomically (temp file, then rename).
    /// Error reports are not stored.
    pub fn store(&self, report: &Report) -> std::io::Result<()> {
        if report.error.is_some() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir)?;
        let mut stored = report.clone();
        stored.cached = false;
        let target = self.path(&report.input_hash);
        let tmp = self
            .dir
            .join(format!(".{}.{}.tmp", report.input_hash, std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(to_json(&stored).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)
    }
}
