//! Append-only run records, stored per input digest.

use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const DATA_DIR_ENV: &str = "CHAINREP_DATA_DIR";
pub const RUNS_FILE: &str = "runs.jsonl";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub digest: String,
    pub command: String,
    pub parameters: Value,
    pub outputs: Value,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl RunRecord {
    pub fn new(digest: String, command: &str, parameters: Value, outputs: Value) -> Self {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Self { digest, command: command.to_owned(), parameters, outputs, timestamp }
    }
}

/// SHA-256 of the compact serialisation of a canonical document.
pub fn digest(canonical: &Value) -> String {
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

/// `$CHAINREP_DATA_DIR`, else `$XDG_DATA_HOME/chainrep`, else
/// `~/.local/share/chainrep`, else `.chainrep` in the working directory.
pub fn data_root() -> PathBuf {
    let from_env = |name: &str| std::env::var_os(name).filter(|v| !v.is_empty()).map(PathBuf::from);
    if let Some(dir) = from_env(DATA_DIR_ENV) {
        return dir;
    }
    if let Some(dir) = from_env("XDG_DATA_HOME") {
        return dir.join("chainrep");
    }
    if let Some(home) = from_env("HOME") {
        return home.join(".local/share/chainrep");
    }
    PathBuf::from(".chainrep")
}

/// Appends one JSON line to `<root>/<digest>/runs.jsonl`.
pub fn append(root: &Path, record: &RunRecord) -> io::Result<PathBuf> {
    let dir = root.join(&record.digest);
    fs::create_dir_all(&dir)?;
    let path = dir.join(RUNS_FILE);
    let mut file = OpenOptions::new().create(true).append(true).open(&path)?;
    let mut line = serde_json::to_string(record).map_err(io::Error::other)?;
    line.push('\n');
    file.write_all(line.as_bytes())?;
    Ok(path)
}

pub fn read_runs(path: &Path) -> io::Result<Vec<RunRecord>> {
    fs::read_to_string(path)?.lines().map(|line| serde_json::from_str(line).map_err(io::Error::other)).collect()
}
