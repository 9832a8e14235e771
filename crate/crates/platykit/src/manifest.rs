//! JSON run manifests.

use platykit_core::generation::{AuditReport, GenStats, PruneStats};
use serde::Serialize;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    /// Path as given on the command line; `-` is standard input.
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
    pub lines: usize,
}

/// Record of a stream command (filter, canon, check, audit).
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest<V: Serialize, S: Serialize> {
    pub version: &'static str,
    pub command_line: Vec<String>,
    pub subcommand: &'static str,
    pub input: InputDigest,
    pub summary: S,
    pub verdicts: Vec<V>,
    pub wall_seconds: f64,
}

/// Record of one census cell.
#[derive(Debug, Clone, Serialize)]
pub struct CensusManifest {
    pub version: &'static str,
    pub command_line: Vec<String>,
    pub order: usize,
    pub min_girth: usize,
    pub target: &'static str,
    pub count: usize,
    pub prune_stats: PruneStats,
    pub stats: GenStats,
    pub jobs: usize,
    pub wall_seconds: f64,
    pub graph6_file: String,
    pub graph6_sha256: String,
    pub guard_overridden: bool,
    pub audit: Option<AuditReport>,
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    text.push('\n');
    std::fs::write(path, text)
}
