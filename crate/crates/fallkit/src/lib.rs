//! File formats, parallel drivers and the command line for `fallkit-core`.
//!
//! The core crate stays `no_std`; everything that touches files, threads,
//! clocks or the environment lives here.

use std::io::Write;
use std::path::Path;

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod schema;

pub use fallkit_core as core;

/// Writes `contents` to a temporary file next to `path` and renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
