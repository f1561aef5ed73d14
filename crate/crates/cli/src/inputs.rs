//! Input file resolution.
//!
//! Paths are taken as given first; a relative path that does not exist is
//! retried inside `$SIDEWALKER_CONFIG_DIR` when that variable is set, so
//! shared configuration can live in one directory without repeating it on
//! every invocation.

use std::path::{Path, PathBuf};

use crate::errors::CliError;

/// Environment variable naming the default configuration directory.
pub const CONFIG_DIR_ENV: &str = "SIDEWALKER_CONFIG_DIR";

pub fn resolve_input(path: &Path) -> Result<PathBuf, CliError> {
    if path.exists() {
        return Ok(path.to_path_buf());
    }
    if path.is_relative() {
        if let Some(dir) = std::env::var_os(CONFIG_DIR_ENV) {
            let alt = Path::new(&dir).join(path);
            if alt.exists() {
                return Ok(alt);
            }
        }
    }
    Err(CliError::Usage(format!(
        "input file not found: {} (also tried ${CONFIG_DIR_ENV})",
        path.display()
    )))
}

/// Resolves and reads an input file, returning the path actually used.
pub fn read_input(path: &Path) -> Result<(PathBuf, Vec<u8>), CliError> {
    let resolved = resolve_input(path)?;
    let bytes = std::fs::read(&resolved)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", resolved.display())))?;
    Ok((resolved, bytes))
}

pub fn read_input_text(path: &Path) -> Result<(PathBuf, String), CliError> {
    let (resolved, bytes) = read_input(path)?;
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Usage(format!("{} is not valid UTF-8", resolved.display())))?;
    Ok((resolved, text))
}
