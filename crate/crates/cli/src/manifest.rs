//! Run manifests: a small TOML record written next to every artifact a
//! subcommand produces, so a result can be traced back to the exact tool
//! version, settings, and input files that made it.
//!
//! The `config_hash` covers the subcommand, every resolved setting, and the
//! content hash of every input, in a fixed order — re-running with
//! identical inputs and flags reproduces it bit-for-bit, while any change
//! to either shows up as a different hash. Output files are listed with
//! their own content hashes so reruns can be compared without re-reading
//! the inputs.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::errors::{io_runtime, CliError};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Serialize)]
pub struct FileStamp {
    pub path: String,
    pub sha256: String,
}

/// Controller response at the standard demo error, recorded alongside
/// simulation runs for traceability.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeRecord {
    pub pitch_error_deg: f64,
    pub roll_error_deg: f64,
    /// Commanded speed changes in canonical rotor order, rpm.
    pub delta_rpm: Vec<f64>,
}

#[derive(Debug)]
pub struct Manifest {
    subcommand: &'static str,
    settings: Vec<(String, String)>,
    inputs: Vec<FileStamp>,
    probe: Option<ProbeRecord>,
    outputs: Vec<FileStamp>,
}

impl Manifest {
    pub fn new(subcommand: &'static str) -> Self {
        Manifest {
            subcommand,
            settings: Vec::new(),
            inputs: Vec::new(),
            probe: None,
            outputs: Vec::new(),
        }
    }

    /// Records one resolved setting (flag or config value) under the key.
    pub fn setting(&mut self, key: &str, value: impl ToString) {
        self.settings.push((key.to_string(), value.to_string()));
    }

    /// Records an input by its content. `label` is the path it was read
    /// from, or an `embedded:` name for built-in configuration.
    pub fn input(&mut self, label: impl Into<String>, bytes: &[u8]) {
        self.inputs.push(FileStamp {
            path: label.into(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn set_probe(&mut self, probe: ProbeRecord) {
        self.probe = Some(probe);
    }

    /// Writes one output file and records its content hash.
    pub fn write_output(&mut self, path: &Path, bytes: &[u8]) -> Result<(), CliError> {
        std::fs::write(path, bytes)
            .map_err(|e| io_runtime(&format!("writing {}", path.display()), e))?;
        self.outputs.push(FileStamp {
            path: path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            sha256: sha256_hex(bytes),
        });
        Ok(())
    }

    /// Hash of everything that determines the run's outputs.
    pub fn config_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.subcommand.as_bytes());
        h.update([0]);
        for (k, v) in &self.settings {
            h.update(k.as_bytes());
            h.update(b"=");
            h.update(v.as_bytes());
            h.update([0]);
        }
        for input in &self.inputs {
            h.update(input.sha256.as_bytes());
            h.update([0]);
        }
        hex::encode(h.finalize())
    }

    /// Serializes and writes the manifest itself.
    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let doc = ManifestDoc {
            tool: ToolSection {
                name: "sidewalker",
                version: env!("CARGO_PKG_VERSION"),
            },
            run: RunSection {
                subcommand: self.subcommand,
                timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
                config_hash: self.config_hash(),
                settings: self
                    .settings
                    .iter()
                    .map(|(k, v)| SettingRow {
                        key: k.clone(),
                        value: v.clone(),
                    })
                    .collect(),
            },
            input: &self.inputs,
            probe: self.probe.as_ref(),
            output: &self.outputs,
        };
        let text = toml::to_string_pretty(&doc)
            .map_err(|e| CliError::Runtime(format!("serializing manifest: {e}")))?;
        let mut file = std::fs::File::create(path)
            .map_err(|e| io_runtime(&format!("creating {}", path.display()), e))?;
        file.write_all(text.as_bytes())
            .map_err(|e| io_runtime(&format!("writing {}", path.display()), e))
    }
}

#[derive(Serialize)]
struct ToolSection {
    name: &'static str,
    version: &'static str,
}

#[derive(Serialize)]
struct SettingRow {
    key: String,
    value: String,
}

#[derive(Serialize)]
struct RunSection {
    subcommand: &'static str,
    timestamp: String,
    config_hash: String,
    settings: Vec<SettingRow>,
}

#[derive(Serialize)]
struct ManifestDoc<'a> {
    tool: ToolSection,
    run: RunSection,
    input: &'a [FileStamp],
    #[serde(skip_serializing_if = "Option::is_none")]
    probe: Option<&'a ProbeRecord>,
    output: &'a [FileStamp],
}
