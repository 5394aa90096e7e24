use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// Environment variable naming an optional TOML config file.
pub const CONFIG_ENV: &str = "ALTRANK_CONFIG";

/// Tunable knobs. Every field has a default, so a config file may set any subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Groups up to this order are intersected by enumeration.
    pub intersection_threshold: u64,
    /// Seed for the random words tried by the giant certificate search.
    pub seed: u64,
    /// How many words the certificate search may try.
    pub word_bound: usize,
    /// Worker threads for sweeps; 0 means one per core.
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            intersection_threshold: 1_000_000,
            seed: 0,
            word_bound: 10_000,
            jobs: 0,
        }
    }
}

impl Config {
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_toml_str(&text)
    }

    /// Reads the file named by `ALTRANK_CONFIG`, or returns the defaults.
    pub fn from_env() -> Result<Self, ConfigError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::load(Path::new(&path)),
            _ => Ok(Self::default()),
        }
    }
}
