//! Run configuration: command-line flags merged over an optional JSON
//! config file (flags win). Unknown keys in the file are rejected.

use serde::Deserialize;
use softedge::expansion::EnsembleKind;
use softedge::painleve::Beta;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub beta: Option<String>,
    pub kind: Option<String>,
    pub n: Option<f64>,
    pub p: Option<f64>,
    pub m: Option<usize>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub t_step: Option<f64>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub eta: Option<f64>,
    pub output: Option<String>,
    pub filter: Option<String>,
    pub mc_calibration: Option<u64>,
    pub mc_panel: Option<u64>,
    pub mc_decimation: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed config file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid value for `{0}`: {1}")]
    BadValue(&'static str, String),
    #[error("missing required parameter `{0}`")]
    Missing(&'static str),
}

pub fn load_file(path: &str) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn parse_beta(s: &str) -> Result<Beta, ConfigError> {
    match s {
        "1" => Ok(Beta::One),
        "2" => Ok(Beta::Two),
        "4" => Ok(Beta::Four),
        other => Err(ConfigError::BadValue("beta", other.into())),
    }
}

pub fn parse_kind(s: &str) -> Result<EnsembleKind, ConfigError> {
    match s.to_ascii_lowercase().as_str() {
        "gaussian" | "g" => Ok(EnsembleKind::Gaussian),
        "laguerre" | "l" => Ok(EnsembleKind::Laguerre),
        other => Err(ConfigError::BadValue("kind", other.into())),
    }
}

/// `flag.or(file value)` with a final requirement check.
pub fn require<T>(flag: Option<T>, file: Option<T>, name: &'static str) -> Result<T, ConfigError> {
    flag.or(file).ok_or(ConfigError::Missing(name))
}

pub fn optional<T>(flag: Option<T>, file: Option<T>) -> Option<T> {
    flag.or(file)
}
