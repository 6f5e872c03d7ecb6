//! Batch persistence: a flat little-endian binary file of f64 draws plus
//! a JSON sidecar carrying the spec, seed, count, scaling parameters and
//! code version.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::batch::SampleBatch;
use super::tridiag::EnsembleSpec;
use crate::expansion::{make_scaling, EnsembleKind};
use crate::painleve::Beta;

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct BatchSidecar {
    pub beta: u8,
    pub kind: String,
    pub n: u32,
    pub p: Option<u32>,
    pub seed: u64,
    pub n_samples: u64,
    pub mu: f64,
    pub sigma: f64,
    pub h: f64,
    pub tau: f64,
    pub version: String,
}

#[derive(Debug, thiserror::Error)]
pub enum PersistError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("sidecar parse failure: {0}")]
    Json(#[from] serde_json::Error),
    #[error("sidecar does not describe a valid ensemble: {0}")]
    BadSidecar(String),
}

fn beta_tag(beta: Beta) -> u8 {
    match beta {
        Beta::One => 1,
        Beta::Two => 2,
        Beta::Four => 4,
        _ => unreachable!("sampling is restricted to beta = 1, 2, 4"),
    }
}

/// Write `<base>.f64` (values) and `<base>.json` (sidecar).
pub fn save_batch(base: &Path, batch: &SampleBatch) -> Result<(), PersistError> {
    let mut raw = Vec::with_capacity(batch.values.len() * 8);
    for v in &batch.values {
        raw.extend_from_slice(&v.to_le_bytes());
    }
    std::fs::File::create(base.with_extension("f64"))?.write_all(&raw)?;
    let sidecar = BatchSidecar {
        beta: beta_tag(batch.spec.beta),
        kind: match batch.spec.kind {
            EnsembleKind::Gaussian => "gaussian".into(),
            EnsembleKind::Laguerre => "laguerre".into(),
        },
        n: batch.spec.n,
        p: batch.spec.p,
        seed: batch.seed,
        n_samples: batch.n_samples,
        mu: batch.scaling.mu,
        sigma: batch.scaling.sigma,
        h: batch.scaling.h,
        tau: batch.scaling.tau,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let json = serde_json::to_string_pretty(&sidecar)?;
    std::fs::File::create(base.with_extension("json"))?.write_all(json.as_bytes())?;
    Ok(())
}

/// Read a batch back; the scaling is recomputed from the sidecar spec and
/// cross-checked against the stored values.
pub fn load_batch(base: &Path) -> Result<SampleBatch, PersistError> {
    let mut raw = Vec::new();
    std::fs::File::open(base.with_extension("f64"))?.read_to_end(&mut raw)?;
    let mut json = String::new();
    std::fs::File::open(base.with_extension("json"))?.read_to_string(&mut json)?;
    let sidecar: BatchSidecar = serde_json::from_str(&json)?;
    let beta = match sidecar.beta {
        1 => Beta::One,
        2 => Beta::Two,
        4 => Beta::Four,
        other => return Err(PersistError::BadSidecar(format!("beta = {other}"))),
    };
    let kind = match sidecar.kind.as_str() {
        "gaussian" => EnsembleKind::Gaussian,
        "laguerre" => EnsembleKind::Laguerre,
        other => return Err(PersistError::BadSidecar(format!("kind = {other}"))),
    };
    let spec = EnsembleSpec { beta, kind, n: sidecar.n, p: sidecar.p };
    let scaling = make_scaling(kind, beta, sidecar.n as f64, sidecar.p.map(|p| p as f64))
        .map_err(|e| PersistError::BadSidecar(e.to_string()))?;
    if (scaling.mu - sidecar.mu).abs() > 1e-12 * sidecar.mu.abs().max(1.0) {
        return Err(PersistError::BadSidecar("scaling mismatch".into()));
    }
    let values: Vec<f64> = raw
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    if values.len() as u64 != sidecar.n_samples {
        return Err(PersistError::BadSidecar(format!(
            "value count {} disagrees with sidecar {}",
            values.len(),
            sidecar.n_samples
        )));
    }
    Ok(SampleBatch { spec, seed: sidecar.seed, n_samples: sidecar.n_samples, scaling, values })
}
