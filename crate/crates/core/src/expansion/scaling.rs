//! Centering, scaling and expansion parameters for the Gaussian and
//! Laguerre ensembles, including the half-integer dimension shifts of the
//! orthogonal and symplectic cases.

use crate::painleve::Beta;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScalingError {
    #[error("ensemble dimension must be positive, got {0}")]
    BadDimension(f64),
    #[error("Laguerre scaling needs the second parameter p")]
    MissingP,
    #[error("beta must be 1, 2 or 4 for ensemble scalings")]
    BadBeta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnsembleKind {
    Gaussian,
    Laguerre,
}

/// The tuple `(mu, sigma, h, tau, n', p')` fixing the soft-edge window of
/// one ensemble. `tau = 0` for Gaussian ensembles.
#[derive(Clone, Copy, Debug)]
pub struct ScalingParams {
    pub kind: EnsembleKind,
    pub mu: f64,
    pub sigma: f64,
    pub h: f64,
    pub tau: f64,
    pub n_eff: f64,
    pub p_eff: Option<f64>,
    /// Weight exponent `gamma_beta`: 1/2 for beta = 1, else 1.
    pub gamma: f64,
}

/// The beta-dependent dimension shift `n'`.
pub fn dim_shift(beta: Beta, n: f64) -> Result<f64, ScalingError> {
    match beta {
        Beta::One => Ok(n - 0.5),
        Beta::Two => Ok(n),
        Beta::Four => Ok(2.0 * n + 0.5),
        _ => Err(ScalingError::BadBeta),
    }
}

pub fn gamma_beta(beta: Beta) -> Result<f64, ScalingError> {
    match beta {
        Beta::One => Ok(0.5),
        Beta::Two | Beta::Four => Ok(1.0),
        _ => Err(ScalingError::BadBeta),
    }
}

/// Scaling parameters from raw, unshifted `(n, p)`.
pub fn make_scaling(
    kind: EnsembleKind,
    beta: Beta,
    n: f64,
    p: Option<f64>,
) -> Result<ScalingParams, ScalingError> {
    if n <= 0.0 {
        return Err(ScalingError::BadDimension(n));
    }
    let gamma = gamma_beta(beta)?;
    let n_eff = dim_shift(beta, n)?;
    match kind {
        EnsembleKind::Gaussian => {
            let mu = (2.0 * n_eff).sqrt();
            let sigma = 2f64.powf(-0.5) * n_eff.powf(-1.0 / 6.0);
            let h = 0.25 * n_eff.powf(-2.0 / 3.0);
            Ok(ScalingParams {
                kind,
                mu,
                sigma,
                h,
                tau: 0.0,
                n_eff,
                p_eff: None,
                gamma,
            })
        }
        EnsembleKind::Laguerre => {
            let p = p.ok_or(ScalingError::MissingP)?;
            if p <= 0.0 {
                return Err(ScalingError::BadDimension(p));
            }
            let p_eff = dim_shift(beta, p)?;
            Ok(ScalingParams::laguerre_symmetric(n_eff, p_eff, gamma))
        }
    }
}

impl ScalingParams {
    /// Symmetric Laguerre parameters for already-shifted `(n', p')`.
    pub fn laguerre_symmetric(n_eff: f64, p_eff: f64, gamma: f64) -> ScalingParams {
        let rn = n_eff.sqrt();
        let rp = p_eff.sqrt();
        let s = rn + rp;
        let r = 1.0 / rn + 1.0 / rp;
        ScalingParams {
            kind: EnsembleKind::Laguerre,
            mu: s * s,
            sigma: s * r.powf(1.0 / 3.0),
            h: 0.25 * r.powf(4.0 / 3.0),
            tau: 4.0 / (s * r),
            n_eff,
            p_eff: Some(p_eff),
            gamma,
        }
    }

    /// Map an eigenvalue to the scaled soft-edge variable.
    pub fn to_scaled(&self, lambda: f64) -> f64 {
        (lambda - self.mu) / self.sigma
    }

    /// Map a scaled variable back to the eigenvalue axis.
    pub fn to_unscaled(&self, t: f64) -> f64 {
        self.mu + self.sigma * t
    }
}
