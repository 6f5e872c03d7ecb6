//! Tridiagonal and bidiagonal beta-ensemble matrix models and the Sturm
//! bisection eigenvalue machinery.

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use crate::expansion::EnsembleKind;
use crate::painleve::Beta;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SamplerError {
    #[error("beta must be 1, 2 or 4")]
    BadBeta,
    #[error("ensemble dimensions must be positive (n = {0})")]
    BadDimension(u32),
    #[error("Laguerre ensembles need the parameter p")]
    MissingP,
    #[error("Laguerre parameter out of range: alpha = {0} must exceed -1")]
    BadAlpha(f64),
}

/// Symmetric tridiagonal matrix: `diag[i]` on the diagonal, `off[i]`
/// coupling rows `i` and `i + 1`.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x` (Sturm count via the
    /// shifted LDL recurrence).
    pub fn count_below(&self, x: f64) -> usize {
        let n = self.dim();
        let mut count = 0usize;
        let mut d = self.diag[0] - x;
        if d < 0.0 {
            count += 1;
        }
        for i in 1..n {
            let b2 = self.off[i - 1] * self.off[i - 1];
            let mut dd = d;
            if dd == 0.0 {
                dd = f64::MIN_POSITIVE;
            }
            d = (self.diag[i] - x) - b2 / dd;
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Number of eigenvalues strictly above `x`.
    pub fn count_above(&self, x: f64) -> usize {
        self.dim() - self.count_below(x)
    }

    /// Gershgorin bounds on the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `k`-th largest eigenvalue (`k = 1` is the largest), by
    /// bisection on the Sturm count to absolute tolerance
    /// `1e-10 * spectral diameter`.
    pub fn kth_largest(&self, k: usize) -> f64 {
        debug_assert!(k >= 1 && k <= self.dim());
        let (mut lo, mut hi) = self.gershgorin();
        let tol = 1e-10 * (hi - lo).max(1e-30);
        // Invariant: count_above(lo) >= k > count_above(hi).
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if self.count_above(mid) >= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    pub fn largest(&self) -> f64 {
        self.kth_largest(1)
    }
}

fn beta_value(beta: Beta) -> Result<f64, SamplerError> {
    match beta {
        Beta::One => Ok(1.0),
        Beta::Two => Ok(2.0),
        Beta::Four => Ok(4.0),
        _ => Err(SamplerError::BadBeta),
    }
}

fn chi<R: Rng>(rng: &mut R, dof: f64) -> f64 {
    debug_assert!(dof > 0.0);
    // chi_k = sqrt(chi^2_k), chi^2_k ~ Gamma(k/2, scale 2).
    let gamma = Gamma::new(0.5 * dof, 2.0).expect("gamma parameters");
    gamma.sample(rng).sqrt()
}

/// Ensemble description for sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnsembleSpec {
    pub beta: Beta,
    pub kind: EnsembleKind,
    pub n: u32,
    pub p: Option<u32>,
}

impl EnsembleSpec {
    pub fn gaussian(beta: Beta, n: u32) -> Self {
        EnsembleSpec { beta, kind: EnsembleKind::Gaussian, n, p: None }
    }

    pub fn laguerre(beta: Beta, n: u32, p: u32) -> Self {
        EnsembleSpec { beta, kind: EnsembleKind::Laguerre, n, p: Some(p) }
    }

    pub fn validate(&self) -> Result<(), SamplerError> {
        beta_value(self.beta)?;
        if self.n == 0 {
            return Err(SamplerError::BadDimension(self.n));
        }
        if self.kind == EnsembleKind::Laguerre {
            let p = self.p.ok_or(SamplerError::MissingP)?;
            if p == 0 {
                return Err(SamplerError::BadDimension(p));
            }
            let b = beta_value(self.beta)?;
            let (n, p) = (self.n.min(p), self.n.max(p));
            let alpha = b * (p as f64 - n as f64 + 1.0) / 2.0 - 1.0;
            if alpha <= -1.0 {
                return Err(SamplerError::BadAlpha(alpha));
            }
        }
        Ok(())
    }

    /// Draw the tridiagonal model matrix whose spectrum follows the joint
    /// eigenvalue density of this ensemble with the weight convention
    /// `gamma_1 = 1/2`, `gamma_2 = gamma_4 = 1`.
    ///
    /// Gaussian: the symmetric tridiagonal with `N(0,1)` diagonal and
    /// `chi_{beta (n-i)}/sqrt(2)` off-diagonal has eigenvalue weight
    /// `exp(-x^2/2)`; the quaternion/complex convention divides the matrix
    /// by an extra `sqrt(2)`. Laguerre: the Gram matrix of the bidiagonal
    /// chi model has weight `exp(-x/2)`; the extra factor is `1/2`.
    /// Wishart pairs with `p < n` sample the transposed model `(p, n)`,
    /// which shares the nonzero spectrum.
    pub fn sample_matrix<R: Rng>(&self, rng: &mut R) -> SymTridiag {
        let b = beta_value(self.beta).expect("validated");
        match self.kind {
            EnsembleKind::Gaussian => {
                let n = self.n as usize;
                let scale = match self.beta {
                    Beta::One => 1.0,
                    _ => std::f64::consts::FRAC_1_SQRT_2,
                };
                let mut diag = Vec::with_capacity(n);
                let mut off = Vec::with_capacity(n - 1);
                for _ in 0..n {
                    let g: f64 = StandardNormal.sample(rng);
                    diag.push(scale * g);
                }
                for i in 1..n {
                    let dof = b * (n - i) as f64;
                    off.push(scale * chi(rng, dof) * std::f64::consts::FRAC_1_SQRT_2);
                }
                SymTridiag { diag, off }
            }
            EnsembleKind::Laguerre => {
                let p_raw = self.p.expect("validated");
                let (n, p) = (self.n.min(p_raw) as usize, self.n.max(p_raw) as usize);
                let scale = match self.beta {
                    Beta::One => 1.0,
                    _ => std::f64::consts::FRAC_1_SQRT_2,
                };
                // Lower bidiagonal B: main diagonal chi_{beta(p-i+1)},
                // subdiagonal chi_{beta(n-i)}.
                let mut main = Vec::with_capacity(n);
                let mut sub = Vec::with_capacity(n - 1);
                for i in 0..n {
                    main.push(scale * chi(rng, b * (p - i) as f64));
                }
                for i in 0..n.saturating_sub(1) {
                    sub.push(scale * chi(rng, b * (n - 1 - i) as f64));
                }
                // Gram tridiagonal of B.
                let mut diag = Vec::with_capacity(n);
                let mut off = Vec::with_capacity(n - 1);
                for i in 0..n {
                    let c2 = if i > 0 { sub[i - 1] * sub[i - 1] } else { 0.0 };
                    diag.push(main[i] * main[i] + c2);
                }
                for i in 0..n.saturating_sub(1) {
                    off.push(main[i] * sub[i]);
                }
                SymTridiag { diag, off }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::rng::stream_rng;

    #[test]
    fn sturm_count_on_known_matrix() {
        // Eigenvalues of tridiag(1, 2, 1; off 1) for n = 3 with diag 2:
        // 2 - sqrt(2), 2, 2 + sqrt(2).
        let m = SymTridiag { diag: vec![2.0, 2.0, 2.0], off: vec![1.0, 1.0] };
        assert_eq!(m.count_below(0.0), 0);
        assert_eq!(m.count_below(1.0), 1);
        assert_eq!(m.count_below(2.5), 2);
        assert_eq!(m.count_below(4.0), 3);
        assert!((m.largest() - (2.0 + 2f64.sqrt())).abs() < 1e-9);
        assert!((m.kth_largest(2) - 2.0).abs() < 1e-9);
        assert!((m.kth_largest(3) - (2.0 - 2f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn gue_n1_is_standard_normal_of_variance_half() {
        // Single eigenvalue with weight e^{-x^2}: variance 1/2.
        let spec = EnsembleSpec::gaussian(Beta::Two, 1);
        let n = 200_000u64;
        let mut sum = 0.0;
        let mut sum2 = 0.0;
        for i in 0..n {
            let mut rng = stream_rng(11, i);
            let m = spec.sample_matrix(&mut rng);
            let x = m.diag[0];
            sum += x;
            sum2 += x * x;
        }
        let mean = sum / n as f64;
        let var = sum2 / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 0.5).abs() < 0.01, "variance {var}");
    }

    #[test]
    fn goe_n1_is_standard_normal() {
        // Weight e^{-x^2/2}: variance 1.
        let spec = EnsembleSpec::gaussian(Beta::One, 1);
        let n = 200_000u64;
        let mut sum2 = 0.0;
        for i in 0..n {
            let mut rng = stream_rng(13, i);
            let m = spec.sample_matrix(&mut rng);
            sum2 += m.diag[0] * m.diag[0];
        }
        let var = sum2 / n as f64;
        assert!((var - 1.0).abs() < 0.02, "variance {var}");
    }

    #[test]
    fn lue_n1_p1_is_exponential() {
        // Single eigenvalue with weight e^{-x}: mean 1 and variance 1.
        let spec = EnsembleSpec::laguerre(Beta::Two, 1, 1);
        let n = 200_000u64;
        let mut sum = 0.0;
        for i in 0..n {
            let mut rng = stream_rng(17, i);
            let m = spec.sample_matrix(&mut rng);
            sum += m.diag[0];
        }
        let mean = sum / n as f64;
        assert!((mean - 1.0).abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn spec_validation() {
        assert!(EnsembleSpec::gaussian(Beta::Plus, 5).validate().is_err());
        assert!(EnsembleSpec::gaussian(Beta::Two, 0).validate().is_err());
        assert!(EnsembleSpec { beta: Beta::Two, kind: EnsembleKind::Laguerre, n: 5, p: None }
            .validate()
            .is_err());
        assert!(EnsembleSpec::laguerre(Beta::Two, 5, 8).validate().is_ok());
        assert!(EnsembleSpec::laguerre(Beta::Two, 8, 5).validate().is_ok());
    }
}
